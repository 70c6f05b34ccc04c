#pragma once

#include "rookdraw/numeric.hpp"

namespace rookdraw {

struct Pt {
  Rat x, y;

  Pt() = default;
  Pt(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
  Pt(long long px, long long py) : x(px), y(py) {}

  bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Pt& o) const { return !(*this == o); }
};

// Sign of the cross product (b-a) x (c-a): >0 left turn, <0 right turn.
int orientation(const Pt& a, const Pt& b, const Pt& c);

bool collinear(const Pt& a, const Pt& b, const Pt& c);

// c lies strictly inside segment [a,b] (a != b assumed).
bool strictly_on_segment(const Pt& a, const Pt& b, const Pt& c);

// Closed segments [a,b] and [c,d] share at least one point.
bool segments_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

// Intersection is more than the shared endpoint(s): two segments that meet
// only at a common endpoint are fine, anything else is a violation.
bool segments_cross_improperly(const Pt& a, const Pt& b, const Pt& c,
                               const Pt& d);

// Exact slope comparison: slope(a,b) <= bound, with a.x != b.x.
bool slope_at_most(const Pt& a, const Pt& b, const Rat& bound);

}  // namespace rookdraw
