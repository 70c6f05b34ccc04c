#include "rookdraw/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace rookdraw {

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s));
  BigInt p(s.substr(0, slash));
  BigInt q(s.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rat(p, q);
}

int orientation(const Pt& a, const Pt& b, const Pt& c) {
  Rat det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (det > 0) return 1;
  if (det < 0) return -1;
  return 0;
}

bool collinear(const Pt& a, const Pt& b, const Pt& c) {
  return orientation(a, b, c) == 0;
}

bool strictly_on_segment(const Pt& a, const Pt& b, const Pt& c) {
  if (c == a || c == b) return false;
  if (orientation(a, b, c) != 0) return false;
  // On the line; inside iff between in the dominant axis.
  if (a.x != b.x)
    return (std::min(a.x, b.x) < c.x) && (c.x < std::max(a.x, b.x));
  return (std::min(a.y, b.y) < c.y) && (c.y < std::max(a.y, b.y));
}

namespace {

bool on_closed_segment(const Pt& a, const Pt& b, const Pt& c) {
  if (orientation(a, b, c) != 0) return false;
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_closed_segment(a, b, c)) return true;
  if (o2 == 0 && on_closed_segment(a, b, d)) return true;
  if (o3 == 0 && on_closed_segment(c, d, a)) return true;
  if (o4 == 0 && on_closed_segment(c, d, b)) return true;
  return false;
}

bool segments_cross_improperly(const Pt& a, const Pt& b, const Pt& c,
                               const Pt& d) {
  bool share_ac = (a == c), share_ad = (a == d);
  bool share_bc = (b == c), share_bd = (b == d);
  int shared = int(share_ac) + int(share_ad) + int(share_bc) + int(share_bd);

  if (shared == 0) return segments_intersect(a, b, c, d);

  if (shared == 2) {
    // Identical segments overlap everywhere.
    return true;
  }

  // Exactly one shared endpoint p; any contact besides p is improper.
  Pt p = share_ac || share_ad ? a : b;
  const Pt& e1 = (p == a) ? b : a;  // other end of (a,b)
  const Pt& e2 = (share_ac || share_bc) ? d : c;  // other end of (c,d)
  // Overlap along a common line, or one endpoint interior to the other.
  if (strictly_on_segment(a, b, e2)) return true;
  if (strictly_on_segment(c, d, e1)) return true;
  // Collinear opposite rays cannot otherwise touch; proper crossings away
  // from p are impossible when p is shared unless an endpoint is interior,
  // which was handled above.
  (void)p;
  return false;
}

bool slope_at_most(const Pt& a, const Pt& b, const Rat& bound) {
  Rat dx = b.x - a.x;
  Rat dy = b.y - a.y;
  if (dx == 0) throw std::invalid_argument("slope of a vertical segment");
  if (dx < 0) {
    dx = -dx;
    dy = -dy;
  }
  return dy <= bound * dx;
}

}  // namespace rookdraw
