#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace rookdraw {

// Exact arithmetic everywhere: certification never touches floating point.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline long long to_ll(const Rat& r) {
  return static_cast<long long>(numerator(r));
}

inline Rat rat(long long p, long long q = 1) { return Rat(p, q); }

// "p" for integers, "p/q" otherwise (q > 0, canonical form).
inline std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (!is_integer(r)) s += "/" + denominator(r).str();
  return s;
}

Rat rat_from_string(const std::string& s);

}  // namespace rookdraw
