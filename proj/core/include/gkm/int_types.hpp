#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace gkm {

// All coefficient arithmetic is exact; products of many linear forms overflow
// fixed-width integers quickly.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

// g = gcd(|a|, |b|) >= 0 together with x, y such that x*a + y*b == g.
struct ExtGcd {
  Int g;
  Int x;
  Int y;
};

ExtGcd ext_gcd(Int a, Int b);

// gcd of all entries, >= 0; 0 for the empty or all-zero vector.
Int gcd_all(const std::vector<Int>& v);

}  // namespace gkm
