#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace kummer {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// Fraction-free elimination on rank-6 Gram matrices already overflows
// 64-bit intermediates, so fixed-width types are not an option.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

inline Int gcd_all(const std::vector<Int>& xs) {
  Int g = 0;
  for (const Int& x : xs) g = boost::multiprecision::gcd(g, x);
  return g;
}

// Narrowing conversion used when emitting JSON; report entries are small.
inline long long to_int64(const Int& x) {
  if (x > std::numeric_limits<long long>::max() ||
      x < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer too large for 64-bit output");
  return static_cast<long long>(x);
}

}  // namespace kummer
