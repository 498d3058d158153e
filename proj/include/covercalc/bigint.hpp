#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace covercalc {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

inline BigInt gcd_big(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(abs_big(a), abs_big(b));
}

inline BigInt pow_big(std::int64_t base, std::int64_t exp) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

// Narrowing conversion; throws std::overflow_error when v does not fit.
std::int64_t to_int64(const BigInt& v);

}  // namespace covercalc
