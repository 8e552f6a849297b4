#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace shadowdg::exact {

/// Arbitrary-precision rational, always reduced with a positive denominator.
using BigRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigRational rational(long long num, long long den = 1) {
  if (den < 0) return BigRational(-BigInt(num), -BigInt(den));  // backend rejects negative denominators
  return BigRational(BigInt(num), BigInt(den));
}

inline BigInt numerator_of(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const BigRational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const BigRational& q) {
  const BigInt den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

inline BigRational factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return BigRational(f);
}

inline BigRational pow(const BigRational& base, unsigned e) {
  BigRational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace shadowdg::exact
