#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "graphpt/error.hpp"

namespace graphpt {

// Exact rational number on 64-bit numerator/denominator, always normalized
// (gcd 1, denominator positive). Intermediate products use 128-bit arithmetic;
// values that do not reduce back into 64 bits raise internal_error.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d) { *this = reduce(n, d); }

  static Rational reduce(__int128 n, __int128 d) {
    if (d == 0) fail(errc::invalid_argument, "rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 an = n < 0 ? -n : n;
    __int128 g = gcd128(an, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = static_cast<__int128>(INT64_MIN);
    constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
    if (n < lo || n > hi || d > hi) fail(errc::internal_error, "rational overflow");
    Rational r;
    r.num = static_cast<long long>(n);
    r.den = static_cast<long long>(d);
    return r;
  }

  Rational operator+(const Rational& o) const {
    return reduce(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
                  static_cast<__int128>(den) * o.den);
  }
  Rational operator-(const Rational& o) const {
    return reduce(static_cast<__int128>(num) * o.den - static_cast<__int128>(o.num) * den,
                  static_cast<__int128>(den) * o.den);
  }
  Rational operator*(const Rational& o) const {
    return reduce(static_cast<__int128>(num) * o.num, static_cast<__int128>(den) * o.den);
  }
  Rational operator/(const Rational& o) const {
    if (o.num == 0) fail(errc::invalid_argument, "rational division by zero");
    return reduce(static_cast<__int128>(num) * o.den, static_cast<__int128>(den) * o.num);
  }
  Rational operator-() const {
    Rational r;
    r.num = -num;
    r.den = den;
    return r;
  }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
  }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }
};

}  // namespace graphpt
