#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>

#include "hecke/errors.hpp"

namespace hecke {

using Integer = boost::multiprecision::cpp_int;

// Reduced fraction with positive denominator; cpp_rational keeps the
// canonical form after every operation, so structural equality is value
// equality.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw InvalidScalar("rational with zero denominator");
  }
  // Division canonicalizes sign and gcd; the two-argument constructor does
  // not accept negative denominators.
  return Rational(num) / Rational(den);
}

// Element of the Gaussian rationals Q(i), the exact coefficient field for
// every monodromy datum in the engine.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(int n) : re(n) {}  // NOLINT: integer literals are scalars
  GaussianRational(long long n) : re(n) {}
  explicit GaussianRational(Rational real) : re(std::move(real)) {}
  GaussianRational(Rational real, Rational imag)
      : re(std::move(real)), im(std::move(imag)) {}

  static GaussianRational zero() { return GaussianRational(); }
  static GaussianRational one() { return GaussianRational(1); }
  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }
};

inline GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
  return {a.re + b.re, a.im + b.im};
}

inline GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
  return {a.re - b.re, a.im - b.im};
}

inline GaussianRational operator-(const GaussianRational& a) {
  return {-a.re, -a.im};
}

inline GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline GaussianRational conj(const GaussianRational& a) { return {a.re, -a.im}; }

// |a|^2 as a rational; zero iff a is zero.
inline Rational norm(const GaussianRational& a) { return a.re * a.re + a.im * a.im; }

inline GaussianRational inv(const GaussianRational& a) {
  if (a.is_zero()) {
    throw InvalidScalar("inverse of zero");
  }
  const Rational n = norm(a);
  return {a.re / n, -a.im / n};
}

inline GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  return a * inv(b);
}

inline GaussianRational& operator+=(GaussianRational& a, const GaussianRational& b) {
  a = a + b;
  return a;
}

inline GaussianRational& operator*=(GaussianRational& a, const GaussianRational& b) {
  a = a * b;
  return a;
}

// Integer power with exact inverses for negative exponents.
inline GaussianRational pow(const GaussianRational& a, long long k) {
  GaussianRational base = k < 0 ? inv(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  GaussianRational acc = GaussianRational::one();
  while (e > 0) {
    if (e & 1ULL) {
      acc = acc * base;
    }
    base = base * base;
    e >>= 1ULL;
  }
  return acc;
}

inline std::string to_string(const Rational& r) {
  return r.str();
}

inline std::string to_string(const GaussianRational& a) {
  if (a.im == 0) {
    return to_string(a.re);
  }
  std::string s = to_string(a.re);
  s += (a.im < 0) ? "-" : "+";
  Rational mag = a.im < 0 ? Rational(-a.im) : a.im;
  if (mag != 1) {
    s += to_string(mag);
  }
  s += "i";
  return s;
}

}  // namespace hecke
