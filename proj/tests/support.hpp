#pragma once

#include "hecke/hecke.hpp"

// Scalar shorthands for test data.
inline hecke::GaussianRational q(long long num, long long den = 1) {
  return hecke::GaussianRational(hecke::make_rational(num, den));
}

inline hecke::GaussianRational qi(long long re, long long im) {
  return {hecke::Rational(re), hecke::Rational(im)};
}
