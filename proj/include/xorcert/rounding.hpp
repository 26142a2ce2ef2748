#pragma once

#include <cmath>

#include "xorcert/dyadic.hpp"

namespace xorcert::rounding {

// A round-to-nearest result is within half an ulp of the exact value;
// |x| 2^-52 is at least one ulp, so the shifted value is a directed bound.
// The 2^-1074 term covers underflow.
inline double up(double x) { return x + (std::fabs(x) * 0x1p-52 + 0x1p-1074); }
inline double down(double x) { return x - (std::fabs(x) * 0x1p-52 + 0x1p-1074); }

// A floating-point sum that comes out zero is exact, and so is a product or
// quotient with a zero operand.
inline double add_up(double a, double b) {
  const double s = a + b;
  return s == 0.0 ? 0.0 : up(s);
}
inline double add_down(double a, double b) {
  const double s = a + b;
  return s == 0.0 ? 0.0 : down(s);
}
inline double mul_up(double a, double b) { return a == 0.0 || b == 0.0 ? 0.0 : up(a * b); }
inline double div_up(double a, double b) { return a == 0.0 ? 0.0 : up(a / b); }
inline double sqrt_up(double a) { return a <= 0.0 ? 0.0 : up(std::sqrt(a)); }
inline double sqrt_down(double a) { return a <= 0.0 ? 0.0 : down(std::sqrt(a)); }

/// Upper bound on a^(1/p) for a >= 0; pow is not correctly rounded, so the
/// result is widened by a relative 1e-12.
inline double root_up(double a, unsigned p) {
  if (a <= 0.0) return 0.0;
  if (p == 1) return a;
  return up(std::pow(a, 1.0 / p) * (1.0 + 1e-12));
}

double rational_up(const Rational& q);
double rational_down(const Rational& q);
double dyadic_up(const Dyadic& q);
double dyadic_down(const Dyadic& q);

/// Closed interval with outward-rounded operations.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval point(double v) { return {v, v}; }
  double magnitude() const { return std::max(std::fabs(lo), std::fabs(hi)); }
  /// Upper bound on the square of any point in the interval.
  double square_up() const {
    const double m = magnitude();
    return mul_up(m, m);
  }
};

inline Interval operator+(const Interval& a, const Interval& b) { return {add_down(a.lo, b.lo), add_up(a.hi, b.hi)}; }

inline Interval operator*(const Interval& a, const Interval& b) {
  const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {down(std::min(std::min(p1, p2), std::min(p3, p4))), up(std::max(std::max(p1, p2), std::max(p3, p4)))};
}

}  // namespace xorcert::rounding
