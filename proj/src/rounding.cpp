#include "xorcert/rounding.hpp"

namespace xorcert::rounding {

namespace {

// Integers up to 2^53 convert exactly; the quotient then rounds once.
double convert(const Rational& q, bool upward) {
  const double num = static_cast<double>(q.numerator());
  const double den = static_cast<double>(q.denominator());
  const bool exact_parts = std::fabs(num) <= 9007199254740992.0 && den <= 9007199254740992.0;
  const double v = num / den;
  if (exact_parts) return upward ? up(v) : down(v);
  // Each conversion can be off by half an ulp too; three steps cover it.
  return upward ? up(up(up(v))) : down(down(down(v)));
}

}  // namespace

double rational_up(const Rational& q) {
  if (q.numerator() == 0) return 0.0;
  return convert(q, true);
}

double rational_down(const Rational& q) {
  if (q.numerator() == 0) return 0.0;
  return convert(q, false);
}

double dyadic_up(const Dyadic& q) {
  const double v = q.to_double();
  return std::fabs(static_cast<double>(q.numerator())) <= 9007199254740992.0 ? v : up(v);
}

double dyadic_down(const Dyadic& q) {
  const double v = q.to_double();
  return std::fabs(static_cast<double>(q.numerator())) <= 9007199254740992.0 ? v : down(v);
}

}  // namespace xorcert::rounding
