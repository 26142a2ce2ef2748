#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace xorcert {

using Rational = boost::rational<std::int64_t>;

/// Exact binary rational numerator / 2^log_denominator.
///
/// Always kept in canonical form: the numerator is odd, or the value is zero
/// with log_denominator 0. Arithmetic is exact; any result that does not fit
/// (|numerator| >= 2^62 or log_denominator > 62) throws std::overflow_error
/// instead of rounding.
class Dyadic {
public:
  static constexpr unsigned kMaxLogDenominator = 62;

  constexpr Dyadic() = default;
  Dyadic(std::int64_t integer) : Dyadic(integer, 0) {}  // NOLINT: implicit on purpose
  Dyadic(std::int64_t numerator, unsigned log_denominator);

  /// 2^-k.
  static Dyadic pow2_inv(unsigned k) { return Dyadic(1, k); }

  std::int64_t numerator() const { return num_; }
  unsigned log_denominator() const { return log_den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Dyadic operator-() const;
  Dyadic abs() const { return num_ < 0 ? -*this : *this; }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
  Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

  /// Exact quotient. Throws std::domain_error when the divisor is zero or the
  /// quotient is not a dyadic rational.
  friend Dyadic operator/(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  double to_double() const;
  Rational to_rational() const;
  /// "num" or "num/2^k".
  std::string to_string() const;

private:
  std::int64_t num_ = 0;
  unsigned log_den_ = 0;
};

}  // namespace xorcert
