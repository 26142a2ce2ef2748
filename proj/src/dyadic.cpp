#include "xorcert/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace xorcert {
namespace {

using Wide = __int128;

constexpr std::int64_t kNumLimit = std::int64_t{1} << 62;

Dyadic make_canonical(Wide num, unsigned log_den) {
  if (num == 0) return Dyadic{};
  while (log_den > 0 && (num & 1) == 0) {
    num /= 2;
    --log_den;
  }
  if (num >= kNumLimit || num <= -kNumLimit || log_den > Dyadic::kMaxLogDenominator)
    throw std::overflow_error("dyadic value out of representable range");
  return Dyadic(static_cast<std::int64_t>(num), log_den);
}

Wide shifted(std::int64_t num, unsigned shift) {
  if (shift >= 64) throw std::overflow_error("dyadic alignment shift too large");
  Wide v = num;
  for (unsigned i = 0; i < shift; ++i) v *= 2;
  return v;
}

}  // namespace

Dyadic::Dyadic(std::int64_t numerator, unsigned log_denominator) {
  if (numerator == 0) return;
  while (log_denominator > 0 && (numerator & 1) == 0) {
    numerator /= 2;
    --log_denominator;
  }
  if (numerator >= kNumLimit || numerator <= -kNumLimit ||
      log_denominator > kMaxLogDenominator)
    throw std::overflow_error("dyadic value out of representable range");
  num_ = numerator;
  log_den_ = log_denominator;
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -num_;
  return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const unsigned l = std::max(a.log_den_, b.log_den_);
  const Wide sum = shifted(a.num_, l - a.log_den_) + shifted(b.num_, l - b.log_den_);
  return make_canonical(sum, l);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return make_canonical(Wide{a.num_} * Wide{b.num_}, a.log_den_ + b.log_den_);
}

Dyadic operator/(const Dyadic& a, const Dyadic& b) {
  if (b.is_zero()) throw std::domain_error("dyadic division by zero");
  // b = odd * 2^(twos - b.log_den)
  std::int64_t odd = b.num_;
  int twos = 0;
  while ((odd & 1) == 0) {
    odd /= 2;
    ++twos;
  }
  if (a.num_ % odd != 0) throw std::domain_error("dyadic quotient is not a dyadic rational");
  const std::int64_t q = a.num_ / odd;
  const int exponent = static_cast<int>(b.log_den_) - twos - static_cast<int>(a.log_den_);
  if (exponent >= 0) return make_canonical(shifted(q, static_cast<unsigned>(exponent)), 0);
  return make_canonical(q, static_cast<unsigned>(-exponent));
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(num_), -static_cast<int>(log_den_)); }

Rational Dyadic::to_rational() const { return Rational(num_, std::int64_t{1} << log_den_); }

std::string Dyadic::to_string() const {
  if (log_den_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/2^" + std::to_string(log_den_);
}

}  // namespace xorcert
