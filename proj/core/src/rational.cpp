#include "permpat/rational.hpp"

#include <numeric>

#include "permpat/checked.hpp"
#include "permpat/error.hpp"

namespace permpat {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow("rational multiplication overflow");
  return out;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflow("rational addition overflow");
  return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InternalConsistency("rational with zero denominator");
  if (den < 0) {
    num = mul(num, -1);
    den = mul(den, -1);
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational operator+(const Rational& a, const Rational& b) {
  const std::int64_t g = std::gcd(a.den_, b.den_);
  return Rational(add(mul(a.num_, b.den_ / g), mul(b.num_, a.den_ / g)), mul(a.den_, b.den_ / g));
}

Rational operator-(const Rational& a, const Rational& b) { return a + Rational(mul(b.num_, -1), b.den_); }

Rational operator*(const Rational& a, const Rational& b) {
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  const std::int64_t d1 = g1 == 0 ? 1 : g1;
  const std::int64_t d2 = g2 == 0 ? 1 : g2;
  return Rational(mul(a.num_ / d1, b.num_ / d2), mul(a.den_ / d2, b.den_ / d1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InternalConsistency("rational division by zero");
  return a * Rational(b.den_, b.num_);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational pow2(int e) {
  if (e >= 62 || e <= -62) throw ArithmeticOverflow("2^" + std::to_string(e) + " out of range");
  if (e >= 0) return Rational(std::int64_t{1} << e);
  return Rational(1, std::int64_t{1} << -e);
}

Rational choose(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return Rational(0);
  const std::uint64_t c = binomial(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  if (c > static_cast<std::uint64_t>(INT64_MAX)) throw ArithmeticOverflow("binomial out of range");
  return Rational(static_cast<std::int64_t>(c));
}

}  // namespace permpat
