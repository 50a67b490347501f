#pragma once

#include <cstdint>
#include <string>

namespace permpat {

/// Exact rational over int64 with overflow-checked arithmetic; always reduced
/// with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;

  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// 2^e for any integer e (negative e gives 1/2^-e).
Rational pow2(int e);

/// C(a, b) as an integer rational; zero when b < 0 or b > a, and for a < 0.
Rational choose(std::int64_t a, std::int64_t b);

}  // namespace permpat
