#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <memory>
#include <string>
#include <string_view>

namespace goorbit {

// Arbitrary-precision rational. Values whose numerator and denominator fit
// in 62 bits are kept inline; anything larger spills into an mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : Rational(static_cast<long long>(v)) {}
  Rational(long v) : Rational(static_cast<long long>(v)) {}
  Rational(long long v);
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o);
  Rational(Rational&& o) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept = default;
  ~Rational() = default;

  // Accepts "p", "-p", "p/q".
  static Rational parse(std::string_view s);

  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  mpz_class num() const;
  mpz_class den() const;
  double to_double() const;
  std::string str() const;

  Rational operator-() const;
  Rational inverse() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  static Rational from_big(mpq_class q);

  int64_t n_ = 0;
  int64_t d_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace goorbit
