#pragma once

#include <array>
#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "goorbit/rational.hpp"

namespace goorbit {

// Closed rational interval [lo, hi].
struct Interval {
  mpq_class lo;
  mpq_class hi;

  mpq_class width() const { return hi - lo; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  double midpoint() const { return mpq_class((lo + hi) / 2).get_d(); }
};

// Element of K = Q(r2, r3, r5), stored on the basis
//   1, r2, r3, r5, r6, r10, r15, r30.
class Scalar {
 public:
  static constexpr int kDim = 8;
  // Squarefree radicand of each basis element, in storage order.
  static constexpr std::array<int, kDim> kRadicand{1, 2, 3, 5, 6, 10, 15, 30};

  Scalar() = default;
  Scalar(int v) : Scalar(Rational(v)) {}
  Scalar(long v) : Scalar(Rational(v)) {}
  Scalar(long long v) : Scalar(Rational(v)) {}
  Scalar(const Rational& q);
  Scalar(long long num, long long den) : Scalar(Rational(num, den)) {}

  // c * sqrt(radicand); radicand must be one of kRadicand.
  static Scalar radical(int radicand, const Rational& c = Rational(1));
  // Parses the serialized form and the looser CLI literal syntax
  // ("2", "1/3", "r2", "3*r2", "-r6 + 1/2", "p0 + p1*r2 + ...").
  static Scalar parse(std::string_view s);

  const Rational& coeff(int i) const { return c_[i]; }
  void set_coeff(int i, const Rational& v);

  bool is_zero() const { return mask_ == 0; }
  bool is_rational() const { return (mask_ & 0xFE) == 0; }
  bool is_one() const { return mask_ == 1 && c_[0].is_one(); }
  // Only meaningful when is_rational().
  const Rational& rational() const { return c_[0]; }
  uint8_t support_mask() const { return mask_; }

  int sign() const;
  Interval approx(unsigned bits) const;
  double to_double() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
  // this += a * b without a temporary for the product.
  void add_product(const Scalar& a, const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Exact form "p0 + p1*r2 + ... + p7*r30" (all eight terms).
  std::string str() const;
  // Short human form, e.g. "2*r3 - 1/2".
  std::string pretty() const;

 private:
  void refresh_mask();

  std::array<Rational, kDim> c_{};
  uint8_t mask_ = 0;
};

Scalar operator*(const Scalar& a, const Rational& b);

// Square root in K of a nonnegative rational, when one exists.
std::optional<Scalar> sqrt_in_field(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace goorbit
