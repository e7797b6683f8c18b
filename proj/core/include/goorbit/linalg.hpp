#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "goorbit/field.hpp"

namespace goorbit {

using Vec = std::vector<Scalar>;

Vec zero_vec(size_t n);
Vec unit_vec(size_t n, size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
Scalar dot(const Vec& a, const Vec& b);

// Dense row-major matrix over K.
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  static Mat identity(size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, size_t cols);
  static Mat from_cols(const std::vector<Vec>& cols, size_t rows);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  Scalar& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const Scalar& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  Vec row(size_t i) const;
  Vec col(size_t j) const;
  Mat transpose() const;
  bool is_zero() const;
  Vec apply(const Vec& v) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Scalar& c, const Mat& m);
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

Scalar trace(const Mat& m);

// Reduced row echelon form in place (Gauss-Jordan, pivots scaled to 1).
// Returns the pivot columns.
std::vector<size_t> rref(Mat& m);
size_t rank(Mat m);
// Basis of {x : m x = 0}.
std::vector<Vec> kernel(const Mat& m);

struct SolveResult {
  std::optional<Vec> particular;  // set iff consistent
  std::vector<Vec> null_basis;
  size_t rank_a = 0;
  size_t rank_augmented = 0;
};
SolveResult solve(const Mat& a, const Vec& b);

std::optional<Mat> inverse(const Mat& m);

// True iff the symmetric matrix is positive definite; exact LDL^T pivot signs.
bool is_positive_definite(const Mat& sym);
bool is_symmetric(const Mat& m);

// Polynomials with rational coefficients, lowest degree first.
using Poly = std::vector<Rational>;

// Characteristic polynomial det(tI - m), Faddeev-LeVerrier. Throws if a
// coefficient is not rational.
Poly charpoly(const Mat& m);
// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const Poly& p);
// Roots in Q, with the total degree they account for.
struct RationalSpectrum {
  std::vector<Rational> values;  // distinct, ascending
  size_t degree_covered = 0;     // sum of algebraic multiplicities
};
RationalSpectrum rational_spectrum(const Mat& m);

}  // namespace goorbit
