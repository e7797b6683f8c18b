#include "goorbit/linalg.hpp"

#include <algorithm>
#include <bit>

#include "goorbit/error.hpp"

namespace goorbit {

Vec zero_vec(size_t n) { return Vec(n); }

Vec unit_vec(size_t n, size_t i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector add");
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sub");
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec r(v.size());
  if (c.is_zero()) return r;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = c * v[i];
  return r;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot");
  Scalar s;
  for (size_t i = 0; i < a.size(); ++i) s.add_product(a[i], b[i]);
  return s;
}

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, size_t cols) {
  Mat m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("from_rows");
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols, size_t rows) {
  Mat m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionMismatch("from_cols");
    for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Mat::row(size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vec Mat::col(size_t j) const {
  Vec v(r_);
  for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != c_) throw DimensionMismatch("matrix-vector product");
  Vec r(r_);
  for (size_t j = 0; j < c_; ++j) {
    if (v[j].is_zero()) continue;
    for (size_t i = 0; i < r_; ++i) r[i].add_product((*this)(i, j), v[j]);
  }
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.c_ != b.r_) throw DimensionMismatch("matrix product");
  Mat r(a.r_, b.c_);
  for (size_t i = 0; i < a.r_; ++i)
    for (size_t k = 0; k < a.c_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.c_; ++j) r(i, j).add_product(x, b(k, j));
    }
  return r;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionMismatch("matrix add");
  Mat r(a);
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionMismatch("matrix sub");
  Mat r(a);
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

Mat operator*(const Scalar& c, const Mat& m) {
  Mat r(m.r_, m.c_);
  for (size_t i = 0; i < m.a_.size(); ++i)
    if (!m.a_[i].is_zero()) r.a_[i] = c * m.a_[i];
  return r;
}

bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

Scalar trace(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("trace of non-square matrix");
  Scalar s;
  for (size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  const size_t R = m.rows(), C = m.cols();
  size_t r = 0;
  for (size_t j = 0; j < C && r < R; ++j) {
    // Prefer the pivot with the fewest radical terms to limit coefficient growth.
    size_t best = R;
    int best_weight = 99;
    for (size_t i = r; i < R; ++i) {
      if (m(i, j).is_zero()) continue;
      int w = std::popcount(static_cast<unsigned>(m(i, j).support_mask()));
      if (w < best_weight) {
        best = i;
        best_weight = w;
      }
    }
    if (best == R) continue;
    if (best != r)
      for (size_t k = 0; k < C; ++k) std::swap(m(r, k), m(best, k));
    Scalar inv = m(r, j).inverse();
    for (size_t k = j; k < C; ++k)
      if (!m(r, k).is_zero()) m(r, k) = m(r, k) * inv;
    for (size_t i = 0; i < R; ++i) {
      if (i == r || m(i, j).is_zero()) continue;
      Scalar f = -m(i, j);
      for (size_t k = j; k < C; ++k)
        if (!m(r, k).is_zero()) m(i, k).add_product(f, m(r, k));
    }
    pivots.push_back(j);
    ++r;
  }
  return pivots;
}

size_t rank(Mat m) { return rref(m).size(); }

std::vector<Vec> kernel(const Mat& m) {
  Mat e(m);
  auto piv = rref(e);
  const size_t C = m.cols();
  std::vector<bool> is_piv(C, false);
  for (size_t p : piv) is_piv[p] = true;
  std::vector<Vec> out;
  for (size_t f = 0; f < C; ++f) {
    if (is_piv[f]) continue;
    Vec v(C);
    v[f] = Scalar(1);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -e(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

SolveResult solve(const Mat& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length");
  const size_t R = a.rows(), C = a.cols();
  Mat aug(R, C + 1);
  for (size_t i = 0; i < R; ++i) {
    for (size_t j = 0; j < C; ++j) aug(i, j) = a(i, j);
    aug(i, C) = b[i];
  }
  auto piv = rref(aug);
  SolveResult res;
  res.rank_augmented = piv.size();
  res.rank_a = (!piv.empty() && piv.back() == C) ? piv.size() - 1 : piv.size();
  std::vector<bool> is_piv(C, false);
  for (size_t p : piv)
    if (p < C) is_piv[p] = true;
  for (size_t f = 0; f < C; ++f) {
    if (is_piv[f]) continue;
    Vec v(C);
    v[f] = Scalar(1);
    for (size_t r = 0; r < res.rank_a; ++r) v[piv[r]] = -aug(r, f);
    res.null_basis.push_back(std::move(v));
  }
  if (res.rank_a == res.rank_augmented) {
    Vec x(C);
    for (size_t r = 0; r < res.rank_a; ++r) x[piv[r]] = aug(r, C);
    res.particular = std::move(x);
  }
  return res;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

bool is_symmetric(const Mat& m) {
  if (m.rows() != m.cols()) return false;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_positive_definite(const Mat& sym) {
  if (!is_symmetric(sym)) return false;
  Mat a(sym);
  const size_t n = a.rows();
  for (size_t k = 0; k < n; ++k) {
    if (a(k, k).sign() <= 0) return false;
    Scalar inv = a(k, k).inverse();
    for (size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Scalar f = -(a(i, k) * inv);
      for (size_t j = k; j < n; ++j)
        if (!a(k, j).is_zero()) a(i, j).add_product(f, a(k, j));
    }
  }
  return true;
}

namespace {

Poly trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long long>(i)));
  return trim(d);
}

// Quotient and remainder of a / b.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  a = trim(a);
  if (b.empty()) throw DivisionByZero();
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1);
  Rational lead_inv = b.back().inverse();
  for (size_t k = a.size(); k-- >= b.size();) {
    Rational c = a[k] * lead_inv;
    q[k - (b.size() - 1)] = c;
    if (c.is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) a[k - (b.size() - 1) + j] -= c * b[j];
  }
  return {trim(q), trim(a)};
}

Poly gcd(Poly a, Poly b) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Rational eval(const Poly& p, const Rational& x) {
  Rational v;
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

Poly charpoly(const Mat& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("charpoly of non-square matrix");
  const size_t n = a.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1);
  Mat m(n, n);
  for (size_t k = 1; k <= n; ++k) {
    Mat next = a * m;
    for (size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    Scalar t = trace(a * m);
    c[n - k] = -(t * Rational(1, static_cast<long long>(k)));
  }
  Poly p;
  for (auto& s : c) {
    if (!s.is_rational()) throw Error("characteristic polynomial has an irrational coefficient");
    p.push_back(s.rational());
  }
  return p;
}

std::vector<Rational> rational_roots(const Poly& p0) {
  Poly p = trim(p0);
  if (p.empty()) throw Error("rational_roots of the zero polynomial");
  Poly g = gcd(p, derivative(p));
  Poly sq = g.empty() || g.size() == 1 ? p : divmod(p, g).first;
  std::vector<Rational> roots;
  // Strip the root 0.
  while (sq.size() > 1 && sq[0].is_zero()) {
    if (roots.empty() || !roots.back().is_zero()) roots.push_back(Rational());
    sq.erase(sq.begin());
  }
  if (sq.size() <= 1) return roots;
  mpz_class l = 1;
  for (auto& c : sq) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> ic;
  for (auto& c : sq) ic.push_back(mpz_class(c.num() * (l / c.den())));
  for (auto& u : divisors(ic.front()))
    for (auto& v : divisors(ic.back()))
      for (int s : {1, -1}) {
        Rational x(mpq_class(mpz_class(s * u), v));
        if (eval(sq, x).is_zero() && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RationalSpectrum rational_spectrum(const Mat& m) {
  Poly p = charpoly(m);
  RationalSpectrum s;
  s.values = rational_roots(p);
  for (auto& r : s.values) {
    Poly lin{-r, Rational(1)};
    Poly cur = p;
    while (true) {
      auto [q, rem] = divmod(cur, lin);
      if (!rem.empty()) break;
      ++s.degree_covered;
      cur = q;
    }
  }
  return s;
}

}  // namespace goorbit
