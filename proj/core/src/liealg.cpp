#include "goorbit/liealg.hpp"

#include <algorithm>

#include "goorbit/error.hpp"

namespace goorbit {

namespace {

bool structure_is_zero(const StructureTensor& t) {
  return std::all_of(t.begin(), t.end(), [](const auto& cell) { return cell.empty(); });
}

void accumulate(Vec& out, const std::vector<BracketTerm>& terms, const Scalar& coef) {
  for (const auto& t : terms) out[t.k].add_product(coef, t.c);
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels, StructureTensor tensor,
                       std::optional<Mat> q_form, Scalar trace_scale, bool validate)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      structure_(std::move(tensor)),
      q_(std::move(q_form)),
      trace_scale_(std::move(trace_scale)) {
  check_shape();
  // Drop explicit zero coefficients so that supports are exact.
  for (auto& cell : structure_)
    cell.erase(std::remove_if(cell.begin(), cell.end(), [](const BracketTerm& t) { return t.c.is_zero(); }),
               cell.end());
  if (!validate) return;
  const size_t n = dim();
  for (size_t i = 0; i < n; ++i) {
    if (!structure(i, i).empty()) throw ConsistencyError(name_ + ": [e_i, e_i] != 0 for " + labels_[i]);
    for (size_t j = i + 1; j < n; ++j) {
      Vec a(n), b(n);
      accumulate(a, structure(i, j), Scalar(1));
      accumulate(b, structure(j, i), Scalar(1));
      if (a + b != Vec(n))
        throw ConsistencyError(name_ + ": bracket not antisymmetric on " + labels_[i] + ", " + labels_[j]);
    }
  }
  if (auto v = jacobi_violation())
    throw ConsistencyError(name_ + ": Jacobi identity fails on (" + labels_[(*v)[0]] + ", " + labels_[(*v)[1]] +
                           ", " + labels_[(*v)[2]] + ")");
  if (q_) {
    if (!is_symmetric(*q_)) throw ConsistencyError(name_ + ": invariant form is not symmetric");
    if (!is_positive_definite(Scalar(-1) * *q_)) throw ConsistencyError(name_ + ": invariant form is not negative definite");
    if (auto v = invariance_violation())
      throw ConsistencyError(name_ + ": invariant form is not ad-invariant at (" + labels_[(*v)[0]] + ", " +
                             labels_[(*v)[1]] + ", " + labels_[(*v)[2]] + ")");
  }
}

void LieAlgebra::check_shape() const {
  const size_t n = dim();
  if (structure_.size() != n * n) throw DimensionMismatch(name_ + ": structure tensor has wrong size");
  for (const auto& cell : structure_)
    for (const auto& t : cell)
      if (t.k >= n) throw DimensionMismatch(name_ + ": structure index out of range");
  if (q_ && (q_->rows() != n || q_->cols() != n)) throw DimensionMismatch(name_ + ": invariant form has wrong size");
}

size_t LieAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(name_ + ": no basis element '" + label + "'");
  return static_cast<size_t>(it - labels_.begin());
}

Vec LieAlgebra::bracket(const Vec& v, const Vec& w) const {
  const size_t n = dim();
  if (v.size() != n || w.size() != n) throw DimensionMismatch(name_ + ": bracket argument length");
  Vec out(n);
  for (size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (w[j].is_zero()) continue;
      const auto& cell = structure(i, j);
      if (cell.empty()) continue;
      Scalar vw = v[i] * w[j];
      accumulate(out, cell, vw);
    }
  }
  return out;
}

Mat LieAlgebra::ad(const Vec& v) const {
  const size_t n = dim();
  if (v.size() != n) throw DimensionMismatch(name_ + ": ad argument length");
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j)
      for (const auto& t : structure(i, j)) m(t.k, j).add_product(v[i], t.c);
  }
  return m;
}

Scalar LieAlgebra::killing(const Vec& v, const Vec& w) const {
  return trace(ad(v) * ad(w)) / trace_scale_;
}

Mat LieAlgebra::killing_matrix() const {
  const size_t n = dim();
  std::vector<Mat> ads;
  for (size_t i = 0; i < n; ++i) ads.push_back(ad(basis_vector(i)));
  Mat k(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      Scalar s;
      for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
          if (!ads[i](a, b).is_zero() && !ads[j](b, a).is_zero()) s.add_product(ads[i](a, b), ads[j](b, a));
      k(i, j) = s / trace_scale_;
      k(j, i) = k(i, j);
    }
  return k;
}

const Mat& LieAlgebra::q_form() const {
  if (!q_) throw Error(name_ + ": algebra carries no invariant form");
  return *q_;
}

Scalar LieAlgebra::q(const Vec& v, const Vec& w) const { return dot(v, q_form().apply(w)); }

std::optional<std::array<size_t, 3>> LieAlgebra::jacobi_violation() const {
  const size_t n = dim();
  std::vector<Mat> ads;
  for (size_t i = 0; i < n; ++i) ads.push_back(ad(basis_vector(i)));
  auto br_basis = [&](size_t i, const Vec& w) { return ads[i].apply(w); };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        Vec ej = basis_vector(j), ek = basis_vector(k), ei = basis_vector(i);
        Vec s = br_basis(i, ads[j].apply(ek)) + br_basis(j, ads[k].apply(ei)) + br_basis(k, ads[i].apply(ej));
        if (!is_zero(s)) return std::array<size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

std::optional<std::array<size_t, 3>> LieAlgebra::invariance_violation() const {
  const size_t n = dim();
  const Mat& q = q_form();
  for (size_t x = 0; x < n; ++x) {
    Mat a = ad(basis_vector(x));
    // q(ad_x y, z) + q(y, ad_x z) = (a^T q + q a)_{yz}
    Mat s = a.transpose() * q + q * a;
    for (size_t y = 0; y < n; ++y)
      for (size_t z = 0; z < n; ++z)
        if (!s(y, z).is_zero()) return std::array<size_t, 3>{x, y, z};
  }
  return std::nullopt;
}

Subspace Subspace::span(size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  Mat m = Mat::from_rows(vectors, ambient);
  s.pivots_ = rref(m);
  for (size_t r = 0; r < s.pivots_.size(); ++r) s.basis_.push_back(m.row(r));
  return s;
}

Subspace Subspace::whole(size_t ambient) {
  std::vector<Vec> vs;
  for (size_t i = 0; i < ambient; ++i) vs.push_back(unit_vec(ambient, i));
  return span(ambient, vs);
}

std::optional<Vec> Subspace::coords(const Vec& v) const {
  if (v.size() != n_) throw DimensionMismatch("subspace coordinates: vector length");
  Vec c(dim());
  for (size_t k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
  if (from_coords(c) != v) return std::nullopt;
  return c;
}

Vec Subspace::from_coords(const Vec& c) const {
  if (c.size() != dim()) throw DimensionMismatch("subspace coordinates: coefficient count");
  Vec v(n_);
  for (size_t k = 0; k < dim(); ++k) {
    if (c[k].is_zero()) continue;
    for (size_t i = 0; i < n_; ++i)
      if (!basis_[k][i].is_zero()) v[i].add_product(c[k], basis_[k][i]);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return coords(v).has_value(); }

bool Subspace::contains(const Subspace& o) const {
  return std::all_of(o.basis_.begin(), o.basis_.end(), [&](const Vec& v) { return contains(v); });
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (o.n_ != n_) throw DimensionMismatch("subspace sum");
  std::vector<Vec> all(basis_);
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return span(n_, all);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.n_ != n_) throw DimensionMismatch("subspace intersection");
  if (dim() == 0 || o.dim() == 0) return Subspace(n_);
  // x in self, y in o with sum x_i s_i - sum y_j t_j = 0
  const size_t a = dim(), b = o.dim();
  Mat m(n_, a + b);
  for (size_t i = 0; i < n_; ++i) {
    for (size_t k = 0; k < a; ++k) m(i, k) = basis_[k][i];
    for (size_t k = 0; k < b; ++k) m(i, a + k) = -o.basis_[k][i];
  }
  std::vector<Vec> out;
  for (const auto& z : kernel(m)) out.push_back(from_coords(Vec(z.begin(), z.begin() + static_cast<long>(a))));
  return span(n_, out);
}

Subspace orth_complement(const LieAlgebra& L, const Subspace& S) {
  const size_t n = L.dim();
  if (S.ambient_dim() != n) throw DimensionMismatch("orth_complement");
  Subspace out = Subspace::whole(n);
  if (S.dim() == 0) return out;
  Mat g(S.dim(), S.dim());
  for (size_t i = 0; i < S.dim(); ++i)
    for (size_t j = 0; j < S.dim(); ++j) g(i, j) = L.q(S.basis()[i], S.basis()[j]);
  if (rank(g) < S.dim()) throw Error("orth_complement: invariant form is degenerate on the subspace");
  Mat rows(S.dim(), n);
  for (size_t i = 0; i < S.dim(); ++i) {
    Vec qs = L.q_form().apply(S.basis()[i]);
    for (size_t j = 0; j < n; ++j) rows(i, j) = qs[j];
  }
  return Subspace::span(n, kernel(rows));
}

Subspace centralizer_in(const LieAlgebra& L, const Subspace& S, const Subspace& W) {
  const size_t n = L.dim();
  if (S.dim() == 0 || W.dim() == 0) return W;
  // Unknowns: coordinates of v in W. Equations: [s_i, v] = 0.
  Mat m(S.dim() * n, W.dim());
  for (size_t k = 0; k < W.dim(); ++k)
    for (size_t i = 0; i < S.dim(); ++i) {
      Vec b = L.bracket(S.basis()[i], W.basis()[k]);
      for (size_t r = 0; r < n; ++r) m(i * n + r, k) = b[r];
    }
  std::vector<Vec> out;
  for (const auto& c : kernel(m)) out.push_back(W.from_coords(c));
  return Subspace::span(n, out);
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& S) {
  for (size_t i = 0; i < S.dim(); ++i)
    for (size_t j = i + 1; j < S.dim(); ++j)
      if (!S.contains(L.bracket(S.basis()[i], S.basis()[j]))) return false;
  return true;
}

Subspace normalizer(const LieAlgebra& L, const Subspace& S) {
  const size_t n = L.dim();
  if (!is_subalgebra(L, S)) throw Error("normalizer: subspace is not closed under the bracket");
  if (S.dim() == 0 || S.dim() == n) return Subspace::whole(n);
  // Functionals vanishing on S.
  Mat smat = Mat::from_rows(S.basis(), n);
  std::vector<Vec> ann = kernel(smat);
  std::vector<Mat> ads;
  for (const auto& s : S.basis()) ads.push_back(L.ad(s));
  Mat m(ann.size() * S.dim(), n);
  size_t r = 0;
  for (const auto& phi : ann)
    for (const auto& a : ads) {
      for (size_t j = 0; j < n; ++j) {
        Scalar v;
        for (size_t k = 0; k < n; ++k)
          if (!phi[k].is_zero() && !a(k, j).is_zero()) v.add_product(phi[k], a(k, j));
        m(r, j) = v;
      }
      ++r;
    }
  Subspace N = Subspace::span(n, kernel(m));
  if (!N.contains(S)) throw ConsistencyError("normalizer does not contain the subalgebra");
  if (!is_subalgebra(L, N)) throw ConsistencyError("normalizer is not a subalgebra");
  return N;
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& A, const Subspace& B) {
  std::vector<Vec> out;
  for (const auto& a : A.basis())
    for (const auto& b : B.basis()) {
      Vec c = L.bracket(a, b);
      if (!is_zero(c)) out.push_back(std::move(c));
    }
  return Subspace::span(L.dim(), out);
}

Subspace subalgebra_closure(const LieAlgebra& L, const Subspace& S) {
  Subspace cur = S;
  while (true) {
    Subspace next = cur + bracket_span(L, cur, cur);
    if (next.dim() == cur.dim()) return cur;
    cur = std::move(next);
  }
}

LieAlgebra restrict_to(const LieAlgebra& L, const Subspace& S, const std::string& name) {
  if (!is_subalgebra(L, S)) throw Error("restrict_to: subspace is not a subalgebra");
  const size_t d = S.dim();
  StructureTensor t(d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      auto c = S.coords(L.bracket(S.basis()[i], S.basis()[j]));
      for (size_t k = 0; k < d; ++k)
        if (!(*c)[k].is_zero()) t[i * d + j].push_back({k, (*c)[k]});
    }
  std::optional<Mat> q;
  if (L.has_form()) {
    Mat g(d, d);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) g(i, j) = L.q(S.basis()[i], S.basis()[j]);
    q = g;
  }
  std::vector<std::string> labels;
  for (size_t i = 0; i < d; ++i) labels.push_back("s" + std::to_string(i));
  return LieAlgebra(name, labels, t, q, Scalar(1));
}

IdealDecomposition ideal_decomposition(const LieAlgebra& L) {
  const size_t n = L.dim();
  if (!L.has_form()) throw Error("ideal_decomposition needs a compact-type algebra with an invariant form");
  IdealDecomposition out;
  out.center = centralizer_in(L, Subspace::whole(n), Subspace::whole(n));
  Subspace D = bracket_span(L, Subspace::whole(n), Subspace::whole(n));
  if (D.dim() + out.center.dim() != n) throw ConsistencyError("center and derived algebra do not span");
  if (D.dim() == 0) return out;

  // A generating set of D keeps the commutant system small.
  std::vector<Vec> gens;
  Subspace gen_closure(n);
  for (const auto& b : D.basis()) {
    if (gen_closure.contains(b)) continue;
    gens.push_back(b);
    gen_closure = subalgebra_closure(L, Subspace::span(n, gens));
    if (gen_closure.dim() == D.dim()) break;
  }
  const size_t d = D.dim();
  std::vector<Mat> adD;
  for (const auto& g : gens) {
    Mat a(d, d);
    for (size_t j = 0; j < d; ++j) {
      auto c = D.coords(L.bracket(g, D.basis()[j]));
      for (size_t i = 0; i < d; ++i) a(i, j) = (*c)[i];
    }
    adD.push_back(std::move(a));
  }
  // T A - A T = 0 with unknown T (row-major, index a*d + b).
  Mat sys(adD.size() * d * d, d * d);
  size_t row = 0;
  for (const auto& A : adD)
    for (size_t a = 0; a < d; ++a)
      for (size_t b = 0; b < d; ++b, ++row)
        for (size_t c = 0; c < d; ++c) {
          if (!A(c, b).is_zero()) sys(row, a * d + c) += A(c, b);
          if (!A(a, c).is_zero()) sys(row, c * d + b) -= A(a, c);
        }
  std::vector<Vec> comm = kernel(sys);
  auto as_mat = [d](const Vec& v) {
    Mat m(d, d);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) m(i, j) = v[i * d + j];
    return m;
  };
  std::vector<Subspace> ideals_in_d;
  if (comm.size() == 1) {
    ideals_in_d.push_back(Subspace::whole(d));
  } else {
    bool split = false;
    for (int attempt = 1; attempt <= 12 && !split; ++attempt) {
      Mat T(d, d);
      for (size_t k = 0; k < comm.size(); ++k)
        T = T + Scalar(static_cast<long long>((k + 1) * (k + attempt) + attempt * attempt)) * as_mat(comm[k]);
      RationalSpectrum spec = rational_spectrum(T);
      if (spec.values.size() != comm.size() || spec.degree_covered != d) continue;
      ideals_in_d.clear();
      for (const auto& lam : spec.values) {
        Mat s = T - Scalar(lam) * Mat::identity(d);
        ideals_in_d.push_back(Subspace::span(d, kernel(s)));
      }
      split = true;
    }
    if (!split) throw Error("ideal_decomposition: commutant does not split over Q");
  }
  for (const auto& I : ideals_in_d) {
    std::vector<Vec> vs;
    for (const auto& c : I.basis()) vs.push_back(D.from_coords(c));
    out.simple_ideals.push_back(Subspace::span(n, vs));
  }
  std::sort(out.simple_ideals.begin(), out.simple_ideals.end(),
            [](const Subspace& a, const Subspace& b) { return a.pivots().front() < b.pivots().front(); });
  // Ideals bracket to zero pairwise, are q-orthogonal, and are ideals.
  Subspace whole = Subspace::whole(n);
  for (size_t i = 0; i < out.simple_ideals.size(); ++i) {
    const auto& I = out.simple_ideals[i];
    if (!I.contains(bracket_span(L, whole, I))) throw ConsistencyError("ideal_decomposition: component is not an ideal");
    for (size_t j = i + 1; j < out.simple_ideals.size(); ++j) {
      const auto& J = out.simple_ideals[j];
      if (bracket_span(L, I, J).dim() != 0) throw ConsistencyError("ideal_decomposition: ideals do not commute");
      for (const auto& x : I.basis())
        for (const auto& y : J.basis())
          if (!L.q(x, y).is_zero()) throw ConsistencyError("ideal_decomposition: ideals are not orthogonal");
    }
  }
  return out;
}

LieAlgebra su2() {
  StructureTensor t(9);
  auto set = [&](size_t i, size_t j, size_t k, int c) {
    t[i * 3 + j].push_back({k, Scalar(c)});
    t[j * 3 + i].push_back({k, Scalar(-c)});
  };
  set(0, 1, 2, 2);
  set(0, 2, 1, -2);
  set(1, 2, 0, 2);
  Mat q = Scalar(-4) * Mat::identity(3);
  return LieAlgebra("su2", {"iH", "F", "G"}, t, q, Scalar(2));
}

LieAlgebra abelian(size_t n, const std::string& name) {
  std::vector<std::string> labels;
  for (size_t i = 0; i < n; ++i) labels.push_back(n == 1 ? "Z" : "Z" + std::to_string(i));
  return LieAlgebra(name, labels, StructureTensor(n * n), std::nullopt);
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, const std::optional<Mat>& center_form,
                      const std::string& name) {
  const size_t na = a.dim(), nb = b.dim(), n = na + nb;
  StructureTensor t(n * n);
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < na; ++j) t[i * n + j] = a.structure(i, j);
  for (size_t i = 0; i < nb; ++i)
    for (size_t j = 0; j < nb; ++j) {
      auto cell = b.structure(i, j);
      for (auto& term : cell) term.k += na;
      t[(na + i) * n + (na + j)] = std::move(cell);
    }
  size_t need = (a.has_form() ? 0 : na) + (b.has_form() ? 0 : nb);
  if (need > 0) {
    if (!center_form) throw Error("direct_sum: a summand has no invariant form and no center form was given");
    if (center_form->rows() != need || center_form->cols() != need)
      throw DimensionMismatch("direct_sum: center form has the wrong size");
    if (!is_positive_definite(Scalar(-1) * *center_form))
      throw Error("direct_sum: center form is not negative definite");
  }
  Mat q(n, n);
  size_t used = 0;
  auto place = [&](const LieAlgebra& s, size_t off) {
    for (size_t i = 0; i < s.dim(); ++i)
      for (size_t j = 0; j < s.dim(); ++j)
        q(off + i, off + j) = s.has_form() ? s.q_form()(i, j) : (*center_form)(used + i, used + j);
    if (!s.has_form()) used += s.dim();
  };
  place(a, 0);
  place(b, na);
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l);
  for (const auto& l : b.labels()) labels.push_back(l);
  // Disambiguate clashing labels from identical summands.
  for (size_t i = na; i < n; ++i)
    if (std::find(labels.begin(), labels.begin() + static_cast<long>(na), labels[i]) != labels.begin() + static_cast<long>(na))
      labels[i] += "'";
  Scalar scale(1);
  if (structure_is_zero(a.structure())) {
    scale = b.trace_scale();
  } else if (structure_is_zero(b.structure()) || a.trace_scale() == b.trace_scale()) {
    scale = a.trace_scale();
  }
  return LieAlgebra(name.empty() ? a.name() + "+" + b.name() : name, labels, t, q, scale);
}

}  // namespace goorbit
