#include "goorbit/isotypic.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "goorbit/error.hpp"

namespace goorbit {

namespace {

std::string where(const ReductiveSpace& s) { return "space " + s.id() + ": "; }

// Matrix of A restricted to an A-invariant subspace V, in V's basis.
Mat restrict_mat(const Mat& A, const Subspace& V) {
  const size_t d = V.dim();
  Mat out(d, d);
  for (size_t j = 0; j < d; ++j) {
    auto c = V.coords(A.apply(V.basis()[j]));
    if (!c) throw ConsistencyError("subspace is not invariant");
    for (size_t i = 0; i < d; ++i) out(i, j) = (*c)[i];
  }
  return out;
}

// Eigenspaces of A inside the A-invariant subspace V.
std::vector<std::pair<Rational, Subspace>> split_by(const Mat& A, const Subspace& V, const std::string& what) {
  const size_t n = V.ambient_dim();
  Mat R = restrict_mat(A, V);
  auto spec = rational_spectrum(R);
  if (spec.degree_covered != R.rows()) throw ConsistencyError(what + " has a non-rational eigenvalue");
  std::vector<std::pair<Rational, Subspace>> out;
  size_t total = 0;
  for (const Rational& ev : spec.values) {
    Mat shifted = R;
    for (size_t i = 0; i < R.rows(); ++i) shifted(i, i) -= Scalar(ev);
    std::vector<Vec> vs;
    for (const Vec& k : kernel(shifted)) vs.push_back(V.from_coords(k));
    total += vs.size();
    out.emplace_back(ev, Subspace::span(n, vs));
  }
  if (total != V.dim()) throw ConsistencyError(what + " is not diagonalizable over Q");
  return out;
}

Mat mat_power2(const Mat& A) { return A * A; }

}  // namespace

std::string rep_type_name(RepType t) {
  switch (t) {
    case RepType::Trivial: return "trivial";
    case RepType::Real: return "real";
    case RepType::Complex: return "complex";
    case RepType::Quaternionic: return "quaternionic";
    case RepType::Unknown: return "unknown";
  }
  return "unknown";
}

std::vector<size_t> IsotypicDecomposition::dims() const {
  std::vector<size_t> d;
  for (const auto& c : components) d.push_back(c.dim());
  return d;
}

Mat casimir(const ReductiveSpace& space) {
  const LieAlgebra& L = space.algebra();
  const auto& hb = space.h().basis();
  const size_t k = hb.size();
  Mat G(k, k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) G(i, j) = -L.q(hb[i], hb[j]);
  auto Gi = inverse(G);
  if (!Gi) throw Error(where(space) + "degenerate Gram matrix on h");
  const auto& A = space.ad_h_on_m();
  const size_t n = space.dim_m();
  Mat C(n, n);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (!(*Gi)(i, j).is_zero()) C = C + (*Gi)(i, j) * (A[i] * A[j]);
  return C;
}

Subspace trivial_component(const ReductiveSpace& space) {
  const LieAlgebra& L = space.algebra();
  Subspace p = centralizer_in(L, space.h(), space.m());
  Subspace viaN = normalizer(L, space.h()).intersect(space.m());
  if (p != viaN) throw ConsistencyError(where(space) + "centralizer of h in m differs from normalizer(h) cap m");
  return p;
}

IsotypicDecomposition isotypic_decompose(const ReductiveSpace& space) {
  const LieAlgebra& L = space.algebra();
  const size_t n = space.dim_m();
  const Mat C = casimir(space);

  // Central elements of h, as ad(z)^2 on m.
  Subspace zh = centralizer_in(L, space.h(), space.h());
  std::vector<Mat> central_sq;
  for (const Vec& z : zh.basis()) central_sq.push_back(mat_power2(space.ad_on_m(z)));

  struct Piece {
    Rational cas;
    std::vector<Rational> central;
    Subspace V;
  };
  std::vector<Piece> pieces;
  for (auto& [ev, V] : split_by(C, Subspace::whole(n), where(space) + "Casimir operator"))
    pieces.push_back({ev, {}, V});
  for (const Mat& Z : central_sq) {
    std::vector<Piece> next;
    for (const Piece& p : pieces)
      for (auto& [ev, V] : split_by(Z, p.V, where(space) + "central ad^2")) {
        Piece q = p;
        q.central.push_back(ev);
        q.V = V;
        next.push_back(std::move(q));
      }
    pieces = std::move(next);
  }

  std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    const bool ta = a.cas.is_zero(), tb = b.cas.is_zero();
    if (ta != tb) return ta;
    if (a.V.dim() != b.V.dim()) return a.V.dim() < b.V.dim();
    if (a.cas != b.cas) return a.cas > b.cas;
    return a.central > b.central;
  });

  IsotypicDecomposition dec;
  size_t total = 0;
  for (const Piece& p : pieces) {
    IsotypicComponent c;
    c.coords = p.V;
    std::vector<Vec> g;
    for (const Vec& v : p.V.basis()) g.push_back(space.from_m_coords(v));
    c.span = Subspace::span(L.dim(), g);
    c.casimir = p.cas;
    c.central = p.central;
    total += c.dim();
    if (p.cas.is_zero()) dec.trivial_index = dec.components.size();
    dec.components.push_back(std::move(c));
  }
  if (total != n) throw ConsistencyError(where(space) + "isotypic components do not fill m");
  if (dec.trivial_index && dec.components[*dec.trivial_index].span != trivial_component(space))
    throw ConsistencyError(where(space) + "zero Casimir eigenspace differs from the centralizer of h");

  // Weight analysis with a Cartan element t of [h, h] (an su(2) here).
  Subspace D = bracket_span(L, space.h(), space.h());
  std::optional<Mat> t_sq;
  if (D.dim() == 3) {
    const Vec& t = D.basis()[0];
    Scalar wh2 = -trace(mat_power2(restrict_mat(L.ad(t), D))) / Scalar(2);  // eigenvalues of ad(t)^2 on D are 0, -w^2, -w^2
    t_sq = wh2.inverse() * mat_power2(space.ad_on_m(t));
  }
  for (IsotypicComponent& c : dec.components) {
    const bool charged = std::any_of(c.central.begin(), c.central.end(), [](const Rational& r) { return !r.is_zero(); });
    size_t k = 0;  // highest weight
    bool known = D.dim() == 0 || t_sq.has_value();
    if (t_sq) {
      auto spec = rational_spectrum(restrict_mat(*t_sq, c.coords));
      if (spec.degree_covered != c.dim()) {
        known = false;
      } else {
        Rational top(0);
        for (const Rational& r : spec.values) top = std::max(top, -r * Rational(4));  // eigenvalue -(w/2)^2
        mpz_class s;
        mpz_class num = top.num();
        if (!top.is_integer() || !mpz_perfect_square_p(num.get_mpz_t())) {
          known = false;
        } else {
          mpz_sqrt(s.get_mpz_t(), num.get_mpz_t());
          k = s.get_ui();
        }
      }
    }
    if (!known) continue;
    if (c.casimir.is_zero()) {
      c.type = RepType::Trivial;
      c.irreducible_dim = 1;
    } else if (charged) {
      c.type = RepType::Complex;
      c.irreducible_dim = 2 * (k + 1);
    } else if (k % 2 == 1) {
      c.type = RepType::Quaternionic;
      c.irreducible_dim = 2 * (k + 1);
    } else {
      c.type = RepType::Real;
      c.irreducible_dim = k + 1;
    }
    if (c.dim() % c.irreducible_dim != 0) {
      c.type = RepType::Unknown;
      c.irreducible_dim = 0;
      continue;
    }
    c.multiplicity = c.dim() / c.irreducible_dim;
  }

  CommutantBasis comm = commutant_symmetric_basis(space, dec);
  for (size_t j = 0; j < dec.components.size(); ++j) {
    IsotypicComponent& c = dec.components[j];
    c.commutant_dim = static_cast<size_t>(std::count(comm.component_of.begin(), comm.component_of.end(), j));
    const size_t m = c.multiplicity;
    size_t expect = 0;
    switch (c.type) {
      case RepType::Trivial:
      case RepType::Real: expect = m * (m + 1) / 2; break;
      case RepType::Complex: expect = m * m; break;
      case RepType::Quaternionic: expect = m * (2 * m - 1); break;
      case RepType::Unknown: expect = c.commutant_dim; break;
    }
    c.type_consistent = expect == c.commutant_dim;
  }
  return dec;
}

Mat component_projection(const IsotypicDecomposition& dec, size_t j) {
  const size_t n = dec.components.front().coords.ambient_dim();
  std::vector<Vec> cols;
  size_t lo = 0, hi = 0;
  for (size_t c = 0; c < dec.components.size(); ++c) {
    if (c == j) lo = cols.size();
    for (const Vec& v : dec.components[c].coords.basis()) cols.push_back(v);
    if (c == j) hi = cols.size();
  }
  Mat T = Mat::from_cols(cols, n);
  auto Ti = inverse(T);
  if (!Ti) throw ConsistencyError("isotypic components are not independent");
  Mat E(n, n);
  for (size_t i = lo; i < hi; ++i) E(i, i) = Scalar(1);
  return T * E * *Ti;
}

CommutantBasis commutant_symmetric_basis(const ReductiveSpace& space, const IsotypicDecomposition& dec) {
  const size_t n = space.dim_m();
  const Mat& B = space.m_gram();
  auto Bi = inverse(B);
  if (!Bi) throw ConsistencyError(where(space) + "degenerate metric on m");

  // Unknown symmetric M = B Lambda, with M A + A^T M = 0 for each generator A.
  std::vector<std::pair<size_t, size_t>> slots;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) slots.emplace_back(i, j);
  auto slot = [&](size_t i, size_t j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
  };
  std::vector<Vec> rows;
  for (const Mat& A : space.ad_h_on_m()) {
    for (size_t r = 0; r < n; ++r)
      for (size_t c = r; c < n; ++c) {  // (MA + A^T M) is symmetric
        Vec row = zero_vec(slots.size());
        for (size_t k = 0; k < n; ++k) {
          if (!A(k, c).is_zero()) row[slot(r, k)] += A(k, c);
          if (!A(k, r).is_zero()) row[slot(k, c)] += A(k, r);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  }
  std::vector<Vec> sol;
  if (rows.empty()) {
    for (size_t s = 0; s < slots.size(); ++s) sol.push_back(unit_vec(slots.size(), s));
  } else {
    sol = kernel(Mat::from_rows(rows, slots.size()));
  }
  std::vector<Mat> raw;
  for (const Vec& s : sol) {
    Mat M(n, n);
    for (size_t k = 0; k < slots.size(); ++k) {
      M(slots[k].first, slots[k].second) = s[k];
      M(slots[k].second, slots[k].first) = s[k];
    }
    raw.push_back(*Bi * M);
  }

  // Canonical form: per component, identity first, then the other block pieces.
  auto flat = [n](const Mat& M) {
    Vec v(n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) v[i * n + j] = M(i, j);
    return v;
  };
  CommutantBasis out;
  for (size_t j = 0; j < dec.components.size(); ++j) {
    Mat P = component_projection(dec, j);
    Subspace seen(n * n);
    auto offer = [&](const Mat& M) {
      if (M.is_zero()) return;
      Vec v = flat(M);
      if (seen.contains(v)) return;
      seen = seen + Subspace::span(n * n, {v});
      out.basis.push_back(M);
      out.component_of.push_back(j);
    };
    offer(P);
    for (const Mat& R : raw) offer(P * R * P);
  }
  if (out.basis.size() != raw.size())
    throw ConsistencyError(where(space) + "commutant is not block-supported on the isotypic components");
  for (const Mat& M : out.basis) {
    for (const Mat& A : space.ad_h_on_m())
      if (M * A != A * M) throw ConsistencyError(where(space) + "commutant element fails to commute with ad(h)");
    if (!is_symmetric(B * M)) throw ConsistencyError(where(space) + "commutant element is not q-symmetric");
  }
  return out;
}

std::vector<Mat> commutant_symmetric_basis(const ReductiveSpace& space) {
  return commutant_symmetric_basis(space, isotypic_decompose(space)).basis;
}

nlohmann::json to_json(const IsotypicDecomposition& dec) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : dec.components) {
    nlohmann::json central = nlohmann::json::array();
    for (const auto& r : c.central) central.push_back(r.str());
    comps.push_back({{"dim", c.dim()},
                     {"casimir", c.casimir.str()},
                     {"central_ad2", central},
                     {"irreducible_dim", c.irreducible_dim},
                     {"multiplicity", c.multiplicity},
                     {"irreducible", c.irreducible()},
                     {"type", rep_type_name(c.type)},
                     {"commutant_dim", c.commutant_dim},
                     {"type_consistent", c.type_consistent}});
  }
  nlohmann::json j{{"components", comps}, {"dims", dec.dims()}};
  j["trivial_index"] = dec.trivial_index ? nlohmann::json(*dec.trivial_index) : nlohmann::json(nullptr);
  return j;
}

}  // namespace goorbit
