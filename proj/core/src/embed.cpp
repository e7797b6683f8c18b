#include "goorbit/embed.hpp"

#include "goorbit/error.hpp"

namespace goorbit {

namespace {

const Root a{1, 0}, b{0, 1};

std::vector<Vec> concat(std::initializer_list<std::vector<Vec>> parts) {
  std::vector<Vec> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::shared_ptr<const LieAlgebra> borrow(const LieAlgebra& L) {
  return std::shared_ptr<const LieAlgebra>(&L, [](const LieAlgebra*) {});
}

std::string row_name(Family f, size_t index) {
  std::string fam = f == Family::A2 ? "a2" : f == Family::A1xA1 ? "a1a1" : f == Family::C2 ? "c2" : "g2";
  return fam + "." + std::to_string(index);
}

void check_row(Family f, size_t index) {
  if (index < 1 || index > table_rows(f))
    throw Error("no embedding row " + std::to_string(index) + " for " + family_name(f));
}

// Rational r with r^k = q, if any.
std::optional<Rational> rational_root(const Rational& q, int k) {
  if (k == 0) return std::nullopt;
  if (k < 0) return rational_root(q.inverse(), -k);
  if (q.sign() <= 0) return std::nullopt;
  mpz_class n = q.num(), d = q.den(), rn, rd;
  if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k))) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(k))) return std::nullopt;
  return Rational(mpq_class(rn, rd));
}

Scalar power(const Scalar& s, int k) {
  Scalar base = k < 0 ? s.inverse() : s;
  Scalar out(1);
  for (int i = 0; i < std::abs(k); ++i) out *= base;
  return out;
}

}  // namespace

ReductiveSpace::ReductiveSpace(std::string id, std::string label, std::shared_ptr<const LieAlgebra> algebra,
                               const std::vector<Vec>& h_vectors, ExpectedFacts expected)
    : id_(std::move(id)), label_(std::move(label)), algebra_(std::move(algebra)), expected_(std::move(expected)) {
  const LieAlgebra& L = *algebra_;
  h_ = Subspace::span(L.dim(), h_vectors);
  auto fail = [&](const std::string& why) { throw ConsistencyError("space " + id_ + ": " + why); };
  if (!is_subalgebra(L, h_)) fail("h is not closed under the bracket");
  Mat gh(h_.dim(), h_.dim());
  for (size_t i = 0; i < h_.dim(); ++i)
    for (size_t j = 0; j < h_.dim(); ++j) gh(i, j) = -L.q(h_.basis()[i], h_.basis()[j]);
  if (!is_positive_definite(gh)) fail("invariant form is not negative definite on h");
  m_ = orth_complement(L, h_);
  if (h_.dim() + m_.dim() != L.dim()) fail("dim h + dim m != dim g");
  for (const auto& x : h_.basis()) {
    Mat a = ad_on_m(x);  // throws when [x, m] leaves m
    ad_h_m_.push_back(std::move(a));
  }
  m_gram_ = Mat(m_.dim(), m_.dim());
  for (size_t i = 0; i < m_.dim(); ++i)
    for (size_t j = 0; j < m_.dim(); ++j) m_gram_(i, j) = -L.q(m_.basis()[i], m_.basis()[j]);
  m_gram_inv_ = *inverse(m_gram_);
  named_.emplace("g", Subspace::whole(L.dim()));
  named_.emplace("normalizer", normalizer(L, h_));
}

Mat ReductiveSpace::ad_on_m(const Vec& a) const {
  const size_t d = m_.dim();
  Mat out(d, d);
  for (size_t j = 0; j < d; ++j) {
    auto c = m_.coords(algebra_->bracket(a, m_.basis()[j]));
    if (!c) throw ConsistencyError("space " + id_ + ": ad(a) does not preserve m");
    for (size_t i = 0; i < d; ++i) out(i, j) = (*c)[i];
  }
  return out;
}

Vec ReductiveSpace::m_coords(const Vec& v) const {
  auto c = m_.coords(v);
  if (!c) throw Error("space " + id_ + ": vector is not in m");
  return *c;
}

Vec ReductiveSpace::project_to_m(const Vec& v) const {
  Vec r(m_.dim());
  for (size_t j = 0; j < m_.dim(); ++j) r[j] = -algebra_->q(v, m_.basis()[j]);
  return m_gram_inv_.apply(r);
}

const Subspace& ReductiveSpace::subalgebra(const std::string& name) const {
  auto it = named_.find(name);
  if (it == named_.end()) {
    std::string known;
    for (const auto& [k, v] : named_) known += (known.empty() ? "" : ", ") + k;
    throw Error("space " + id_ + ": no subalgebra named '" + name + "' (known: " + known + ")");
  }
  return it->second;
}

void ReductiveSpace::add_subalgebra(const std::string& name, Subspace K) {
  if (!is_subalgebra(*algebra_, K)) throw Error("space " + id_ + ": '" + name + "' is not a subalgebra");
  if (!K.contains(h_)) throw Error("space " + id_ + ": '" + name + "' does not contain h");
  named_.insert_or_assign(name, std::move(K));
}

size_t table_rows(Family f) {
  switch (f) {
    case Family::A2: return 2;
    case Family::A1xA1: return 3;
    case Family::C2: return 3;
    case Family::G2: return 4;
  }
  return 0;
}

SplitTriple split_triple(Family f, size_t index) {
  check_row(f, index);
  const Chevalley& c = chevalley(f);
  auto E = [&](const Root& r) { return c.E(r); };
  auto H = [&](long long x, long long y) { return c.H(Rational(x), Rational(y)); };
  const Scalar r2 = Scalar::radical(2), r6 = Scalar::radical(6), r10 = Scalar::radical(10);
  switch (f) {
    case Family::A2:
      if (index == 1) return {E(a + b), E(-(a + b)), H(1, 1)};
      return {E(a) + E(b), E(-a) + E(-b), H(1, 1)};
    case Family::A1xA1:
      if (index == 1) return {E(a), E(-a), H(1, 0)};
      if (index == 2) return {E(b), E(-b), H(0, 1)};
      return {E(a) + E(b), E(-a) + E(-b), H(1, 1)};
    case Family::C2:
      if (index == 1) return {E(a + b * 2), E(-(a + b * 2)), H(1, 1)};
      if (index == 2) return {E(a + b), E(-(a + b)), H(2, 1)};
      return {E(a) + E(b), Scalar(4) * E(-a) + Scalar(3) * E(-b), H(4, 3)};
    case Family::G2: {
      const Root L{3, 2};
      if (index == 1) return {E(a), E(-a), H(1, 0)};
      if (index == 2) return {E(b), E(-b), H(0, 1)};
      if (index == 3) return {r2 * (E(L) + E(-b)), r2 * (E(b) + E(-L)), Scalar(2) * c.Hroot({3, 1})};
      return {r6 * E(a) + r10 * E(b), r6 * E(-a) + r10 * E(-b), Scalar(14) * c.Hroot({9, 5})};
    }
  }
  throw Error("unreachable");
}

std::vector<Vec> listed_h(Family f, size_t index) {
  check_row(f, index);
  const Chevalley& c = chevalley(f);
  auto iH = [&](long long x, long long y) { return c.iH(Rational(x), Rational(y)); };
  auto F = [&](const Root& r) { return c.F(r); };
  auto G = [&](const Root& r) { return c.G(r); };
  auto m = [&](const Root& r) { return c.m(r); };
  const Scalar r2 = Scalar::radical(2), r3 = Scalar::radical(3), r6 = Scalar::radical(6), r10 = Scalar::radical(10);
  switch (f) {
    case Family::A2:
      if (index == 1) return concat({{iH(1, 1)}, m(a + b)});
      return {F(a) + F(b), G(a) + G(b), iH(1, 1)};
    case Family::A1xA1:
      if (index == 1) return concat({{iH(1, 0)}, m(a)});
      if (index == 2) return concat({{iH(0, 1)}, m(b)});
      return {F(a) + F(b), G(a) + G(b), iH(1, 1)};
    case Family::C2:
      if (index == 1) return concat({{iH(1, 1)}, m(a + b * 2)});
      if (index == 2) return concat({{iH(2, 1)}, m(a + b)});
      return {Scalar(2) * F(a) + r3 * F(b), Scalar(2) * G(a) + r3 * G(b), iH(4, 3)};
    case Family::G2: {
      const Root L{3, 2};
      if (index == 1) return concat({{iH(1, 0)}, m(a)});
      if (index == 2) return concat({{iH(0, 1)}, m(b)});
      if (index == 3) return {r2 * (F(L) - F(b)), r2 * (G(L) + G(b)), Scalar(2) * c.iHroot({3, 1})};
      return {r6 * F(a) + r10 * F(b), r6 * G(a) + r10 * G(b), Scalar(14) * c.iHroot({9, 5})};
    }
  }
  throw Error("unreachable");
}

std::vector<Vec> listed_m(Family f, size_t index) {
  check_row(f, index);
  const Chevalley& c = chevalley(f);
  auto iH = [&](long long x, long long y) { return c.iH(Rational(x), Rational(y)); };
  auto F = [&](const Root& r) { return c.F(r); };
  auto G = [&](const Root& r) { return c.G(r); };
  auto m = [&](const Root& r) { return c.m(r); };
  const Scalar r2 = Scalar::radical(2), r3 = Scalar::radical(3), r6 = Scalar::radical(6), r10 = Scalar::radical(10);
  switch (f) {
    case Family::A2:
      if (index == 1) return concat({{iH(1, -1)}, m(a), m(b)});
      return concat({{F(a) - F(b), G(a) - G(b), iH(1, -1)}, m(a + b)});
    case Family::A1xA1:
      if (index == 1) return concat({{iH(0, 1)}, m(b)});
      if (index == 2) return concat({{iH(1, 0)}, m(a)});
      return {F(a) - F(b), G(a) - G(b), iH(1, -1)};
    case Family::C2:
      if (index == 1) return concat({{iH(1, 0)}, m(a), m(b), m(a + b)});
      if (index == 2) return concat({{iH(0, 1)}, m(a), m(b), m(a + b * 2)});
      return concat({{r3 * F(a) - F(b), r3 * G(a) - G(b), iH(2, -1)}, m(a + b), m(a + b * 2)});
    case Family::G2: {
      const Root L{3, 2};
      if (index == 1) return concat({{c.iHroot(L)}, m(b), m(a + b), m({2, 1}), m({3, 1}), m(L)});
      if (index == 2) return concat({{c.iHroot({2, 1})}, m(a), m(a + b), m({2, 1}), m({3, 1}), m(L)});
      if (index == 3)
        return concat({{r2 * (F(L) + F(b)), r2 * (G(L) - G(b)), Scalar(2) * c.iHroot(a + b)}, m(a), m(a + b),
                       m({2, 1}), m({3, 1})});
      return concat({{r10 * F(a) - Scalar(3) * r6 * F(b), r10 * G(a) - Scalar(3) * r6 * G(b),
                      Scalar(2) * c.iHroot(a - b)},
                     m(a + b), m({2, 1}), m({3, 1}), m(L)});
    }
  }
  throw Error("unreachable");
}

Subspace compactify_sl2_triple(const Chevalley& c, const Vec& e0, const Vec& f0, const Vec& h0) {
  const LieAlgebra& S = c.split;
  const auto roots = c.rs.roots();
  auto fail = [](const std::string& why) { throw Error("compactify_sl2_triple: " + why); };
  if (Subspace::span(S.dim(), {e0, f0, h0}).dim() != 3) fail("vectors do not span a 3-dimensional space");
  if (h0[0].is_zero() && h0[1].is_zero()) fail("h is not in the Cartan subalgebra");
  for (size_t i = 2; i < S.dim(); ++i)
    if (!h0[i].is_zero()) fail("h is not in the Cartan subalgebra");

  // Rescale to [h,e] = 2e, [e,f] = h, [h,f] = -2f.
  auto ratio = [&](const Vec& x, const Vec& y) -> Scalar {  // x = r y
    for (size_t i = 0; i < y.size(); ++i)
      if (!y[i].is_zero()) {
        Scalar r = x[i] / y[i];
        if (x != r * y) fail("triple relations fail");
        return r;
      }
    fail("zero vector in triple");
    return {};
  };
  Scalar lam = ratio(S.bracket(h0, e0), e0);
  if (lam.is_zero()) fail("triple relations fail: [h,e] = 0");
  Vec h = (Scalar(2) / lam) * h0;
  Scalar mu = ratio(S.bracket(e0, f0), h);
  if (mu.is_zero()) fail("triple relations fail: [e,f] = 0");
  Vec e = e0;
  Vec f = mu.inverse() * f0;
  if (S.bracket(h, f) != Scalar(-2) * f) fail("triple relations fail: [h,f] != -2f");

  // Torus element t with t^g = s^m u^n for g = m a + n b. Need t^g e_g = t^{-g} f_{-g},
  // i.e. x^m y^n = f_{-g}/e_g with x = s^2, y = u^2.
  struct Eq {
    Root g;
    Rational r;
  };
  std::vector<Eq> eqs;
  for (size_t i = 0; i < roots.size(); ++i) {
    const Scalar& eg = e[2 + i];
    const Root g = roots[i];
    size_t neg = 0;
    for (size_t k = 0; k < roots.size(); ++k)
      if (roots[k] == -g) neg = 2 + k;
    if (eg.is_zero()) {
      if (!f[neg].is_zero()) fail("support of f is not the negative of the support of e");
      continue;
    }
    Scalar q = f[neg] / eg;
    if (!q.is_rational() || q.sign() <= 0) fail("no balancing factor in K (coefficient ratio " + q.pretty() + ")");
    eqs.push_back({g, q.rational()});
  }
  if (eqs.empty()) fail("e has no root components");
  Rational x(1), y(1);
  bool solved = false;
  for (size_t i = 0; i < eqs.size() && !solved; ++i)
    for (size_t j = i + 1; j < eqs.size() && !solved; ++j) {
      const Root g1 = eqs[i].g, g2 = eqs[j].g;
      int det = g1.m * g2.n - g2.m * g1.n;
      if (det == 0) continue;
      // x^det = r1^{n2} r2^{-n1}, y^det = r1^{-m2} r2^{m1}
      auto pw = [](const Rational& r, int k) {
        Rational base = k < 0 ? r.inverse() : r, out(1);
        for (int t = 0; t < std::abs(k); ++t) out *= base;
        return out;
      };
      auto xs = rational_root(pw(eqs[i].r, g2.n) * pw(eqs[j].r, -g1.n), det);
      auto ys = rational_root(pw(eqs[i].r, -g2.m) * pw(eqs[j].r, g1.m), det);
      if (!xs || !ys) fail("no balancing factor in K");
      x = *xs;
      y = *ys;
      solved = true;
    }
  if (!solved) {
    const Root g = eqs.front().g;
    auto root = rational_root(eqs.front().r, g.m != 0 ? g.m : g.n);
    if (!root) fail("no balancing factor in K");
    (g.m != 0 ? x : y) = *root;
  }
  auto s = sqrt_in_field(x), u = sqrt_in_field(y);
  if (!s || !u) fail("no balancing factor in K");
  auto torus = [&](const Root& g) { return power(*s, g.m) * power(*u, g.n); };

  Vec X1(c.compact.dim()), X2(c.compact.dim());
  for (size_t i = 0; i < roots.size(); ++i) {
    const Root g = roots[i];
    if (e[2 + i].is_zero()) continue;
    Scalar eg = torus(g) * e[2 + i];
    size_t neg = 0;
    for (size_t k = 0; k < roots.size(); ++k)
      if (roots[k] == -g) neg = 2 + k;
    Scalar fg = torus(-g) * f[neg];
    if (eg != fg) fail("balancing failed for root " + root_label(g));
    // E_g - E_{-g} = F_g and i(E_g + E_{-g}) = G_g for either sign of g.
    X1 = X1 + eg * c.F(g);
    X2 = X2 + eg * c.G(g);
  }
  Vec X3 = c.iH(Rational(0), Rational(0));
  X3[0] = h[0];
  X3[1] = h[1];
  Subspace out = Subspace::span(c.compact.dim(), {X1, X2, X3});
  if (out.dim() != 3 || !is_subalgebra(c.compact, out)) fail("compact span is not a 3-dimensional subalgebra");
  return out;
}

namespace {

ExpectedFacts embedded_expected(Family f, size_t index) {
  const Chevalley& c = chevalley(f);
  auto iH = [&](long long x, long long y) { return c.iH(Rational(x), Rational(y)); };
  auto m = [&](const Root& r) { return c.m(r); };
  const Scalar r2 = Scalar::radical(2);
  ExpectedFacts e;
  e.dim_h = 3;
  const std::string fam = row_name(f, index);
  if (fam == "a2.1") {
    e.manifold = "S^5 = SU(3)/SU(2)";
    e.isotypic_dims = {1, 4};
    e.irreducible = {true, true};
    e.component_spans = {std::vector<Vec>{iH(1, -1)}, concat({m(a), m(b)})};
    e.trivial_span = std::vector<Vec>{iH(1, -1)};
    e.expected_verdict = "nonnormal_go_family";
  } else if (fam == "a2.2") {
    e.manifold = "SU(3)/SO(3)";
    e.isotypic_dims = {5};
    e.irreducible = {true};
    e.component_spans = {std::nullopt};
    e.trivial_span = std::vector<Vec>{};
    e.expected_verdict = "isotropy_irreducible";
  } else if (fam == "a1a1.1" || fam == "a1a1.2") {
    e.manifold = "SU(2) = (SU(2)xSU(2))/SU(2)";
    e.isotypic_dims = {3};
    e.irreducible = {std::nullopt};
    e.component_spans = {std::nullopt};
    e.trivial_span = fam == "a1a1.1" ? concat({{iH(0, 1)}, m(b)}) : concat({{iH(1, 0)}, m(a)});
    e.expected_verdict = "lie_group_case";
  } else if (fam == "a1a1.3") {
    e.manifold = "S^3 = SO(4)/SO(3)";
    e.isotypic_dims = {3};
    e.irreducible = {true};
    e.component_spans = {std::nullopt};
    e.trivial_span = std::vector<Vec>{};
    e.expected_verdict = "isotropy_irreducible";
  } else if (fam == "c2.1") {
    e.manifold = "S^7 = Sp(2)/Sp(1)";
    e.isotypic_dims = {3, 4};
    e.irreducible = {false, true};
    e.trivial_span = concat({{iH(1, 0)}, m(a)});
    e.component_spans = {e.trivial_span, concat({m(b), m(a + b)})};
    e.expected_verdict = "nonnormal_go_family";
  } else if (fam == "c2.2") {
    e.manifold = "Sp(2)/SU(2), h = i(2H_a+H_b) + m_{a+b}";
    e.isotypic_dims = {1, 6};
    e.irreducible = {true, true};
    e.component_spans = {std::vector<Vec>{iH(0, 1)}, concat({m(a), m(b), m(a + b * 2)})};
    e.trivial_span = std::vector<Vec>{iH(0, 1)};
    e.expected_verdict = "all_metrics_normal";
  } else if (fam == "c2.3") {
    e.manifold = "Sp(2)/SU(2), principal";
    e.isotypic_dims = {7};
    e.irreducible = {true};
    e.component_spans = {std::nullopt};
    e.trivial_span = std::vector<Vec>{};
    e.expected_verdict = "isotropy_irreducible";
  } else if (fam == "g2.1") {
    e.manifold = "G2/SU(2), h = iH_a + m_a";
    e.isotypic_dims = {3, 8};
    e.irreducible = {false, std::nullopt};
    e.trivial_span = concat({{c.iHroot({3, 2})}, m({3, 2})});
    e.component_spans = {e.trivial_span, std::nullopt};
    e.expected_verdict = "all_metrics_normal";
  } else if (fam == "g2.2") {
    e.manifold = "G2/SU(2), h = iH_b + m_b";
    e.isotypic_dims = {3, 8};
    e.irreducible = {false, std::nullopt};
    e.trivial_span = concat({{c.iHroot({2, 1})}, m({2, 1})});
    e.component_spans = {e.trivial_span, std::nullopt};
    e.expected_verdict = "all_metrics_normal";
  } else if (fam == "g2.3") {
    const Root L{3, 2};
    e.manifold = "G2/SU(2), h from sqrt(2)(E_{3a+2b}+E_{-b})";
    e.isotypic_dims = {5, 6};
    e.irreducible = {true, true};
    e.component_spans = {concat({{r2 * (c.F(L) + c.F(b)), r2 * (c.G(L) - c.G(b)), Scalar(2) * c.iHroot(a + b)}, m({3, 1})}),
                         concat({m(a), m(a + b), m({2, 1})})};
    e.trivial_span = std::vector<Vec>{};
    e.expected_verdict = "all_metrics_normal";
  } else if (fam == "g2.4") {
    e.manifold = "G2/SU(2), principal";
    e.isotypic_dims = {11};
    e.irreducible = {true};
    e.component_spans = {std::nullopt};
    e.trivial_span = std::vector<Vec>{};
    e.expected_verdict = "isotropy_irreducible";
  }
  e.dim_m = c.compact.dim() - 3;
  return e;
}

SpacePtr make_embedded_space(Family f, size_t index) {
  const Chevalley& c = chevalley(f);
  const std::string id = row_name(f, index);
  ExpectedFacts e = embedded_expected(f, index);
  auto space = std::make_shared<ReductiveSpace>(id, e.manifold, borrow(c.compact), listed_h(f, index), e);
  auto fail = [&](const std::string& why) { throw ConsistencyError("embedding row " + id + ": " + why); };
  const LieAlgebra& L = c.compact;
  if (space->h().dim() != 3) fail("h is not 3-dimensional");
  if (bracket_span(L, space->h(), space->h()) != space->h()) fail("[h, h] != h");
  if (space->m() != Subspace::span(L.dim(), listed_m(f, index))) fail("listed complement differs from the computed one");
  SplitTriple t = split_triple(f, index);
  if (compactify_sl2_triple(c, t.e, t.f, t.h) != space->h()) fail("compactified split triple differs from the listed h");
  if (f == Family::C2) {
    const Subspace K = Subspace::span(L.dim(), concat({{c.iH(Rational(1), Rational(0))}, c.m(a),
                                                     {c.iHroot({1, 2})}, c.m({1, 2})}));
    if (K.contains(space->h())) space->add_subalgebra("sp1xsp1", K);
  }
  return space;
}

SpacePtr make_berger() {
  static const LieAlgebra u2 = direct_sum(su2(), abelian(1), Mat(1, 1) + Scalar(-4) * Mat::identity(1), "u2");
  ExpectedFacts e;
  e.manifold = "S^3 = U(2)/U(1) (Berger sphere)";
  e.dim_h = 1;
  e.dim_m = 3;
  e.isotypic_dims = {1, 2};
  e.irreducible = {true, true};
  e.trivial_span = std::vector<Vec>{u2.basis_vector("iH") - u2.basis_vector("Z")};
  e.component_spans = {e.trivial_span, std::vector<Vec>{u2.basis_vector("F"), u2.basis_vector("G")}};
  e.expected_verdict = "nonnormal_go_family";
  return std::make_shared<ReductiveSpace>("berger", e.manifold, borrow(u2),
                                          std::vector<Vec>{u2.basis_vector("iH") + u2.basis_vector("Z")}, e);
}

SpacePtr make_cp3() {
  const Chevalley& c = chevalley(Family::C2);
  ExpectedFacts e;
  e.manifold = "CP^3 = Sp(2)/(U(1)xSp(1))";
  e.dim_h = 4;
  e.dim_m = 6;
  e.isotypic_dims = {2, 4};
  e.irreducible = {true, true};
  e.trivial_span = std::vector<Vec>{};
  e.component_spans = {c.m(a), concat({c.m(b), c.m(a + b)})};
  e.expected_verdict = "nonnormal_go_family";
  const Root lng{1, 2};
  auto h = concat({{c.iH(Rational(1), Rational(0)), c.iHroot(lng)}, c.m(lng)});
  auto space = std::make_shared<ReductiveSpace>("cp3", e.manifold, borrow(c.compact), h, e);
  const Subspace K = Subspace::span(c.compact.dim(), concat({{c.iH(Rational(1), Rational(0))}, c.m(a),
                                                           {c.iHroot(lng)}, c.m(lng)}));
  space->add_subalgebra("sp1xsp1", K);
  if (space->m().dim() != 6) throw ConsistencyError("cp3: dim m != 6");
  return space;
}

}  // namespace

SpacePtr embedded_space(Family f, size_t index) {
  check_row(f, index);
  return make_embedded_space(f, index);
}

SpacePtr catalog_space(const std::string& name) {
  if (name == "berger") return make_berger();
  if (name == "cp3") return make_cp3();
  throw Error("unknown catalogue space '" + name + "'");
}

const std::vector<std::string>& catalogue_ids() {
  static const std::vector<std::string> ids{"a2.1", "a2.2", "a1a1.1", "a1a1.2", "a1a1.3", "c2.1", "c2.2",
                                            "c2.3", "g2.1", "g2.2", "g2.3",   "g2.4",   "berger", "cp3"};
  return ids;
}

SpacePtr space_by_id(const std::string& id) {
  if (id == "berger" || id == "cp3") return catalog_space(id);
  auto dot = id.find('.');
  if (dot == std::string::npos) throw Error("unknown space id '" + id + "'");
  const std::string fam = id.substr(0, dot);
  size_t index = 0;
  try {
    index = std::stoul(id.substr(dot + 1));
  } catch (...) {
    throw Error("unknown space id '" + id + "'");
  }
  Family f;
  if (fam == "a2") {
    f = Family::A2;
  } else if (fam == "a1a1") {
    f = Family::A1xA1;
  } else if (fam == "c2") {
    f = Family::C2;
  } else if (fam == "g2") {
    f = Family::G2;
  } else {
    throw Error("unknown space id '" + id + "'");
  }
  if (index < 1 || index > table_rows(f)) throw Error("unknown space id '" + id + "'");
  return embedded_space(f, index);
}

FibrationSplit fibration_split(const ReductiveSpace& space, const Subspace& K) {
  const LieAlgebra& L = space.algebra();
  if (!is_subalgebra(L, K)) throw Error("fibration_split: K is not a subalgebra");
  if (!K.contains(space.h())) throw Error("fibration_split: h is not contained in K");
  FibrationSplit out;
  out.fiber = K.intersect(space.m());
  out.base = K.dim() == L.dim() ? Subspace(L.dim()) : orth_complement(L, K).intersect(space.m());
  if (out.fiber.dim() + out.base.dim() != space.m().dim()) throw ConsistencyError("fibration_split: M_F + M_B != m");
  return out;
}

}  // namespace goorbit
