#include <gtest/gtest.h>

#include <map>

#include "goorbit/isotypic.hpp"

using namespace goorbit;

namespace {

struct Truth {
  std::vector<size_t> dims;
  std::vector<std::string> casimir;
  std::vector<size_t> irreducible_dim;
  size_t commutant;
};

const std::map<std::string, Truth>& truth() {
  static const std::map<std::string, Truth> t{
      {"a2.1", {{1, 4}, {"0", "-3/4"}, {1, 4}, 2}},
      {"a2.2", {{5}, {"-3/2"}, {5}, 1}},
      {"a1a1.1", {{3}, {"0"}, {1}, 6}},
      {"a1a1.2", {{3}, {"0"}, {1}, 6}},
      {"a1a1.3", {{3}, {"-1"}, {3}, 1}},
      {"c2.1", {{3, 4}, {"0", "-3/4"}, {1, 4}, 7}},
      {"c2.2", {{1, 6}, {"0", "-1"}, {1, 3}, 4}},
      {"c2.3", {{7}, {"-6/5"}, {7}, 1}},
      {"g2.1", {{3, 8}, {"0", "-15/4"}, {1, 8}, 7}},
      {"g2.2", {{3, 8}, {"0", "-9/4"}, {1, 4}, 12}},
      {"g2.3", {{5, 6}, {"-9/2", "-3/2"}, {5, 3}, 4}},
      {"g2.4", {{11}, {"-45/14"}, {11}, 1}},
      {"berger", {{1, 2}, {"0", std::string()}, {1, 2}, 2}},
      {"cp3", {{2, 4}, {std::string(), std::string()}, {2, 4}, 2}},
  };
  return t;
}

}  // namespace

TEST(Isotypic, MatchesComputedProfiles) {
  for (const auto& id : catalogue_ids()) {
    SCOPED_TRACE(id);
    auto s = space_by_id(id);
    auto dec = isotypic_decompose(*s);
    const Truth& t = truth().at(id);
    ASSERT_EQ(dec.dims(), t.dims);
    size_t comm = 0;
    for (size_t j = 0; j < dec.components.size(); ++j) {
      const auto& c = dec.components[j];
      if (!t.casimir[j].empty()) EXPECT_EQ(c.casimir.str(), t.casimir[j]);
      EXPECT_EQ(c.irreducible_dim, t.irreducible_dim[j]);
      EXPECT_TRUE(c.type_consistent) << "component " << j;
      comm += c.commutant_dim;
    }
    EXPECT_EQ(comm, t.commutant);
    EXPECT_EQ(commutant_symmetric_basis(*s).size(), t.commutant);
  }
}

TEST(Isotypic, CasimirIsEquivariantAndSymmetric) {
  for (const auto& id : catalogue_ids()) {
    SCOPED_TRACE(id);
    auto s = space_by_id(id);
    Mat C = casimir(*s);
    for (const Mat& A : s->ad_h_on_m()) EXPECT_EQ(C * A, A * C);
    EXPECT_TRUE(is_symmetric(s->m_gram() * C));
  }
}

TEST(Isotypic, ComponentsAreOrthogonalInvariantAndFillM) {
  for (const auto& id : catalogue_ids()) {
    SCOPED_TRACE(id);
    auto s = space_by_id(id);
    const LieAlgebra& L = s->algebra();
    auto dec = isotypic_decompose(*s);
    Subspace sum(L.dim());
    for (size_t i = 0; i < dec.components.size(); ++i) {
      const auto& ci = dec.components[i];
      sum = sum + ci.span;
      for (const Vec& x : s->h().basis())
        for (const Vec& v : ci.span.basis()) EXPECT_TRUE(ci.span.contains(L.bracket(x, v)));
      for (size_t j = i + 1; j < dec.components.size(); ++j)
        for (const Vec& v : ci.span.basis())
          for (const Vec& w : dec.components[j].span.basis()) EXPECT_TRUE(L.q(v, w).is_zero());
    }
    EXPECT_EQ(sum, s->m());
  }
}

TEST(Isotypic, TrivialComponentIsCentralizerAndNormalizerSlice) {
  for (const auto& id : catalogue_ids()) {
    SCOPED_TRACE(id);
    auto s = space_by_id(id);
    auto dec = isotypic_decompose(*s);
    Subspace p = trivial_component(*s);
    EXPECT_EQ(p, normalizer(s->algebra(), s->h()).intersect(s->m()));
    if (dec.trivial_index) {
      EXPECT_EQ(dec.components[*dec.trivial_index].span, p);
      EXPECT_TRUE(dec.components[*dec.trivial_index].casimir.is_zero());
      EXPECT_EQ(*dec.trivial_index, 0u);
    } else {
      EXPECT_EQ(p.dim(), 0u);
    }
    if (s->expected().trivial_span)
      EXPECT_EQ(p, Subspace::span(s->algebra().dim(), *s->expected().trivial_span));
  }
}

TEST(Isotypic, CommutantIsBlockSupported) {
  for (const auto& id : catalogue_ids()) {
    SCOPED_TRACE(id);
    auto s = space_by_id(id);
    auto dec = isotypic_decompose(*s);
    auto cb = commutant_symmetric_basis(*s, dec);
    for (size_t k = 0; k < cb.basis.size(); ++k) {
      Mat P = component_projection(dec, cb.component_of[k]);
      EXPECT_EQ(P * cb.basis[k] * P, cb.basis[k]);
    }
    // Irreducible components carry only scalars.
    for (size_t j = 0; j < dec.components.size(); ++j)
      if (dec.components[j].irreducible()) EXPECT_EQ(dec.components[j].commutant_dim, 1u);
    // Each component's first element is its identity.
    for (size_t j = 0; j < dec.components.size(); ++j) {
      size_t k = 0;
      while (cb.component_of[k] != j) ++k;
      EXPECT_EQ(cb.basis[k], component_projection(dec, j));
    }
  }
}

TEST(Isotypic, ListedSpansWhereDisplayed) {
  for (const auto& id : catalogue_ids()) {
    SCOPED_TRACE(id);
    auto s = space_by_id(id);
    auto dec = isotypic_decompose(*s);
    const auto& e = s->expected();
    ASSERT_EQ(e.component_spans.size(), dec.components.size());
    for (size_t j = 0; j < dec.components.size(); ++j)
      if (e.component_spans[j]) EXPECT_EQ(dec.components[j].span, Subspace::span(s->algebra().dim(), *e.component_spans[j]));
  }
}
