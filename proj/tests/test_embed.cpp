#include <gtest/gtest.h>

#include "goorbit/embed.hpp"
#include "goorbit/error.hpp"

using namespace goorbit;

TEST(Embed, AllRowsValidate) {
  for (const auto& id : catalogue_ids()) {
    SCOPED_TRACE(id);
    SpacePtr s = space_by_id(id);
    EXPECT_EQ(s->h().dim(), s->expected().dim_h);
    EXPECT_EQ(s->m().dim(), s->expected().dim_m);
    EXPECT_EQ(s->h().dim() + s->m().dim(), s->algebra().dim());
    size_t total = 0;
    for (size_t d : s->expected().isotypic_dims) total += d;
    EXPECT_EQ(total, s->dim_m());
    EXPECT_TRUE(s->subalgebras().count("normalizer"));
    EXPECT_TRUE(s->subalgebra("normalizer").contains(s->h()));
  }
}

TEST(Embed, CompactifiedTriplesMatchListedSpans) {
  for (Family f : {Family::A2, Family::A1xA1, Family::C2, Family::G2}) {
    const Chevalley& c = chevalley(f);
    for (size_t i = 1; i <= table_rows(f); ++i) {
      SCOPED_TRACE(family_name(f) + std::to_string(i));
      SplitTriple t = split_triple(f, i);
      Subspace h = compactify_sl2_triple(c, t.e, t.f, t.h);
      EXPECT_EQ(h, Subspace::span(c.compact.dim(), listed_h(f, i)));
    }
  }
}

TEST(Embed, CompactifyRejectsNonTriples) {
  const Chevalley& c = chevalley(Family::A2);
  const Root a{1, 0}, b{0, 1};
  EXPECT_THROW(compactify_sl2_triple(c, c.E(a), c.E(b), c.H(Rational(1), Rational(0))), Error);
  EXPECT_THROW(compactify_sl2_triple(c, c.E(a), c.E(-a), c.E(b)), Error);
}

TEST(Embed, ComplementIsOrthogonalAndInvariant) {
  for (const auto& id : catalogue_ids()) {
    SCOPED_TRACE(id);
    SpacePtr s = space_by_id(id);
    const LieAlgebra& L = s->algebra();
    for (const auto& x : s->h().basis())
      for (const auto& y : s->m().basis()) {
        EXPECT_TRUE(L.q(x, y).is_zero());
        EXPECT_TRUE(s->m().contains(L.bracket(x, y)));
      }
    EXPECT_TRUE(is_positive_definite(s->m_gram()));
  }
}

TEST(Embed, FibrationSplits) {
  auto c21 = space_by_id("c2.1");
  auto fs = fibration_split(*c21, c21->subalgebra("sp1xsp1"));
  EXPECT_EQ(fs.fiber.dim(), 3u);
  EXPECT_EQ(fs.base.dim(), 4u);
  auto cp3 = space_by_id("cp3");
  fs = fibration_split(*cp3, cp3->subalgebra("sp1xsp1"));
  EXPECT_EQ(fs.fiber.dim(), 2u);
  EXPECT_EQ(fs.base.dim(), 4u);
  auto berger = space_by_id("berger");
  fs = fibration_split(*berger, berger->subalgebra("normalizer"));
  EXPECT_EQ(fs.fiber.dim(), 1u);
  EXPECT_EQ(fs.base.dim(), 2u);
  fs = fibration_split(*berger, berger->subalgebra("g"));
  EXPECT_EQ(fs.fiber.dim(), 3u);
  EXPECT_EQ(fs.base.dim(), 0u);
}

TEST(Embed, UnknownIds) {
  EXPECT_THROW(space_by_id("a2.3"), Error);
  EXPECT_THROW(space_by_id("e8.1"), Error);
  EXPECT_THROW(space_by_id("nonsense"), Error);
}
