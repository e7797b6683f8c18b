#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>
#include <random>

#include "goorbit/error.hpp"
#include "goorbit/gocheck.hpp"

using namespace goorbit;

namespace {

Scalar q(long long n, long long d = 1) { return Scalar(Rational(n, d)); }

MetricEndomorphism two_block(const std::string& id, const Scalar& l, const Scalar& mu) {
  return metric_from_blocks(space_by_id(id), {l, mu});
}

}  // namespace

TEST(GoCheck, StandardMetricSolvesWithZero) {
  for (const auto& id : catalogue_ids()) {
    SCOPED_TRACE(id);
    auto m = standard_metric(space_by_id(id));
    validate_metric(m);
    for (const Vec& X : random_samples(m.space->dim_m(), 5, 7)) {
      auto s = geodesic_lemma_solve(m, X);
      ASSERT_TRUE(s.consistent);
      EXPECT_TRUE(is_zero(*s.a));
    }
    EXPECT_TRUE(normalizer_filter(m));
    EXPECT_TRUE(biinvariance_filter(m));
  }
}

TEST(GoCheck, StandardMetricPassesSampling) {
  for (const auto& id : catalogue_ids()) {
    SCOPED_TRACE(id);
    auto v = go_sample_check(standard_metric(space_by_id(id)), 200, 42);
    EXPECT_EQ(v.status, GoStatus::GoSampled);
    EXPECT_FALSE(v.witness);
  }
}

TEST(GoCheck, EqualBlocksGiveStandard) {
  auto s = space_by_id("c2.1");
  auto m = metric_from_blocks(s, {q(3), q(3)});
  EXPECT_EQ(m.matrix, Scalar(3) * Mat::identity(7));
  EXPECT_THROW(metric_from_blocks(s, {q(1), q(0)}), Error);
  EXPECT_THROW(metric_from_blocks(s, {q(1), q(1), q(1)}), Error);
}

TEST(GoCheck, FibrationEigenvalues) {
  auto c21 = space_by_id("c2.1");
  auto m = fibration_metric(c21, c21->subalgebra("sp1xsp1"), q(2));
  auto spec = rational_spectrum(m.matrix);
  ASSERT_EQ(spec.values.size(), 2u);
  Mat shifted = m.matrix - Scalar(2) * Mat::identity(7);
  EXPECT_EQ(kernel(shifted).size(), 3u);
  auto cp3 = space_by_id("cp3");
  auto m2 = fibration_metric(cp3, cp3->subalgebra("sp1xsp1"), q(1, 2));
  EXPECT_EQ(kernel(m2.matrix - q(1, 2) * Mat::identity(6)).size(), 2u);
  EXPECT_EQ(kernel(m2.matrix - Mat::identity(6)).size(), 4u);
  EXPECT_EQ(fibration_metric(cp3, cp3->subalgebra("sp1xsp1"), q(1)).matrix, Mat::identity(6));
  EXPECT_THROW(fibration_metric(cp3, cp3->subalgebra("sp1xsp1"), q(-1)), Error);
}

TEST(GoCheck, FibrationFamiliesPass) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"a2.1", "normalizer"}, {"c2.1", "sp1xsp1"}, {"cp3", "sp1xsp1"}, {"berger", "normalizer"}};
  for (const auto& [id, K] : cases)
    for (const Scalar& l : {q(1, 3), q(1, 2), q(2), q(5)}) {
      SCOPED_TRACE(id + " " + l.pretty());
      auto s = space_by_id(id);
      auto m = fibration_metric(s, s->subalgebra(K), l, K);
      EXPECT_FALSE(m.matrix == Mat::identity(s->dim_m()));
      auto v = go_sample_check(m, 200, 42);
      EXPECT_EQ(v.status, GoStatus::GoSampled);
      EXPECT_TRUE(normalizer_filter(m));
      EXPECT_TRUE(biinvariance_filter(m));
    }
}

TEST(GoCheck, RefutationsReplayFromJson) {
  for (const std::string id : {"c2.2", "g2.1", "g2.2", "g2.3"}) {
    SCOPED_TRACE(id);
    auto m = two_block(id, q(2), q(1));
    auto w = find_witness(m, 50, 42);
    ASSERT_TRUE(w.has_value());
    EXPECT_LT(w->sample_index, 50u);
    auto round = witness_from_json(nlohmann::json::parse(to_json(*w).dump()));
    auto m2 = metric_from_json(space_by_id(id), nlohmann::json::parse(metric_to_json(m).dump()));
    EXPECT_TRUE(replay_witness(m2, round));
    EXPECT_FALSE(geodesic_lemma_solve(m2, round.X).consistent);
    auto v = go_sample_check(m, 200, 42);
    EXPECT_EQ(v.status, GoStatus::NotGoCertified);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->X, w->X);
  }
}

TEST(GoCheck, ThreadedScanMatchesSerial) {
  auto m = two_block("g2.3", q(2), q(1));
  auto a = go_sample_check(m, 100, 9);
  SampleOptions opt;
  opt.threads = 4;
  auto b = go_sample_check(m, 100, 9, opt);
  EXPECT_EQ(a.status, b.status);
  ASSERT_TRUE(a.witness && b.witness);
  EXPECT_EQ(a.witness->sample_index, b.witness->sample_index);
  EXPECT_EQ(a.witness->X, b.witness->X);
}

TEST(GoCheck, BiinvarianceRejectsNonScalarOnSu2Slice) {
  auto s = space_by_id("c2.1");
  auto dec = isotypic_decompose(*s);
  auto cb = commutant_symmetric_basis(*s, dec);
  ASSERT_EQ(*dec.trivial_index, 0u);
  size_t tested = 0;
  for (size_t k = 0; k < cb.basis.size(); ++k) {
    if (cb.component_of[k] != 0 || cb.basis[k] == component_projection(dec, 0)) continue;
    Mat L = Mat::identity(7) + q(1, 10) * cb.basis[k];
    auto m = explicit_metric(s, L);
    EXPECT_FALSE(biinvariance_filter(m));
    EXPECT_FALSE(normalizer_filter(m));
    ++tested;
  }
  EXPECT_EQ(tested, 5u);
  EXPECT_TRUE(biinvariance_filter(two_block("c2.1", q(2), q(1))));
  EXPECT_TRUE(biinvariance_filter(two_block("a2.1", q(7), q(1))));
}

TEST(GoCheck, Homothety) {
  std::mt19937_64 rng(5);
  const auto& ids = catalogue_ids();
  for (int t = 0; t < 6; ++t) {
    const std::string id = ids[rng() % ids.size()];
    SCOPED_TRACE(id);
    auto s = space_by_id(id);
    auto dec = isotypic_decompose(*s);
    std::vector<Scalar> c;
    for (size_t j = 0; j < dec.components.size(); ++j) c.push_back(q(1 + static_cast<long long>(rng() % 4)));
    auto m = metric_from_blocks(s, c);
    auto m3 = explicit_metric(s, Scalar(3) * m.matrix);
    auto a = go_sample_check(m, 30, 11), b = go_sample_check(m3, 30, 11);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.witness.has_value(), b.witness.has_value());
    if (a.witness && b.witness) EXPECT_EQ(a.witness->X, b.witness->X);
  }
}

TEST(GoCheck, FloatLeastSquaresOracleAgrees) {
  std::mt19937_64 rng(2024);
  const auto& ids = catalogue_ids();
  int consistent = 0, inconsistent = 0, disagreements = 0;
  for (int t = 0; t < 100; ++t) {
    const std::string id = ids[rng() % ids.size()];
    auto s = space_by_id(id);
    auto dec = isotypic_decompose(*s);
    std::vector<Scalar> c;
    for (size_t j = 0; j < dec.components.size(); ++j) c.push_back(q(1 + static_cast<long long>(rng() % 3)));
    auto m = metric_from_blocks(s, c);
    Vec X = random_samples(s->dim_m(), 1, rng()).front();
    bool exact = geodesic_lemma_solve(m, X).consistent;

    const LieAlgebra& L = s->algebra();
    Vec x = s->from_m_coords(X), lx = s->from_m_coords(m.matrix.apply(X));
    Vec rhs = L.bracket(lx, x);
    const auto& hb = s->h().basis();
    Eigen::MatrixXd A(L.dim(), hb.size());
    Eigen::VectorXd b(L.dim());
    for (size_t j = 0; j < hb.size(); ++j) {
      Vec col = L.bracket(hb[j], lx);
      for (size_t i = 0; i < L.dim(); ++i) A(i, j) = col[i].to_double();
    }
    for (size_t i = 0; i < L.dim(); ++i) b(i) = rhs[i].to_double();
    Eigen::VectorXd sol = A.completeOrthogonalDecomposition().solve(b);
    double residual = (A * sol - b).norm() / std::max(1.0, b.norm());
    bool fl = residual < 1e-8;
    if (fl != exact) {
      ++disagreements;
      ADD_FAILURE() << id << ": float residual " << residual << " vs exact " << exact;
    }
    (exact ? consistent : inconsistent)++;
  }
  EXPECT_EQ(disagreements, 0);
  EXPECT_GT(consistent, 0);
  EXPECT_GT(inconsistent, 0);
}
