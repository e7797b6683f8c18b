#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "goorbit/isotypic.hpp"

namespace goorbit {

enum class Provenance { Standard, BlockCoeffs, Fibration, Explicit };
std::string provenance_name(Provenance p);

// Lambda on m-coordinates; <X, Y> = -q(Lambda X, Y).
struct MetricEndomorphism {
  SpacePtr space;
  Mat matrix;
  Provenance provenance = Provenance::Explicit;
  std::string description;
};

// Throws unless Lambda is q-symmetric, positive definite and ad(h)-equivariant.
void validate_metric(const MetricEndomorphism& metric);

MetricEndomorphism standard_metric(SpacePtr space);
MetricEndomorphism explicit_metric(SpacePtr space, Mat matrix, std::string description = "explicit");
// One coefficient per isotypic component (scalar on each), or one per element
// of the canonical commutant basis.
MetricEndomorphism metric_from_blocks(SpacePtr space, const std::vector<Scalar>& coeffs);
// Id on M_B, lambda Id on M_F.
MetricEndomorphism fibration_metric(SpacePtr space, const Subspace& K, const Scalar& lambda,
                                    const std::string& K_name = "K");

struct LemmaSolution {
  bool consistent = false;
  std::optional<Vec> a;  // element of h (ambient coordinates), minimum -q norm
  size_t rank_a = 0;
  size_t rank_augmented = 0;
};
// Solve [a, Lambda X] = [Lambda X, X] for a in h. X is in m-coordinates.
LemmaSolution geodesic_lemma_solve(const MetricEndomorphism& metric, const Vec& X);

struct Witness {
  Vec X;  // m-coordinates
  size_t sample_index = 0;
  size_t rank_a = 0;
  size_t rank_augmented = 0;
};

enum class GoStatus { GoSampled, NotGoCertified, FilteredOut };
std::string status_name(GoStatus s);

struct GoVerdict {
  GoStatus status = GoStatus::GoSampled;
  size_t samples_run = 0;
  uint64_t seed = 0;
  std::optional<Witness> witness;
  std::optional<std::string> filter_name;
  std::optional<bool> normalizer_ok;
  std::optional<bool> biinvariance_ok;
  double seconds = 0;
};

inline constexpr uint64_t kDefaultSeed = 42;
// GOORBIT_SEED if set, else kDefaultSeed.
uint64_t default_seed();

// Component basis vectors, then cross-component pair sums, then pair sums within a component.
std::vector<Vec> structured_batch(const ReductiveSpace& space, const IsotypicDecomposition& dec);
std::vector<Vec> random_samples(size_t dim, size_t count, uint64_t seed);

struct SampleOptions {
  unsigned threads = 1;
  bool structured = true;
};
// Structured batch followed by n_samples random vectors.
GoVerdict go_sample_check(const MetricEndomorphism& metric, size_t n_samples, uint64_t seed,
                          const SampleOptions& opt = {});
// Total budget counts structured and random samples.
std::optional<Witness> find_witness(const MetricEndomorphism& metric, size_t budget, uint64_t seed,
                                    const SampleOptions& opt = {});
// True when the witness still yields an inconsistent system.
bool replay_witness(const MetricEndomorphism& metric, const Witness& w);

bool normalizer_filter(const MetricEndomorphism& metric);
bool biinvariance_filter(const MetricEndomorphism& metric);

nlohmann::json to_json(const GoVerdict& v, bool timing = true);
nlohmann::json to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);
nlohmann::json metric_to_json(const MetricEndomorphism& m);
MetricEndomorphism metric_from_json(SpacePtr space, const nlohmann::json& j);

}  // namespace goorbit
