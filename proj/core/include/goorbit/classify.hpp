#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "goorbit/gocheck.hpp"

namespace goorbit {

// "standard" | "fib:<K-name>:<lambda>" | "blocks:<c1,c2,...>"
MetricEndomorphism parse_metric_spec(SpacePtr space, const std::string& spec);

nlohmann::json space_to_json(const ReductiveSpace& space);
nlohmann::json structure_json(Family f);

struct ClassifyConfig {
  std::vector<Rational> lattice{Rational(1, 3), Rational(1, 2), Rational(1), Rational(2), Rational(5)};
  size_t samples = 200;
  uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  bool timing = false;  // wall-clock fields make reports differ run to run
};

struct CandidateResult {
  std::string metric;  // replayable metric spec
  bool standard = false;
  bool normalizer_ok = true;
  bool biinvariance_ok = true;
  GoVerdict verdict;
};

struct SpaceRecord {
  std::string id, label;
  size_t dim_m = 0;
  std::vector<size_t> isotypic_dims;
  size_t commutant_dim = 0;
  std::string verdict;  // all_metrics_normal | nonnormal_go_family | isotropy_irreducible | lie_group_case | error
  std::string expected_verdict;
  std::vector<std::string> nonnormal_params;  // passing non-standard candidates
  std::vector<std::string> annotations;
  std::vector<CandidateResult> evidence;
  std::optional<std::string> error;
  double seconds = 0;

  bool admits_nonnormal() const { return verdict == "nonnormal_go_family"; }
  bool standard_only() const { return verdict != "nonnormal_go_family" && verdict != "error"; }
  bool matches_expectation() const { return !error && verdict == expected_verdict; }
};

struct ClassificationReport {
  ClassifyConfig config;
  std::vector<SpaceRecord> spaces;  // sorted by id
  std::vector<std::string> nonnormal;
  bool matches_expectation() const;
  bool any_error() const;
  int exit_code() const { return any_error() ? 1 : matches_expectation() ? 0 : 2; }
};

// Candidate metrics as replayable specs: standard, the per-component lattice
// (first coefficient 1), identity plus one non-identity commutant element, and
// fibration deformations along each named subalgebra.
std::vector<std::string> candidate_specs(const ReductiveSpace& s, const IsotypicDecomposition& dec,
                                         const CommutantBasis& cb, const ClassifyConfig& config);
std::vector<std::string> candidate_specs(const ReductiveSpace& s, const ClassifyConfig& config = {});

SpaceRecord classify_space(const std::string& id, const ClassifyConfig& config);
ClassificationReport classify(const std::vector<std::string>& ids, const ClassifyConfig& config);

nlohmann::json to_json(const ClassificationReport& r);
// Spaces the catalogue expects to carry non-normal g.o. metrics.
const std::vector<std::string>& expected_nonnormal();

}  // namespace goorbit
