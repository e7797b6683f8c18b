#include "goorbit/classify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "goorbit/error.hpp"

namespace goorbit {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::string join_scalars(const std::vector<Scalar>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].pretty();
  return s;
}

bool is_scalar_multiple_of_identity(const Mat& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (i == j ? m(i, j) != m(0, 0) : !m(i, j).is_zero()) return false;
  return true;
}

nlohmann::json vecs_json(const std::vector<Vec>& vs) {
  nlohmann::json j = nlohmann::json::array();
  for (const Vec& v : vs) {
    nlohmann::json row = nlohmann::json::array();
    for (const Scalar& s : v) row.push_back(s.pretty());
    j.push_back(row);
  }
  return j;
}

// Dimension of a maximal abelian subalgebra of the subalgebra S: the smallest
// centralizer of an element of S within S, over a few fixed integer combinations.
size_t torus_rank(const LieAlgebra& L, const Subspace& S) {
  if (S.dim() == 0) return 0;
  std::mt19937_64 rng(1);
  size_t best = S.dim();
  for (int t = 0; t < 4; ++t) {
    Vec x = zero_vec(L.dim());
    for (const Vec& b : S.basis()) x = x + Scalar(Rational(static_cast<long long>(rng() % 7) + 1)) * b;
    best = std::min(best, centralizer_in(L, Subspace::span(L.dim(), {x}), S).dim());
  }
  return best;
}

}  // namespace

MetricEndomorphism parse_metric_spec(SpacePtr space, const std::string& spec) {
  if (spec == "standard") return standard_metric(std::move(space));
  if (spec.rfind("fib:", 0) == 0) {
    auto parts = split(spec.substr(4), ':');
    if (parts.size() != 2) throw ParseError("metric spec 'fib:<K-name>:<lambda>' expected, got '" + spec + "'");
    const Subspace& K = space->subalgebra(parts[0]);
    return fibration_metric(space, K, Scalar::parse(parts[1]), parts[0]);
  }
  if (spec.rfind("blocks:", 0) == 0) {
    std::vector<Scalar> c;
    for (const auto& p : split(spec.substr(7), ',')) c.push_back(Scalar::parse(p));
    if (c.empty()) throw ParseError("metric spec 'blocks:' needs coefficients");
    return metric_from_blocks(std::move(space), c);
  }
  throw ParseError("unknown metric spec '" + spec + "' (standard | fib:<K>:<lambda> | blocks:<c1,c2,...>)");
}

nlohmann::json space_to_json(const ReductiveSpace& s) {
  const LieAlgebra& L = s.algebra();
  nlohmann::json subs = nlohmann::json::object();
  for (const auto& [name, K] : s.subalgebras()) subs[name] = K.dim();
  return {{"id", s.id()},
          {"label", s.label()},
          {"algebra", L.name()},
          {"basis", L.labels()},
          {"dim_g", L.dim()},
          {"dim_h", s.h().dim()},
          {"dim_m", s.dim_m()},
          {"h", vecs_json(s.h().basis())},
          {"m", vecs_json(s.m().basis())},
          {"subalgebras", subs}};
}

nlohmann::json structure_json(Family f) {
  const Chevalley& c = chevalley(f);
  const RootSystem& rs = c.rs;
  nlohmann::json roots = nlohmann::json::array();
  for (const Root& r : rs.roots()) roots.push_back(root_label(r));
  auto form = [](const Mat& q) {
    nlohmann::json j = nlohmann::json::array();
    for (size_t i = 0; i < q.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (size_t k = 0; k < q.cols(); ++k) row.push_back(q(i, k).pretty());
      j.push_back(row);
    }
    return j;
  };
  return {{"family", family_name(f)},
          {"roots", roots},
          {"structure_constants", structure_table_json(rs, c.table)},
          {"split_dim", c.split.dim()},
          {"compact", {{"name", c.compact.name()}, {"basis", c.compact.labels()}, {"q_form", form(c.compact.q_form())}}}};
}

const std::vector<std::string>& expected_nonnormal() {
  static const std::vector<std::string> ids{"a2.1", "berger", "c2.1", "cp3"};
  return ids;
}

std::vector<std::string> candidate_specs(const ReductiveSpace& s, const IsotypicDecomposition& dec,
                                         const CommutantBasis& cb, const ClassifyConfig& config) {
  const size_t nc = dec.components.size();
  std::vector<std::string> specs{"standard"};
  std::set<std::string> seen{"standard"};
  auto add = [&](const std::string& spec) {
    if (seen.insert(spec).second) specs.push_back(spec);
  };
  if (nc >= 2) {
    std::vector<size_t> idx(nc - 1, 0);
    const size_t L = config.lattice.size();
    while (true) {
      std::vector<Scalar> c{Scalar(1)};
      for (size_t k : idx) c.push_back(Scalar(config.lattice[k]));
      bool all_one = std::all_of(c.begin(), c.end(), [](const Scalar& x) { return x.is_one(); });
      if (!all_one) add("blocks:" + join_scalars(c));
      size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == L) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
  }
  if (cb.basis.size() > nc) {
    // Identity plus a multiple of one non-identity commutant element.
    std::vector<Scalar> id_coeffs(cb.basis.size());
    for (size_t j = 0; j < nc; ++j) {
      size_t k = 0;
      while (cb.component_of[k] != j) ++k;
      id_coeffs[k] = Scalar(1);
    }
    for (size_t k = 0; k < cb.basis.size(); ++k) {
      if (!id_coeffs[k].is_zero()) continue;
      for (const Rational& c : config.lattice) {
        std::vector<Scalar> coeffs = id_coeffs;
        coeffs[k] = Scalar(c);
        Mat M = Mat::identity(s.dim_m()) + Scalar(c) * cb.basis[k];
        if (is_positive_definite(s.m_gram() * M)) add("blocks:" + join_scalars(coeffs));
      }
    }
  }
  for (const auto& [name, K] : s.subalgebras()) {
    if (name == "g") continue;
    FibrationSplit fs = fibration_split(s, K);
    if (fs.fiber.dim() == 0 || fs.base.dim() == 0) continue;
    for (const Rational& l : config.lattice)
      if (l != Rational(1)) add("fib:" + name + ":" + Scalar(l).pretty());
  }
  return specs;
}

std::vector<std::string> candidate_specs(const ReductiveSpace& s, const ClassifyConfig& config) {
  auto dec = isotypic_decompose(s);
  return candidate_specs(s, dec, commutant_symmetric_basis(s, dec), config);
}

SpaceRecord classify_space(const std::string& id, const ClassifyConfig& config) {
  auto t0 = std::chrono::steady_clock::now();
  SpaceRecord rec;
  rec.id = id;
  try {
    SpacePtr s = space_by_id(id);
    rec.label = s->label();
    rec.expected_verdict = s->expected().expected_verdict;
    rec.dim_m = s->dim_m();
    auto dec = isotypic_decompose(*s);
    auto cb = commutant_symmetric_basis(*s, dec);
    rec.isotypic_dims = dec.dims();
    rec.commutant_dim = cb.basis.size();
    const Subspace p = trivial_component(*s);
    const size_t nc = dec.components.size();

    // Annotations.
    const bool irreducible = nc == 1 && dec.components[0].commutant_dim == 1 && !dec.trivial_index;
    const bool lie_group = p.dim() == s->dim_m();
    if (irreducible) rec.annotations.push_back("isotropy_irreducible");
    if (nc == 2 && std::all_of(dec.components.begin(), dec.components.end(),
                               [](const IsotypicComponent& c) { return c.irreducible(); }))
      rec.annotations.push_back("two_irreducible_summands");
    if (bracket_span(s->algebra(), s->h(), s->h()).dim() == 0) rec.annotations.push_back("abelian_isotropy");
    if (torus_rank(s->algebra(), s->h()) == torus_rank(s->algebra(), Subspace::whole(s->algebra().dim())))
      rec.annotations.push_back("maximal_rank_isotropy");
    if (s->dim_m() <= 6) rec.annotations.push_back("dim_le_6");
    if (lie_group) rec.annotations.push_back("lie_group_quotient");

    const std::vector<std::string> specs = candidate_specs(*s, dec, cb, config);

    SampleOptions opt;
    opt.threads = config.threads;
    for (const std::string& spec : specs) {
      MetricEndomorphism m = parse_metric_spec(s, spec);
      CandidateResult cr;
      cr.metric = spec;
      cr.standard = is_scalar_multiple_of_identity(m.matrix);
      cr.normalizer_ok = normalizer_filter(m);
      cr.biinvariance_ok = biinvariance_filter(m);
      cr.verdict.seed = config.seed;
      cr.verdict.normalizer_ok = cr.normalizer_ok;
      cr.verdict.biinvariance_ok = cr.biinvariance_ok;
      if (!cr.normalizer_ok || !cr.biinvariance_ok) {
        cr.verdict.status = GoStatus::FilteredOut;
        cr.verdict.filter_name = !cr.normalizer_ok ? "normalizer" : "biinvariance";
      } else if (lie_group) {
        // Bi-invariant metrics on a Lie group are g.o.; the filter is the full test here.
        cr.verdict.status = GoStatus::GoSampled;
        cr.verdict.samples_run = 0;
      } else {
        GoVerdict v = go_sample_check(m, config.samples, config.seed, opt);
        v.normalizer_ok = cr.normalizer_ok;
        v.biinvariance_ok = cr.biinvariance_ok;
        cr.verdict = v;
      }
      if (!cr.standard && cr.verdict.status == GoStatus::GoSampled) rec.nonnormal_params.push_back(spec);
      rec.evidence.push_back(std::move(cr));
    }

    if (lie_group) {
      rec.verdict = "lie_group_case";
    } else if (irreducible) {
      rec.verdict = "isotropy_irreducible";
    } else if (!rec.nonnormal_params.empty()) {
      rec.verdict = "nonnormal_go_family";
    } else {
      rec.verdict = "all_metrics_normal";
    }
    if (!rec.nonnormal_params.empty() && rec.verdict != "nonnormal_go_family")
      throw ConsistencyError("non-standard candidate passed on a space classified " + rec.verdict);
    if (rec.verdict == "all_metrics_normal" && rec.commutant_dim > 1) {
      bool refuted = std::any_of(rec.evidence.begin(), rec.evidence.end(), [](const CandidateResult& c) {
        return !c.standard && c.verdict.status != GoStatus::GoSampled;
      });
      if (!refuted) throw ConsistencyError("no refutation recorded for an all_metrics_normal verdict");
    }
  } catch (const std::exception& e) {
    rec.verdict = "error";
    rec.error = e.what();
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

bool ClassificationReport::matches_expectation() const {
  for (const auto& s : spaces)
    if (!s.matches_expectation()) return false;
  std::vector<std::string> want;
  for (const auto& s : spaces)
    if (std::find(expected_nonnormal().begin(), expected_nonnormal().end(), s.id) != expected_nonnormal().end())
      want.push_back(s.id);
  return nonnormal == want;
}

bool ClassificationReport::any_error() const {
  return std::any_of(spaces.begin(), spaces.end(), [](const SpaceRecord& s) { return s.error.has_value(); });
}

ClassificationReport classify(const std::vector<std::string>& ids, const ClassifyConfig& config) {
  ClassificationReport r;
  r.config = config;
  std::vector<std::string> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& id : sorted) r.spaces.push_back(classify_space(id, config));
  for (const auto& s : r.spaces)
    if (s.admits_nonnormal()) r.nonnormal.push_back(s.id);
  return r;
}

nlohmann::json to_json(const ClassificationReport& r) {
  using nlohmann::json;
  json lattice = json::array();
  for (const auto& l : r.config.lattice) lattice.push_back(l.str());
  json spaces = json::array();
  for (const auto& s : r.spaces) {
    json ev = json::array();
    for (const auto& c : s.evidence)
      ev.push_back({{"metric", c.metric}, {"standard", c.standard}, {"result", to_json(c.verdict, r.config.timing)}});
    json js{{"id", s.id},
            {"label", s.label},
            {"dim_m", s.dim_m},
            {"isotypic_dims", s.isotypic_dims},
            {"commutant_dim", s.commutant_dim},
            {"verdict", s.verdict},
            {"expected_verdict", s.expected_verdict},
            {"matches_expectation", s.matches_expectation()},
            {"standard_only", s.standard_only()},
            {"nonnormal_params", s.nonnormal_params},
            {"annotations", s.annotations},
            {"evidence", ev}};
    if (s.error) js["error"] = *s.error;
    if (r.config.timing) js["seconds"] = s.seconds;
    spaces.push_back(js);
  }
  return {{"config", {{"lattice", lattice}, {"samples", r.config.samples}, {"seed", r.config.seed}}},
          {"scope",
           "Positive g.o. verdicts are sampled at the listed lattice parameters only; refutations are exact "
           "and replayable."},
          {"spaces", spaces},
          {"summary",
           {{"nonnormal_go", r.nonnormal},
            {"expected_nonnormal_go", expected_nonnormal()},
            {"matches_expectation", r.matches_expectation()}}}};
}

}  // namespace goorbit
