// goorbit: command-line surface over the library.
#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

#include "goorbit/classify.hpp"
#include "goorbit/error.hpp"

using namespace goorbit;
using nlohmann::json;

namespace {

void emit(const json& j, const std::string& out) {
  if (out.empty()) return;
  if (out == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error("cannot write " + out);
  f << j.dump(2) << "\n";
}

std::string dims_str(const std::vector<size_t>& d) {
  std::string s = "(";
  for (size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + std::to_string(d[i]);
  return s + ")";
}

std::string vec_str(const LieAlgebra& L, const Vec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const bool neg = v[i].support_mask() == 1 && v[i].sign() < 0;
    const Scalar c = neg ? -v[i] : v[i];
    std::string cs = c.pretty();
    bool compound = cs.find_first_of("+-", 1) != std::string::npos;
    std::string term = c.is_one() ? L.labels()[i] : (compound ? "(" + cs + ")" : cs) + "*" + L.labels()[i];
    if (s.empty())
      s = (neg ? "-" : "") + term;
    else
      s += (neg ? " - " : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

int cmd_build(const std::string& fam, const std::string& out) {
  Family f = parse_family(fam);
  const Chevalley& c = chevalley(f);
  std::cout << family_name(f) << ": dim " << c.compact.dim() << ", " << c.rs.positive.size() << " positive roots, "
            << c.table.size() << " structure constants\n";
  std::cout << std::left << std::setw(16) << "pair" << std::setw(6) << "N" << "source\n";
  for (const auto& [key, n] : c.table.entries) {
    const auto& [g, d] = key;
    const Root& rg = g;
    const Root& rd = d;
    std::cout << std::setw(16) << (root_label(rg) + "," + root_label(rd)) << std::setw(6) << n
              << source_name(c.table.source.at(key)) << "\n";
  }
  for (const Root& r : c.rs.positive)
    std::cout << "Q(F_" << root_label(r) << ", F_" << root_label(r) << ") = " << c.compact.q(c.F(r), c.F(r)).pretty()
              << "\n";
  emit(structure_json(f), out);
  return 0;
}

int cmd_space(const std::string& id, const std::string& out) {
  SpacePtr s = space_by_id(id);
  const LieAlgebra& L = s->algebra();
  std::cout << s->id() << ": " << s->label() << "\n  g = " << L.name() << " (dim " << L.dim() << "), dim h = "
            << s->h().dim() << ", dim m = " << s->dim_m() << "\n  h:\n";
  for (const Vec& v : s->h().basis()) std::cout << "    " << vec_str(L, v) << "\n";
  std::cout << "  m:\n";
  for (const Vec& v : s->m().basis()) std::cout << "    " << vec_str(L, v) << "\n";
  std::cout << "  subalgebras containing h:";
  for (const auto& [name, K] : s->subalgebras()) std::cout << " " << name << "(" << K.dim() << ")";
  std::cout << "\n";
  emit(space_to_json(*s), out);
  return 0;
}

int cmd_decompose(const std::string& id, const std::string& out) {
  SpacePtr s = space_by_id(id);
  auto dec = isotypic_decompose(*s);
  const LieAlgebra& L = s->algebra();
  std::cout << s->id() << ": m = " << dims_str(dec.dims()) << "\n";
  for (size_t j = 0; j < dec.components.size(); ++j) {
    const auto& c = dec.components[j];
    std::cout << "  component " << j << ": dim " << c.dim() << ", casimir " << c.casimir.str() << ", "
              << rep_type_name(c.type) << ", " << c.multiplicity << " x " << c.irreducible_dim
              << (c.irreducible() ? " (irreducible)" : "") << ", commutant " << c.commutant_dim
              << (c.type_consistent ? "" : " [type mismatch]") << (dec.trivial_index == j ? ", trivial" : "") << "\n";
    for (const Vec& v : c.span.basis()) std::cout << "      " << vec_str(L, v) << "\n";
  }
  json j = to_json(dec);
  j["space"] = s->id();
  emit(j, out);
  return 0;
}

int cmd_check(const std::string& id, const std::string& spec, size_t samples, uint64_t seed, unsigned threads,
              const std::string& out) {
  SpacePtr s = space_by_id(id);
  MetricEndomorphism m = parse_metric_spec(s, spec);
  SampleOptions opt;
  opt.threads = threads;
  GoVerdict v = go_sample_check(m, samples, seed, opt);
  v.normalizer_ok = normalizer_filter(m);
  v.biinvariance_ok = biinvariance_filter(m);
  std::cout << s->id() << " " << m.description << ": " << status_name(v.status) << " after " << v.samples_run
            << " samples (seed " << seed << "); normalizer filter " << (*v.normalizer_ok ? "pass" : "FAIL")
            << ", bi-invariance filter " << (*v.biinvariance_ok ? "pass" : "FAIL") << "\n";
  if (v.witness) {
    std::cout << "  witness X (m-coordinates):";
    for (const auto& x : v.witness->X) std::cout << " " << x.pretty();
    std::cout << "\n  rank [h, Lambda X] = " << v.witness->rank_a << ", augmented rank " << v.witness->rank_augmented
              << "\n";
  }
  json j = to_json(v);
  j["space"] = s->id();
  j["metric"] = metric_to_json(m);
  emit(j, out);
  return v.status == GoStatus::GoSampled ? 0 : 2;
}

int cmd_certify(const std::string& id, const std::string& spec, size_t budget, uint64_t seed, unsigned threads,
                const std::string& out) {
  SpacePtr s = space_by_id(id);
  MetricEndomorphism m = parse_metric_spec(s, spec);
  SampleOptions opt;
  opt.threads = threads;
  auto w = find_witness(m, budget, seed, opt);
  if (!w) {
    std::cout << s->id() << " " << m.description << ": no witness within " << budget << " samples (seed " << seed
              << ")\n";
    return 2;
  }
  std::cout << s->id() << " " << m.description << ": not g.o., witness at sample " << w->sample_index
            << ", rank " << w->rank_a << " vs augmented " << w->rank_augmented << "\n";
  emit({{"space", s->id()}, {"seed", seed}, {"budget", budget}, {"metric", metric_to_json(m)}, {"witness", to_json(*w)}},
       out);
  return 0;
}

int cmd_replay(const std::string& file) {
  std::ifstream f(file);
  if (!f) throw Error("cannot read " + file);
  json j = json::parse(f);
  SpacePtr s = space_by_id(j.at("space").get<std::string>());
  MetricEndomorphism m = metric_from_json(s, j.at("metric"));
  Witness w = witness_from_json(j.at("witness"));
  bool ok = replay_witness(m, w);
  std::cout << s->id() << ": witness " << (ok ? "re-verified (system inconsistent)" : "did NOT re-verify") << "\n";
  return ok ? 0 : 2;
}

int cmd_classify(std::vector<std::string> ids, bool all, const ClassifyConfig& cfg, const std::string& out) {
  if (all || ids.empty()) ids = catalogue_ids();
  for (const auto& id : ids)
    if (std::find(catalogue_ids().begin(), catalogue_ids().end(), id) == catalogue_ids().end())
      throw Error("unknown space id '" + id + "'");
  ClassificationReport r = classify(ids, cfg);
  std::cout << std::left << std::setw(8) << "space" << std::setw(7) << "dim m" << std::setw(12) << "isotypic"
            << std::setw(6) << "comm" << std::setw(24) << "verdict" << std::setw(7) << "match" << "label\n";
  for (const auto& s : r.spaces) {
    std::cout << std::setw(8) << s.id << std::setw(7) << s.dim_m << std::setw(12) << dims_str(s.isotypic_dims)
              << std::setw(6) << s.commutant_dim << std::setw(24) << s.verdict << std::setw(7)
              << (s.matches_expectation() ? "yes" : "NO") << s.label << "\n";
    if (s.error) std::cout << "    error: " << *s.error << "\n";
  }
  std::cout << "non-normal g.o. metrics:";
  for (const auto& id : r.nonnormal) std::cout << " " << id;
  std::cout << "\n" << (r.matches_expectation() ? "matches" : "DOES NOT match") << " the expected classification\n";
  emit(to_json(r), out);
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"goorbit: geodesic orbit metrics on G/H with H = SU(2) or SO(3), rank-two simple G"};
  app.require_subcommand(1);
  std::string out;
  std::string target, spec = "standard", replay;
  size_t samples = 200, budget = 50;
  uint64_t seed = 0;
  unsigned threads = 1;
  std::vector<std::string> ids;
  bool all = false, timing = false;
  std::vector<std::string> lattice;

  auto* build = app.add_subcommand("build", "Chevalley basis, structure constants and compact form");
  build->add_option("family", target, "a2 | a1a1 | c2 | g2")->required();
  build->add_option("--out", out, "write JSON here ('-' for stdout)");

  auto* space = app.add_subcommand("space", "Reductive decomposition g = h + m");
  space->add_option("id", target, "space id, e.g. c2.1")->required();
  space->add_option("--out", out, "write JSON here ('-' for stdout)");

  auto* dec = app.add_subcommand("decompose", "Isotypic decomposition of m and the invariant-metric commutant");
  dec->add_option("id", target, "space id")->required();
  dec->add_option("--out", out, "write JSON here ('-' for stdout)");

  auto* check = app.add_subcommand("check-go", "Sampled geodesic-orbit check of one metric");
  check->add_option("id", target, "space id")->required();
  check->add_option("--metric", spec, "standard | fib:<K>:<lambda> | blocks:<c1,c2,...>");
  check->add_option("--samples", samples, "random samples after the structured batch")->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "RNG seed (default: GOORBIT_SEED or 42)");
  check->add_option("--threads", threads, "worker threads");
  check->add_option("--out", out, "write JSON here ('-' for stdout)");

  auto* cert = app.add_subcommand("certify", "Search for an exact non-g.o. witness, or replay one");
  cert->add_option("id", target, "space id");
  cert->add_option("--metric", spec, "metric spec");
  cert->add_option("--budget", budget, "total samples, structured batch included")->check(CLI::PositiveNumber);
  cert->add_option("--seed", seed, "RNG seed (default: GOORBIT_SEED or 42)");
  cert->add_option("--threads", threads, "worker threads");
  cert->add_option("--replay", replay, "re-verify a certificate written by --out");
  cert->add_option("--out", out, "write the certificate here");

  auto* cls = app.add_subcommand("classify", "Run the full classification and compare with the expected table");
  cls->add_option("ids", ids, "space ids (default: all)");
  cls->add_flag("--all", all, "every catalogued space");
  cls->add_option("--samples", samples, "random samples per candidate metric")->check(CLI::PositiveNumber);
  cls->add_option("--seed", seed, "RNG seed (default: GOORBIT_SEED or 42)");
  cls->add_option("--lattice", lattice, "coefficient lattice, e.g. --lattice 1/2 1 2")->delimiter(',');
  cls->add_option("--threads", threads, "worker threads per sample scan");
  cls->add_flag("--timing", timing, "include wall-clock times in the report");
  cls->add_option("--out", out, "write the JSON report here ('-' for stdout)");

  CLI11_PARSE(app, argc, argv);
  try {
    const uint64_t s = seed ? seed : default_seed();
    if (*build) return cmd_build(target, out);
    if (*space) return cmd_space(target, out);
    if (*dec) return cmd_decompose(target, out);
    if (*check) return cmd_check(target, spec, samples, s, threads, out);
    if (*cert) {
      if (!replay.empty()) return cmd_replay(replay);
      if (target.empty()) throw Error("certify needs a space id or --replay");
      return cmd_certify(target, spec, budget, s, threads, out);
    }
    if (*cls) {
      ClassifyConfig cfg;
      cfg.samples = samples;
      cfg.seed = s;
      cfg.threads = threads;
      cfg.timing = timing;
      if (!lattice.empty()) {
        cfg.lattice.clear();
        for (const auto& l : lattice) cfg.lattice.push_back(Rational::parse(l));
      }
      return cmd_classify(ids, all, cfg, out);
    }
  } catch (const std::exception& e) {
    std::cerr << "goorbit: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
