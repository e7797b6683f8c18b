// Acceptance run: one PASS/FAIL line per criterion. `acceptance N` runs one
// criterion, no argument runs all nine. Exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "goorbit/classify.hpp"
#include "goorbit/error.hpp"

using namespace goorbit;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> failures;
  std::string note;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Scalar rat(long long n, long long d = 1) { return Scalar(Rational(n, d)); }

Subspace span(const ReductiveSpace& s, const std::vector<Vec>& v) { return Subspace::span(s.algebra().dim(), v); }

// 1. Chevalley construction.
Outcome criterion1() {
  Outcome o;
  auto t0 = Clock::now();
  const std::vector<std::pair<Family, size_t>> dims{
      {Family::A2, 8}, {Family::A1xA1, 6}, {Family::C2, 10}, {Family::G2, 14}};
  for (const auto& [f, d] : dims) {
    const Chevalley& c = chevalley(f);
    const std::string n = family_name(f);
    o.check(c.compact.dim() == d && c.split.dim() == d, n + " dimension");
    o.check(!c.split.jacobi_violation().has_value(), n + " split Jacobi");
    o.check(!c.compact.jacobi_violation().has_value(), n + " compact Jacobi");
    for (const Root& r : c.rs.positive) {
      Scalar want;
      switch (f) {
        case Family::A2: want = rat(-4); break;
        case Family::A1xA1: continue;  // not listed
        case Family::C2: want = c.rs.is_long(r) ? rat(-4) : rat(-8); break;
        case Family::G2: want = c.rs.is_long(r) ? rat(-4, 3) : rat(-4); break;
      }
      const Scalar got = c.compact.q(c.F(r), c.F(r));
      o.check(got == want, n + " Q(F,F) at " + root_label(r) + " = " + got.pretty() + ", want " + want.pretty());
      o.check(c.compact.q(c.G(r), c.G(r)) == want, n + " Q(G,G) at " + root_label(r));
      o.check(c.compact.killing(c.F(r), c.F(r)) == want, n + " Killing trace at " + root_label(r));
    }
  }
  double t = since(t0);
  o.check(t < 5.0, "runtime " + std::to_string(t) + " s >= 5 s");
  o.note = "dims 8/6/10/14, Jacobi exact, Killing diagonals; " + std::to_string(t) + " s";
  return o;
}

// 2. The twelve embedded su(2) rows.
Outcome criterion2() {
  Outcome o;
  size_t rows = 0;
  for (Family f : {Family::A2, Family::A1xA1, Family::C2, Family::G2})
    for (size_t i = 1; i <= table_rows(f); ++i) {
      ++rows;
      const std::string id = family_name(f) + " row " + std::to_string(i);
      try {
        SpacePtr s = embedded_space(f, i);
        const LieAlgebra& L = s->algebra();
        o.check(s->h().dim() == 3, id + ": dim h");
        o.check(is_subalgebra(L, s->h()), id + ": h closed");
        o.check(bracket_span(L, s->h(), s->h()) == s->h(), id + ": [h,h] = h");
        Mat G(3, 3);
        for (size_t a = 0; a < 3; ++a)
          for (size_t b = 0; b < 3; ++b) G(a, b) = -L.q(s->h().basis()[a], s->h().basis()[b]);
        o.check(is_positive_definite(G), id + ": Killing negative definite on h");
        o.check(s->m() == orth_complement(L, s->h()), id + ": m = h^perp");
        bool inv = true;
        for (const Vec& x : s->h().basis())
          for (const Vec& y : s->m().basis()) inv = inv && s->m().contains(L.bracket(x, y));
        o.check(inv, id + ": m ad_h-invariant");
        SplitTriple t = split_triple(f, i);
        o.check(compactify_sl2_triple(chevalley(f), t.e, t.f, t.h) == span(*s, listed_h(f, i)),
                id + ": compactified split triple");
        o.check(s->m() == span(*s, listed_m(f, i)), id + ": listed m");
      } catch (const std::exception& e) {
        o.check(false, id + ": " + e.what());
      }
    }
  o.check(rows == 12, "row count");
  o.note = std::to_string(rows) + " rows";
  return o;
}

// 3. Isotypic profiles against the listings.
Outcome criterion3() {
  Outcome o;
  size_t compared = 0;
  for (const std::string id : {"a2.1", "a2.2", "a1a1.3", "c2.1", "c2.2", "c2.3", "g2.1", "g2.2", "g2.3", "g2.4"}) {
    SpacePtr s = space_by_id(id);
    const ExpectedFacts& e = s->expected();
    auto dec = isotypic_decompose(*s);
    o.check(dec.dims() == e.isotypic_dims, id + ": component dims");
    if (dec.dims() != e.isotypic_dims) continue;
    for (size_t j = 0; j < dec.components.size(); ++j) {
      const auto& c = dec.components[j];
      const std::string cj = id + " component " + std::to_string(j) + " (dim " + std::to_string(c.dim()) + ")";
      if (e.irreducible[j]) {
        ++compared;
        const bool want = *e.irreducible[j];
        o.check(c.irreducible() == want, cj + ": listed " + (want ? "irreducible" : "reducible") + ", computed " +
                                             std::to_string(c.multiplicity) + " x " +
                                             std::to_string(c.irreducible_dim) + " with " +
                                             std::to_string(c.commutant_dim) + "-dim symmetric commutant");
      }
      if (e.component_spans[j]) {
        ++compared;
        o.check(c.span == span(*s, *e.component_spans[j]), cj + ": span differs from the listing");
      }
    }
    if (e.trivial_span) {
      ++compared;
      o.check(trivial_component(*s) == span(*s, *e.trivial_span), id + ": trivial component span");
    }
    if (id == std::string("c2.1")) {
      // p is su(2): a 3-dim subalgebra equal to its derived algebra.
      Subspace p = trivial_component(*s);
      o.check(p.dim() == 3 && is_subalgebra(s->algebra(), p) && bracket_span(s->algebra(), p, p) == p,
              "c2.1: trivial component is not su(2)");
    }
  }
  o.note = std::to_string(compared) + " listed facts compared";
  return o;
}

// 4. Centralizer of h in m equals normalizer(h) cap m.
Outcome criterion4() {
  Outcome o;
  for (const auto& id : catalogue_ids()) {
    SpacePtr s = space_by_id(id);
    const LieAlgebra& L = s->algebra();
    Subspace c = centralizer_in(L, s->h(), s->m());
    Subspace n = normalizer(L, s->h()).intersect(s->m());
    o.check(c == n, id);
  }
  o.note = std::to_string(catalogue_ids().size()) + " spaces";
  return o;
}

// 5. Confirmations.
Outcome criterion5() {
  Outcome o;
  auto t0 = Clock::now();
  for (const auto& id : catalogue_ids()) {
    SpacePtr s = space_by_id(id);
    auto m = standard_metric(s);
    auto v = go_sample_check(m, 200, 42);
    o.check(v.status == GoStatus::GoSampled, id + ": standard metric refuted");
    for (const Vec& X : random_samples(s->dim_m(), 200, 42)) {
      auto sol = geodesic_lemma_solve(m, X);
      if (!sol.consistent || !is_zero(*sol.a)) {
        o.check(false, id + ": standard metric needs a != 0");
        break;
      }
    }
  }
  const std::vector<std::pair<std::string, std::string>> fams{
      {"a2.1", "normalizer"}, {"c2.1", "sp1xsp1"}, {"cp3", "sp1xsp1"}, {"berger", "normalizer"}};
  size_t runs = 0;
  for (const auto& [id, K] : fams) {
    SpacePtr s = space_by_id(id);
    for (const Scalar& l : {rat(1, 3), rat(1, 2), rat(2), rat(5)}) {
      auto m = fibration_metric(s, s->subalgebra(K), l, K);
      auto v = go_sample_check(m, 200, 42);
      ++runs;
      o.check(v.status == GoStatus::GoSampled, id + " " + m.description + ": refuted");
      o.check(v.samples_run >= 200, id + " " + m.description + ": fewer than 200 samples");
    }
  }
  double t = since(t0);
  o.check(t < 120.0, "runtime " + std::to_string(t) + " s >= 120 s");
  o.note = "standard on 14 spaces, " + std::to_string(runs) + " fibration families; " + std::to_string(t) + " s";
  return o;
}

// 6. Refutations with replayable certificates.
Outcome criterion6() {
  Outcome o;
  std::string where;
  for (const std::string id : {"c2.2", "g2.1", "g2.2", "g2.3"}) {
    SpacePtr s = space_by_id(id);
    auto m = metric_from_blocks(s, {rat(2), rat(1)});
    auto w = find_witness(m, 50, 42);
    o.check(w.has_value(), id + ": no witness within 50 samples");
    if (!w) continue;
    // Through text and back, as a separate process would see it.
    nlohmann::json cert{{"metric", metric_to_json(m)}, {"witness", to_json(*w)}};
    auto back = nlohmann::json::parse(cert.dump());
    auto m2 = metric_from_json(space_by_id(id), back.at("metric"));
    auto w2 = witness_from_json(back.at("witness"));
    o.check(m2.matrix == m.matrix, id + ": metric round trip");
    o.check(replay_witness(m2, w2), id + ": witness does not re-verify");
    where += " " + id + "@" + std::to_string(w->sample_index);
  }
  o.note = "witness sample index:" + where;
  return o;
}

// 7. Filters are necessary conditions.
Outcome criterion7() {
  Outcome o;
  {
    SpacePtr s = space_by_id("c2.1");
    auto dec = isotypic_decompose(*s);
    auto cb = commutant_symmetric_basis(*s, dec);
    const size_t tj = *dec.trivial_index;
    const Mat Pp = component_projection(dec, tj);
    std::vector<Mat> on_p;
    for (size_t k = 0; k < cb.basis.size(); ++k)
      if (cb.component_of[k] == tj && cb.basis[k] != Pp) on_p.push_back(cb.basis[k]);
    o.check(on_p.size() == 5, "c2.1: expected 5 non-identity directions on p");
    std::mt19937_64 rng(7);
    size_t tested = 0;
    for (int t = 0; t < 40; ++t) {
      Mat L = Mat::identity(s->dim_m());
      bool nonscalar = false;
      // The first few trials are single directions, the rest random mixtures.
      for (size_t k = 0; k < on_p.size(); ++k) {
        long long c = static_cast<long long>(rng() % 7) - 3;
        if (t < static_cast<int>(on_p.size())) c = static_cast<int>(k) == t ? 1 : 0;
        nonscalar |= c != 0;
        L = L + rat(c, 10) * on_p[k];
      }
      if (!nonscalar || !is_positive_definite(s->m_gram() * L)) continue;
      ++tested;
      o.check(!biinvariance_filter(explicit_metric(s, L)), "c2.1: accepted a non-scalar block on p");
    }
    o.note = std::to_string(tested) + " non-scalar p-blocks rejected";
  }
  size_t passing = 0;
  for (const auto& id : catalogue_ids()) {
    SpacePtr s = space_by_id(id);
    for (const std::string& spec : candidate_specs(*s)) {
      auto m = parse_metric_spec(s, spec);
      auto v = go_sample_check(m, 200, 42);
      if (v.status != GoStatus::GoSampled) continue;
      ++passing;
      o.check(normalizer_filter(m), id + " " + spec + ": passes sampling, fails normalizer filter");
      o.check(biinvariance_filter(m), id + " " + spec + ": passes sampling, fails bi-invariance filter");
    }
  }
  o.note += "; " + std::to_string(passing) + " sampled-g.o. metrics pass both filters";
  return o;
}

#ifdef GOORBIT_CLI_PATH
int run_cli(const std::string& args) {
  int rc = std::system((std::string("\"") + GOORBIT_CLI_PATH + "\" " + args + " > /dev/null").c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}
std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}
#endif

// 8. Full classification run.
Outcome criterion8() {
  Outcome o;
  auto t0 = Clock::now();
  ClassificationReport r = classify(catalogue_ids(), ClassifyConfig{});
  const std::vector<std::string> want{"a2.1", "berger", "c2.1", "cp3"};
  o.check(r.nonnormal == want, "non-normal set differs");
  o.check(r.exit_code() == 0, "classification does not match the expected table");
  for (const auto& s : r.spaces) {
    if (s.error) o.check(false, s.id + ": " + *s.error);
    if (s.id.rfind("g2.", 0) == 0) o.check(s.standard_only(), s.id + ": not standard-only");
    if (s.admits_nonnormal()) {
      bool witness = false;
      for (const auto& c : s.evidence) witness |= c.verdict.witness.has_value() && !c.standard;
      o.check(!witness, s.id + ": non-normal family with a witness among its candidates");
    }
  }
#ifdef GOORBIT_CLI_PATH
  const std::string a = "acceptance_report_a.json", b = "acceptance_report_b.json";
  o.check(run_cli("classify --all --out " + a) == 0, "goorbit classify --all exit status");
  o.check(run_cli("classify --all --out " + b) == 0, "goorbit classify --all exit status (second run)");
  o.check(!slurp(a).empty() && slurp(a) == slurp(b), "report not byte-identical across runs");
  std::remove(a.c_str());
  std::remove(b.c_str());
#endif
  double t = since(t0);
  o.check(t < 300.0, "runtime " + std::to_string(t) + " s >= 300 s");
  std::string list;
  for (const auto& id : r.nonnormal) list += " " + id;
  o.note = "non-normal:" + list + "; " + std::to_string(t) + " s";
  return o;
}

// 9. Homothety.
Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(9);
  const auto& ids = catalogue_ids();
  size_t refuted = 0;
  for (int t = 0; t < 20; ++t) {
    const std::string id = ids[rng() % ids.size()];
    SpacePtr s = space_by_id(id);
    auto specs = candidate_specs(*s);
    const std::string spec = specs[rng() % specs.size()];
    auto m = parse_metric_spec(s, spec);
    auto m3 = explicit_metric(s, rat(3) * m.matrix);
    const uint64_t seed = rng() % 1000;
    auto a = go_sample_check(m, 50, seed), b = go_sample_check(m3, 50, seed);
    const std::string tag = id + " " + spec + " seed " + std::to_string(seed);
    o.check(a.status == b.status, tag + ": status differs");
    o.check(a.witness.has_value() == b.witness.has_value(), tag + ": witness presence differs");
    if (a.witness && b.witness) {
      ++refuted;
      o.check(a.witness->X == b.witness->X && a.witness->sample_index == b.witness->sample_index,
              tag + ": witness differs");
    }
  }
  o.note = "20 pairs, " + std::to_string(refuted) + " refuted";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> all{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                  criterion6, criterion7, criterion8, criterion9};
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty())
    for (int i = 1; i <= 9; ++i) which.push_back(i);
  bool ok = true;
  for (int k : which) {
    if (k < 1 || k > 9) {
      std::cerr << "unknown criterion " << k << "\n";
      return 1;
    }
    Outcome o;
    try {
      o = all[static_cast<size_t>(k - 1)]();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << k << ": " << o.note << "\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    ok = ok && o.ok;
  }
  return ok ? 0 : 1;
}
