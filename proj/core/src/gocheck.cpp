#include "goorbit/gocheck.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <thread>

#include <nlohmann/json.hpp>

#include "goorbit/error.hpp"

namespace goorbit {

namespace {

std::string where(const ReductiveSpace& s) { return "space " + s.id() + ": "; }

bool commutes(const Mat& a, const Mat& b) { return a * b == b * a; }

// Lie algebra n_g(h)/h carried by the trivial component p.
LieAlgebra quotient_on_p(const ReductiveSpace& space, const Subspace& p) {
  const LieAlgebra& L = space.algebra();
  const size_t d = p.dim();
  StructureTensor t(d * d);
  std::vector<std::string> labels;
  for (size_t i = 0; i < d; ++i) labels.push_back("p" + std::to_string(i));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Vec br = L.bracket(p.basis()[i], p.basis()[j]);
      // Drop the h-part: orthogonal projection onto m, then read p-coordinates.
      Vec m_part = space.from_m_coords(space.project_to_m(br));
      auto c = p.coords(m_part);
      if (!c) throw ConsistencyError(where(space) + "[p, p] leaves h + p");
      for (size_t k = 0; k < d; ++k)
        if (!(*c)[k].is_zero()) t[i * d + j].push_back({k, (*c)[k]});
    }
  Mat q(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) q(i, j) = L.q(p.basis()[i], p.basis()[j]);
  return LieAlgebra("p", labels, std::move(t), q, Scalar(1));
}

Vec scalar_vec_from_json(const nlohmann::json& j) {
  Vec v;
  for (const auto& s : j) v.push_back(Scalar::parse(s.get<std::string>()));
  return v;
}

nlohmann::json vec_to_json(const Vec& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& s : v) j.push_back(s.pretty());
  return j;
}

}  // namespace

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Standard: return "standard";
    case Provenance::BlockCoeffs: return "block_coeffs";
    case Provenance::Fibration: return "fibration";
    case Provenance::Explicit: return "explicit";
  }
  return "explicit";
}

std::string status_name(GoStatus s) {
  switch (s) {
    case GoStatus::GoSampled: return "go_sampled";
    case GoStatus::NotGoCertified: return "not_go_certified";
    case GoStatus::FilteredOut: return "filtered_out";
  }
  return "go_sampled";
}

void validate_metric(const MetricEndomorphism& metric) {
  const ReductiveSpace& s = *metric.space;
  const Mat& L = metric.matrix;
  if (L.rows() != s.dim_m() || L.cols() != s.dim_m()) throw DimensionMismatch(where(s) + "metric has the wrong size");
  Mat g = s.m_gram() * L;
  if (!is_symmetric(g)) throw Error(where(s) + "metric endomorphism is not q-symmetric");
  if (!is_positive_definite(g)) throw Error(where(s) + "metric endomorphism is not positive definite");
  for (const Mat& A : s.ad_h_on_m())
    if (!commutes(A, L)) throw Error(where(s) + "metric endomorphism is not ad(h)-equivariant");
}

MetricEndomorphism standard_metric(SpacePtr space) {
  MetricEndomorphism m{space, Mat::identity(space->dim_m()), Provenance::Standard, "standard"};
  return m;
}

MetricEndomorphism explicit_metric(SpacePtr space, Mat matrix, std::string description) {
  MetricEndomorphism m{std::move(space), std::move(matrix), Provenance::Explicit, std::move(description)};
  validate_metric(m);
  return m;
}

MetricEndomorphism metric_from_blocks(SpacePtr space, const std::vector<Scalar>& coeffs) {
  auto dec = isotypic_decompose(*space);
  auto cb = commutant_symmetric_basis(*space, dec);
  const size_t n = space->dim_m();
  Mat L(n, n);
  if (coeffs.size() == dec.components.size()) {
    for (size_t j = 0; j < coeffs.size(); ++j) L = L + coeffs[j] * component_projection(dec, j);
  } else if (coeffs.size() == cb.basis.size()) {
    for (size_t k = 0; k < coeffs.size(); ++k) L = L + coeffs[k] * cb.basis[k];
  } else {
    throw Error(where(*space) + "expected " + std::to_string(dec.components.size()) + " (one per component) or " +
                std::to_string(cb.basis.size()) + " (one per commutant element) coefficients, got " +
                std::to_string(coeffs.size()));
  }
  std::string desc = "blocks:";
  for (size_t k = 0; k < coeffs.size(); ++k) desc += (k ? "," : "") + coeffs[k].pretty();
  MetricEndomorphism m{std::move(space), std::move(L), Provenance::BlockCoeffs, desc};
  validate_metric(m);
  return m;
}

MetricEndomorphism fibration_metric(SpacePtr space, const Subspace& K, const Scalar& lambda, const std::string& K_name) {
  if (lambda.sign() <= 0) throw Error(where(*space) + "fibration parameter must be positive");
  FibrationSplit fs = fibration_split(*space, K);
  const size_t n = space->dim_m();
  std::vector<Vec> cols;
  for (const Vec& v : fs.fiber.basis()) cols.push_back(space->m_coords(v));
  for (const Vec& v : fs.base.basis()) cols.push_back(space->m_coords(v));
  Mat T = Mat::from_cols(cols, n);
  auto Ti = inverse(T);
  if (!Ti) throw ConsistencyError(where(*space) + "fibration split is degenerate");
  Mat D = Mat::identity(n);
  for (size_t i = 0; i < fs.fiber.dim(); ++i) D(i, i) = lambda;
  MetricEndomorphism m{std::move(space), T * D * *Ti, Provenance::Fibration, "fib:" + K_name + ":" + lambda.pretty()};
  validate_metric(m);
  return m;
}

LemmaSolution geodesic_lemma_solve(const MetricEndomorphism& metric, const Vec& X) {
  const ReductiveSpace& s = *metric.space;
  if (is_zero(X)) throw Error(where(s) + "geodesic lemma needs X != 0");
  const LieAlgebra& L = s.algebra();
  const auto& hb = s.h().basis();
  Vec x = s.from_m_coords(X);
  Vec lx = s.from_m_coords(metric.matrix.apply(X));
  std::vector<Vec> cols;
  for (const Vec& hi : hb) cols.push_back(L.bracket(hi, lx));
  Mat A = Mat::from_cols(cols, L.dim());
  Vec rhs = L.bracket(lx, x);
  SolveResult r = solve(A, rhs);
  LemmaSolution out;
  out.rank_a = r.rank_a;
  out.rank_augmented = r.rank_augmented;
  out.consistent = r.particular.has_value();
  if (!out.consistent) return out;

  // Minimum -q norm: a = p + sum t_k n_k, orthogonal to every n_l.
  const size_t k = hb.size();
  Mat G(k, k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) G(i, j) = -L.q(hb[i], hb[j]);
  Vec coef = *r.particular;
  const auto& N = r.null_basis;
  if (!N.empty()) {
    Mat S(N.size(), N.size());
    Vec b(N.size());
    for (size_t l = 0; l < N.size(); ++l) {
      Vec Gn = G.apply(N[l]);
      for (size_t m = 0; m < N.size(); ++m) S(l, m) = dot(N[m], Gn);
      b[l] = -dot(coef, Gn);
    }
    SolveResult t = solve(S, b);
    if (!t.particular) throw ConsistencyError("minimum-norm projection failed");
    for (size_t m = 0; m < N.size(); ++m) coef = coef + (*t.particular)[m] * N[m];
  }
  Vec a = zero_vec(L.dim());
  for (size_t i = 0; i < k; ++i) a = a + coef[i] * hb[i];
  if (L.bracket(a + x, lx) != zero_vec(L.dim())) throw ConsistencyError("geodesic lemma solution does not verify");
  out.a = a;
  return out;
}

uint64_t default_seed() {
  if (const char* env = std::getenv("GOORBIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw Error(std::string("GOORBIT_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return kDefaultSeed;
}

std::vector<Vec> structured_batch(const ReductiveSpace& space, const IsotypicDecomposition& dec) {
  (void)space;
  std::vector<Vec> singles;
  std::vector<size_t> comp;
  for (size_t j = 0; j < dec.components.size(); ++j)
    for (const Vec& v : dec.components[j].coords.basis()) {
      singles.push_back(v);
      comp.push_back(j);
    }
  std::vector<Vec> out = singles;
  for (int same = 0; same < 2; ++same)
    for (size_t i = 0; i < singles.size(); ++i)
      for (size_t k = i + 1; k < singles.size(); ++k)
        if ((comp[i] == comp[k]) == (same == 1)) out.push_back(singles[i] + singles[k]);
  return out;
}

std::vector<Vec> random_samples(size_t dim, size_t count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vec> out;
  out.reserve(count);
  while (out.size() < count) {
    Vec v(dim);
    bool nonzero = false;
    for (size_t i = 0; i < dim; ++i) {
      long long c = static_cast<long long>(rng() % 19) - 9;
      nonzero |= c != 0;
      v[i] = Scalar(Rational(c));
    }
    if (nonzero) out.push_back(std::move(v));
  }
  return out;
}

namespace {

// First inconsistent index among xs, scanning with several threads.
std::optional<Witness> scan(const MetricEndomorphism& metric, const std::vector<Vec>& xs, unsigned threads) {
  std::atomic<size_t> best{xs.size()};
  std::vector<LemmaSolution> sols(xs.size());
  auto work = [&](size_t start, size_t stride) {
    for (size_t i = start; i < xs.size(); i += stride) {
      if (i >= best.load()) return;
      sols[i] = geodesic_lemma_solve(metric, xs[i]);
      if (!sols[i].consistent) {
        size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  size_t i = best.load();
  if (i == xs.size()) return std::nullopt;
  return Witness{xs[i], i, sols[i].rank_a, sols[i].rank_augmented};
}

std::vector<Vec> sample_list(const MetricEndomorphism& metric, size_t n_random, uint64_t seed, bool structured) {
  std::vector<Vec> xs;
  if (structured) xs = structured_batch(*metric.space, isotypic_decompose(*metric.space));
  auto rnd = random_samples(metric.space->dim_m(), n_random, seed);
  xs.insert(xs.end(), rnd.begin(), rnd.end());
  return xs;
}

}  // namespace

GoVerdict go_sample_check(const MetricEndomorphism& metric, size_t n_samples, uint64_t seed, const SampleOptions& opt) {
  if (n_samples < 1) throw Error("go_sample_check needs at least one sample");
  auto t0 = std::chrono::steady_clock::now();
  auto xs = sample_list(metric, n_samples, seed, opt.structured);
  GoVerdict v;
  v.seed = seed;
  v.witness = scan(metric, xs, opt.threads);
  v.status = v.witness ? GoStatus::NotGoCertified : GoStatus::GoSampled;
  v.samples_run = v.witness ? v.witness->sample_index + 1 : xs.size();
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

std::optional<Witness> find_witness(const MetricEndomorphism& metric, size_t budget, uint64_t seed,
                                    const SampleOptions& opt) {
  if (budget < 1) throw Error("find_witness needs a positive budget");
  auto xs = sample_list(metric, budget, seed, opt.structured);
  xs.resize(budget);
  return scan(metric, xs, opt.threads);
}

bool replay_witness(const MetricEndomorphism& metric, const Witness& w) {
  if (w.X.size() != metric.space->dim_m()) throw DimensionMismatch("witness has the wrong dimension");
  LemmaSolution s = geodesic_lemma_solve(metric, w.X);
  return !s.consistent && s.rank_a == w.rank_a && s.rank_augmented == w.rank_augmented;
}

bool normalizer_filter(const MetricEndomorphism& metric) {
  const ReductiveSpace& s = *metric.space;
  Subspace p = trivial_component(s);
  for (const Vec& w : p.basis())
    if (!commutes(s.ad_on_m(w), metric.matrix)) return false;
  return true;
}

bool biinvariance_filter(const MetricEndomorphism& metric) {
  const ReductiveSpace& s = *metric.space;
  Subspace p = trivial_component(s);
  if (p.dim() == 0) return true;
  // p in m-coordinates.
  std::vector<Vec> pc;
  for (const Vec& v : p.basis()) pc.push_back(s.m_coords(v));
  Subspace P = Subspace::span(s.dim_m(), pc);
  for (const Vec& v : P.basis())
    if (!P.contains(metric.matrix.apply(v))) return false;
  LieAlgebra quo = quotient_on_p(s, p);
  IdealDecomposition id = ideal_decomposition(quo);
  // Lambda|_p in p-coordinates (coordinates on p.basis()).
  auto lam_p = [&](const Vec& pcoord) {
    Vec g = zero_vec(s.algebra().dim());
    for (size_t i = 0; i < pcoord.size(); ++i) g = g + pcoord[i] * p.basis()[i];
    Vec img = s.from_m_coords(metric.matrix.apply(s.m_coords(g)));
    return *p.coords(img);
  };
  for (const Subspace& I : id.simple_ideals) {
    std::optional<Scalar> c;
    for (const Vec& v : I.basis()) {
      Vec w = lam_p(v);
      // Scalar on I: w = c v.
      size_t piv = 0;
      while (v[piv].is_zero()) ++piv;
      Scalar r = w[piv] / v[piv];
      if (w != r * v) return false;
      if (c && *c != r) return false;
      c = r;
    }
  }
  for (const Vec& v : id.center.basis())
    if (!id.center.contains(lam_p(v))) return false;
  return true;
}

nlohmann::json to_json(const Witness& w) {
  return {{"X", vec_to_json(w.X)},
          {"sample_index", w.sample_index},
          {"rank_a", w.rank_a},
          {"rank_augmented", w.rank_augmented}};
}

Witness witness_from_json(const nlohmann::json& j) {
  Witness w;
  w.X = scalar_vec_from_json(j.at("X"));
  w.sample_index = j.at("sample_index").get<size_t>();
  w.rank_a = j.at("rank_a").get<size_t>();
  w.rank_augmented = j.at("rank_augmented").get<size_t>();
  return w;
}

nlohmann::json to_json(const GoVerdict& v, bool timing) {
  nlohmann::json j{{"status", status_name(v.status)}, {"samples", v.samples_run}, {"seed", v.seed}};
  j["witness"] = v.witness ? to_json(*v.witness) : nlohmann::json(nullptr);
  if (v.filter_name) j["filter"] = *v.filter_name;
  nlohmann::json f = nlohmann::json::object();
  if (v.normalizer_ok) f["normalizer"] = *v.normalizer_ok;
  if (v.biinvariance_ok) f["biinvariance"] = *v.biinvariance_ok;
  j["filters"] = f;
  if (timing) j["seconds"] = v.seconds;
  return j;
}

nlohmann::json metric_to_json(const MetricEndomorphism& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (size_t i = 0; i < m.matrix.rows(); ++i) rows.push_back(vec_to_json(m.matrix.row(i)));
  return {{"space", m.space->id()},
          {"provenance", provenance_name(m.provenance)},
          {"description", m.description},
          {"matrix", rows}};
}

MetricEndomorphism metric_from_json(SpacePtr space, const nlohmann::json& j) {
  if (j.contains("space") && j.at("space").get<std::string>() != space->id())
    throw Error("metric belongs to space " + j.at("space").get<std::string>() + ", not " + space->id());
  std::vector<Vec> rows;
  for (const auto& r : j.at("matrix")) rows.push_back(scalar_vec_from_json(r));
  Mat M = Mat::from_rows(rows, space->dim_m());
  return explicit_metric(std::move(space), std::move(M), j.value("description", "explicit"));
}

}  // namespace goorbit
