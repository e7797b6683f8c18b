#include "goorbit/chevalley.hpp"

#include <functional>

#include "goorbit/error.hpp"

namespace goorbit {

std::string source_name(EntrySource s) {
  switch (s) {
    case EntrySource::Seed: return "seed";
    case EntrySource::Antisymmetry: return "antisymmetry";
    case EntrySource::Conjugation: return "conjugation";
    case EntrySource::Triple: return "triple";
    case EntrySource::Convention: return "convention";
  }
  return "?";
}

int StructureTable::get(const Root& g, const Root& d) const {
  auto it = entries.find({g, d});
  return it == entries.end() ? 0 : it->second;
}

std::vector<std::tuple<Root, Root, int>> structure_seeds(Family f) {
  const Root a{1, 0}, b{0, 1};
  switch (f) {
    case Family::A2:
      return {{a, b, 1}, {b, -(a + b), 1}, {-(a + b), a, 1}};
    case Family::A1xA1:
      return {};
    case Family::C2: {
      const Root ab{1, 1}, a2b{1, 2};
      return {{a, b, 1}, {-ab, a, 1}, {-a2b, ab, 1}, {b, -a2b, 1}, {b, -ab, 2}, {ab, b, 2}};
    }
    case Family::G2: {
      const Root ab{1, 1}, a2b{2, 1}, a3b{3, 1}, L{3, 2};
      return {{b, a, 1},    {b, a3b, 1},   {a3b, -L, 1}, {a2b, -a3b, 1}, {a2b, -L, 1},
              {-L, ab, 1},  {-L, b, 1},    {-a3b, a, 1}, {-ab, b, 1},    {ab, a, 2},
              {a, -a2b, 2}, {-a2b, ab, 2}, {a, a2b, 3},  {a, -ab, 3},    {ab, a2b, 3}};
    }
  }
  return {};
}

namespace {

using Key = std::pair<Root, Root>;

class Completer {
 public:
  explicit Completer(const RootSystem& rs) : rs_(rs) {
    for (const auto& g : rs.roots())
      for (const auto& d : rs.roots())
        if (rs.is_root(g + d)) {
          pairs_.push_back({g, d});
          mag_[{g, d}] = rs.string_down(g, d) + 1;
        }
  }

  const std::vector<Key>& pairs() const { return pairs_; }
  int magnitude(const Key& k) const { return mag_.at(k); }

  // Sets N_{g,d} = v and the three entries it forces; returns an error text on conflict.
  std::string set(StructureTable& t, const Root& g, const Root& d, int v, EntrySource src) const {
    if (!rs_.is_root(g + d)) return "N_{" + root_label(g) + "," + root_label(d) + "} given but the sum is not a root";
    if (std::abs(v) != mag_.at({g, d}))
      return "|N_{" + root_label(g) + "," + root_label(d) + "}| = " + std::to_string(std::abs(v)) +
             " but the root string forces " + std::to_string(mag_.at({g, d}));
    const std::tuple<Root, Root, int, EntrySource> forced[] = {
        {g, d, v, src}, {d, g, -v, EntrySource::Antisymmetry}, {-g, -d, -v, EntrySource::Conjugation},
        {-d, -g, v, EntrySource::Conjugation}};
    for (const auto& [x, y, w, s] : forced) {
      auto it = t.entries.find({x, y});
      if (it != t.entries.end()) {
        if (it->second != w)
          return "conflicting values for N_{" + root_label(x) + "," + root_label(y) + "}: " + std::to_string(it->second) +
                 " vs " + std::to_string(w);
        continue;
      }
      t.entries[{x, y}] = w;
      t.source[{x, y}] = s;
    }
    return {};
  }

  // N_{g,d}/(e,e) = N_{d,e}/(g,g) = N_{e,g}/(d,d) whenever g + d + e = 0.
  std::string propagate(StructureTable& t) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [g, d] : pairs_) {
        auto it = t.entries.find({g, d});
        if (it == t.entries.end()) continue;
        const Root e = -(g + d);
        const Rational v(it->second);
        const Rational ee = rs_.inner(e, e);
        const std::pair<Key, Rational> implied[] = {{{d, e}, v * rs_.inner(g, g) / ee},
                                                    {{e, g}, v * rs_.inner(d, d) / ee}};
        for (const auto& [key, val] : implied) {
          if (!val.is_integer()) return "non-integral value forced for N_{" + root_label(key.first) + "," + root_label(key.second) + "}";
          int w = static_cast<int>(val.num().get_si());
          auto jt = t.entries.find(key);
          if (jt != t.entries.end()) {
            if (jt->second != w)
              return "relation around (" + root_label(g) + ", " + root_label(d) + ", " + root_label(e) +
                     ") contradicts N_{" + root_label(key.first) + "," + root_label(key.second) + "}";
            continue;
          }
          if (auto err = set(t, key.first, key.second, w, EntrySource::Triple); !err.empty()) return err;
          changed = true;
        }
      }
    }
    return {};
  }

 private:
  const RootSystem& rs_;
  std::vector<Key> pairs_;
  std::map<Key, int> mag_;
};

std::vector<std::string> compact_labels(const RootSystem& rs) {
  std::vector<std::string> labels{"iHa", "iHb"};
  for (const auto& g : rs.positive) {
    labels.push_back("F(" + root_label(g) + ")");
    labels.push_back("G(" + root_label(g) + ")");
  }
  return labels;
}

std::string algebra_name(Family f) {
  switch (f) {
    case Family::A2: return "su3";
    case Family::A1xA1: return "so4";
    case Family::C2: return "sp2";
    case Family::G2: return "g2";
  }
  return "?";
}

LieAlgebra split_form(const RootSystem& rs, const StructureTable& table, bool validate) {
  const auto roots = rs.roots();
  const size_t n = 2 + roots.size();
  auto idx = [&](const Root& r) {
    for (size_t i = 0; i < roots.size(); ++i)
      if (roots[i] == r) return 2 + i;
    throw Error("not a root");
  };
  StructureTensor t(n * n);
  auto put = [&](size_t i, size_t j, size_t k, const Rational& c) {
    if (c.is_zero()) return;
    t[i * n + j].push_back({k, Scalar(c)});
  };
  const Root simple[2] = {RootSystem::alpha, RootSystem::beta};
  for (const auto& r : roots) {
    for (size_t k = 0; k < 2; ++k) {
      Rational c = rs.cartan(r, simple[k]);
      put(k, idx(r), idx(r), c);
      put(idx(r), k, idx(r), -c);
    }
    auto [x, y] = rs.coroot(r);
    put(idx(r), idx(-r), 0, x);
    put(idx(r), idx(-r), 1, y);
    for (const auto& s : roots)
      if (rs.is_root(r + s)) put(idx(r), idx(s), idx(r + s), Rational(table.get(r, s)));
  }
  std::vector<std::string> labels{"Ha", "Hb"};
  for (const auto& r : roots) labels.push_back("E(" + root_label(r) + ")");
  return LieAlgebra(algebra_name(rs.family) + "_C", labels, t, std::nullopt, Scalar(1), validate);
}

}  // namespace

LieAlgebra build_split_form(const RootSystem& rs, const StructureTable& table) { return split_form(rs, table, true); }

StructureTable complete_structure_constants(const RootSystem& rs) {
  Completer c(rs);
  StructureTable base;
  for (const auto& [g, d, v] : structure_seeds(rs.family))
    if (auto err = c.set(base, g, d, v, EntrySource::Seed); !err.empty())
      throw ConsistencyError(family_name(rs.family) + " seeds: " + err);
  if (auto err = c.propagate(base); !err.empty()) throw ConsistencyError(family_name(rs.family) + " seeds: " + err);

  std::string last_failure;
  // Residual free signs: smallest-index pair first, + before -, Jacobi decides.
  std::function<std::optional<StructureTable>(const StructureTable&)> search =
      [&](const StructureTable& t) -> std::optional<StructureTable> {
    for (const auto& key : c.pairs()) {
      if (t.entries.count(key)) continue;
      for (int s : {1, -1}) {
        StructureTable next = t;
        if (!c.set(next, key.first, key.second, s * c.magnitude(key), EntrySource::Convention).empty()) continue;
        if (!c.propagate(next).empty()) continue;
        if (auto done = search(next)) return done;
      }
      return std::nullopt;
    }
    LieAlgebra split = split_form(rs, t, false);
    if (auto v = split.jacobi_violation()) {
      last_failure = "Jacobi fails on (" + split.labels()[(*v)[0]] + ", " + split.labels()[(*v)[1]] + ", " +
                     split.labels()[(*v)[2]] + ")";
      return std::nullopt;
    }
    return t;
  };
  auto done = search(base);
  if (!done) throw ConsistencyError(family_name(rs.family) + " structure constants: " + last_failure);
  return *done;
}

LieAlgebra build_compact_form(const RootSystem& rs, const StructureTable& table) {
  const LieAlgebra split = build_split_form(rs, table);
  const auto roots = rs.roots();
  const size_t n = split.dim();
  const size_t npos = rs.positive.size();
  auto eidx = [&](const Root& r) {
    for (size_t i = 0; i < roots.size(); ++i)
      if (roots[i] == r) return 2 + i;
    throw Error("not a root");
  };
  // Compact basis vector k as a complex vector (re, im) in the split basis.
  struct Complex {
    Vec re, im;
  };
  std::vector<Complex> cb;
  for (size_t k = 0; k < 2; ++k) cb.push_back({Vec(n), unit_vec(n, k)});
  for (const auto& g : rs.positive) {
    Complex f{Vec(n), Vec(n)}, gg{Vec(n), Vec(n)};
    f.re[eidx(g)] = 1;
    f.re[eidx(-g)] = -1;
    gg.im[eidx(g)] = 1;
    gg.im[eidx(-g)] = 1;
    cb.push_back(f);
    cb.push_back(gg);
  }
  auto to_compact = [&](const Complex& z, size_t i, size_t j) {
    Vec out(n);
    auto fail = [&] {
      throw ConsistencyError(family_name(rs.family) + ": bracket of compact basis elements " + std::to_string(i) + ", " +
                             std::to_string(j) + " leaves the real form");
    };
    for (size_t k = 0; k < 2; ++k) {
      if (!z.re[k].is_zero()) fail();
      out[k] = z.im[k];
    }
    const Scalar half(Rational(1, 2));
    for (size_t p = 0; p < npos; ++p) {
      const auto& g = rs.positive[p];
      size_t a = eidx(g), b = eidx(-g);
      // z_g E_g + z_{-g} E_{-g} = f F_g + c G_g  with  z_g = f + i c, z_{-g} = -f + i c
      if (!(z.im[a] - z.im[b]).is_zero() || !(z.re[a] + z.re[b]).is_zero()) fail();
      out[2 + 2 * p] = half * (z.re[a] - z.re[b]);
      out[3 + 2 * p] = half * (z.im[a] + z.im[b]);
    }
    return out;
  };
  StructureTensor t(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Complex z{split.bracket(cb[i].re, cb[j].re) - split.bracket(cb[i].im, cb[j].im),
                split.bracket(cb[i].re, cb[j].im) + split.bracket(cb[i].im, cb[j].re)};
      Vec c = to_compact(z, i, j);
      for (size_t k = 0; k < n; ++k)
        if (!c[k].is_zero()) t[i * n + j].push_back({k, c[k]});
    }
  const auto labels = compact_labels(rs);
  LieAlgebra raw(algebra_name(rs.family), labels, t, std::nullopt);
  Mat trace_form = raw.killing_matrix();
  // Fix the scale by q(iH_a, iH_a) = -4/(a,a).
  Scalar kappa = -(trace_form(0, 0) * Scalar(rs.aa)) / Scalar(4);
  if (kappa.sign() <= 0) throw ConsistencyError(family_name(rs.family) + ": trace form is not negative definite");
  Mat q = kappa.inverse() * trace_form;

  // Cross-check against the closed-form values.
  auto fail = [&](const std::string& what) {
    throw ConsistencyError(family_name(rs.family) + ": invariant form disagrees with the root data at " + what);
  };
  const Root simple[2] = {RootSystem::alpha, RootSystem::beta};
  for (size_t x = 0; x < 2; ++x)
    for (size_t y = 0; y < 2; ++y) {
      const Root &g = simple[x], &d = simple[y];
      Rational expect = Rational(-4) * rs.inner(g, d) / (rs.inner(g, g) * rs.inner(d, d));
      if (q(x, y) != Scalar(expect)) fail(labels[x] + "," + labels[y]);
    }
  for (size_t i = 2; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Scalar expect;
      if (i == j) expect = Scalar(Rational(-4) / rs.inner(rs.positive[(i - 2) / 2], rs.positive[(i - 2) / 2]));
      if (q(i, j) != expect) fail(labels[i] + "," + labels[j]);
    }
  return LieAlgebra(algebra_name(rs.family), labels, t, q, kappa);
}

Vec Chevalley::E(const Root& g) const {
  const auto roots = rs.roots();
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == g) return unit_vec(split.dim(), 2 + i);
  throw Error("E: not a root: " + root_label(g));
}

Vec Chevalley::H(const Rational& x, const Rational& y) const {
  Vec v(split.dim());
  v[0] = x;
  v[1] = y;
  return v;
}

Vec Chevalley::Hroot(const Root& g) const {
  auto [x, y] = rs.coroot(g);
  return H(x, y);
}

Vec Chevalley::iH(const Rational& x, const Rational& y) const {
  Vec v(compact.dim());
  v[0] = x;
  v[1] = y;
  return v;
}

Vec Chevalley::iHroot(const Root& g) const {
  auto [x, y] = rs.coroot(g);
  return iH(x, y);
}

Vec Chevalley::F(const Root& g) const {
  if (rs.is_positive(g)) return unit_vec(compact.dim(), 2 + 2 * rs.positive_index(g));
  return Scalar(-1) * unit_vec(compact.dim(), 2 + 2 * rs.positive_index(-g));
}

Vec Chevalley::G(const Root& g) const {
  Root p = rs.is_positive(g) ? g : -g;
  return unit_vec(compact.dim(), 3 + 2 * rs.positive_index(p));
}

std::vector<Vec> Chevalley::m(const Root& g) const { return {F(g), G(g)}; }

namespace {

Chevalley make_chevalley(Family f) {
  RootSystem rs = build_root_system(f);
  StructureTable t = complete_structure_constants(rs);
  LieAlgebra split = build_split_form(rs, t);
  LieAlgebra compact = build_compact_form(rs, t);
  return Chevalley{rs, t, split, compact};
}

}  // namespace

const Chevalley& chevalley(Family f) {
  switch (f) {
    case Family::A2: {
      static const Chevalley c = make_chevalley(Family::A2);
      return c;
    }
    case Family::A1xA1: {
      static const Chevalley c = make_chevalley(Family::A1xA1);
      return c;
    }
    case Family::C2: {
      static const Chevalley c = make_chevalley(Family::C2);
      return c;
    }
    case Family::G2: {
      static const Chevalley c = make_chevalley(Family::G2);
      return c;
    }
  }
  throw Error("unknown family");
}

nlohmann::json structure_table_json(const RootSystem& rs, const StructureTable& table) {
  nlohmann::json j;
  j["family"] = family_name(rs.family);
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [key, v] : table.entries) {
    const std::string k = root_label(key.first) + "," + root_label(key.second);
    entries[k] = {{"N", v}, {"source", source_name(table.source.at(key))}};
  }
  j["entries"] = entries;
  return j;
}

}  // namespace goorbit
