#pragma once

#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <tuple>
#include <vector>

#include "goorbit/liealg.hpp"
#include "goorbit/rootsys.hpp"

namespace goorbit {

enum class EntrySource { Seed, Antisymmetry, Conjugation, Triple, Convention };
std::string source_name(EntrySource s);

struct StructureTable {
  std::map<std::pair<Root, Root>, int> entries;
  std::map<std::pair<Root, Root>, EntrySource> source;

  // N_{g,d}; 0 when g + d is not a root.
  int get(const Root& g, const Root& d) const;
  size_t size() const { return entries.size(); }
};

// The hard-coded N values listed for each family, as (gamma, delta, N).
std::vector<std::tuple<Root, Root, int>> structure_seeds(Family f);

StructureTable complete_structure_constants(const RootSystem& rs);

// Complex Chevalley algebra over Q on the basis (H_a, H_b, E_g for g in rs.roots()).
LieAlgebra build_split_form(const RootSystem& rs, const StructureTable& table);

// Compact real form on (iH_a, iH_b, F_g1, G_g1, ...), positive roots in listing
// order. q_form is the trace form rescaled so that q(iH_a, iH_a) = -4/(a,a).
LieAlgebra build_compact_form(const RootSystem& rs, const StructureTable& table);

// Everything needed to work with one family.
struct Chevalley {
  RootSystem rs;
  StructureTable table;
  LieAlgebra split;
  LieAlgebra compact;

  // Split basis vectors.
  Vec E(const Root& g) const;
  Vec H(const Rational& x, const Rational& y) const;  // x H_a + y H_b
  Vec Hroot(const Root& g) const;                     // coroot H_g

  // Compact basis vectors; g may be negative (F_{-g} = -F_g, G_{-g} = G_g).
  Vec iH(const Rational& x, const Rational& y) const;  // i(x H_a + y H_b)
  Vec iHroot(const Root& g) const;
  Vec F(const Root& g) const;
  Vec G(const Root& g) const;
  // Root plane m_g = span{F_g, G_g}.
  std::vector<Vec> m(const Root& g) const;
};

const Chevalley& chevalley(Family f);

nlohmann::json structure_table_json(const RootSystem& rs, const StructureTable& table);

}  // namespace goorbit
