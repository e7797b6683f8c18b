#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "goorbit/chevalley.hpp"
#include "goorbit/liealg.hpp"

namespace goorbit {

// Facts about a space that are known in advance, compared against what the
// library computes.
struct ExpectedFacts {
  std::string manifold;              // e.g. "S^5 = SU(3)/SU(2)"
  size_t dim_h = 0;
  size_t dim_m = 0;
  std::vector<size_t> isotypic_dims;  // component dims, trivial first
  std::vector<std::optional<bool>> irreducible;  // where a listing states it
  // Component spans as displayed, where displayed (same order as isotypic_dims).
  std::vector<std::optional<std::vector<Vec>>> component_spans;
  std::optional<std::vector<Vec>> trivial_span;
  std::string expected_verdict;  // verdict classify is expected to reach
};

class ReductiveSpace {
 public:
  ReductiveSpace(std::string id, std::string label, std::shared_ptr<const LieAlgebra> algebra,
                 const std::vector<Vec>& h_vectors, ExpectedFacts expected);

  const std::string& id() const { return id_; }
  const std::string& label() const { return label_; }
  const LieAlgebra& algebra() const { return *algebra_; }
  std::shared_ptr<const LieAlgebra> algebra_ptr() const { return algebra_; }
  const Subspace& h() const { return h_; }
  const Subspace& m() const { return m_; }
  size_t dim_m() const { return m_.dim(); }
  const ExpectedFacts& expected() const { return expected_; }

  // ad(a)|_m in m-coordinates (coordinates on m().basis()).
  Mat ad_on_m(const Vec& a) const;
  // ad(h_i)|_m for the basis of h.
  const std::vector<Mat>& ad_h_on_m() const { return ad_h_m_; }
  // Gram matrix of -q on the m basis.
  const Mat& m_gram() const { return m_gram_; }
  Vec m_coords(const Vec& v) const;
  Vec from_m_coords(const Vec& c) const { return m_.from_coords(c); }
  // m-coordinates of the q-orthogonal projection of v onto m.
  Vec project_to_m(const Vec& v) const;

  // Subalgebras K with h in K, addressable by name ("normalizer", "g", ...).
  const std::map<std::string, Subspace>& subalgebras() const { return named_; }
  const Subspace& subalgebra(const std::string& name) const;
  void add_subalgebra(const std::string& name, Subspace K);

 private:
  std::string id_, label_;
  std::shared_ptr<const LieAlgebra> algebra_;
  Subspace h_, m_;
  ExpectedFacts expected_;
  std::vector<Mat> ad_h_m_;
  Mat m_gram_, m_gram_inv_;
  std::map<std::string, Subspace> named_;
};

using SpacePtr = std::shared_ptr<const ReductiveSpace>;

// Embedding rows: sl2-spanning vectors (e, f, h) in the split basis of chevalley(f).split.
struct SplitTriple {
  Vec e, f, h;
};
size_t table_rows(Family f);
SplitTriple split_triple(Family f, size_t index);  // 1-based within the family
// The same embeddings as listed spans of h and m in the compact basis.
std::vector<Vec> listed_h(Family f, size_t index);
std::vector<Vec> listed_m(Family f, size_t index);

// Real form of the sl2 spanned by (e, f, h): rescales to a standard triple,
// balances e against f with a torus element, then returns
// span{e - f, i(e + f), i h} in the compact basis.
Subspace compactify_sl2_triple(const Chevalley& c, const Vec& e, const Vec& f, const Vec& h);

SpacePtr embedded_space(Family f, size_t index);
SpacePtr catalog_space(const std::string& name);

// "a2.1", ..., "g2.4", "berger", "cp3".
const std::vector<std::string>& catalogue_ids();
SpacePtr space_by_id(const std::string& id);

struct FibrationSplit {
  Subspace fiber;  // M_F = K cap m
  Subspace base;   // M_B = K^perp cap m
};
FibrationSplit fibration_split(const ReductiveSpace& space, const Subspace& K);

}  // namespace goorbit
