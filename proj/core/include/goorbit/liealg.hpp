#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goorbit/linalg.hpp"

namespace goorbit {

struct BracketTerm {
  size_t k;
  Scalar c;
};

// Sparse structure constants: [e_i, e_j] = sum c e_k over table[i * dim + j].
using StructureTensor = std::vector<std::vector<BracketTerm>>;

class LieAlgebra {
 public:
  LieAlgebra() = default;
  // Validates antisymmetry, Jacobi and, when given, that q_form is symmetric,
  // ad-invariant and negative definite. trace_scale divides tr(ad x ad y) in
  // killing(); pass 1 for the raw trace form.
  LieAlgebra(std::string name, std::vector<std::string> labels, StructureTensor structure,
             std::optional<Mat> q_form, Scalar trace_scale = Scalar(1), bool validate = true);

  const std::string& name() const { return name_; }
  size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  size_t index_of(const std::string& label) const;
  Vec basis_vector(size_t i) const { return unit_vec(dim(), i); }
  Vec basis_vector(const std::string& label) const { return basis_vector(index_of(label)); }

  const std::vector<BracketTerm>& structure(size_t i, size_t j) const { return structure_[i * dim() + j]; }
  const StructureTensor& structure() const { return structure_; }

  Vec bracket(const Vec& v, const Vec& w) const;
  Mat ad(const Vec& v) const;
  Scalar killing(const Vec& v, const Vec& w) const;
  Mat killing_matrix() const;
  const Scalar& trace_scale() const { return trace_scale_; }

  bool has_form() const { return q_.has_value(); }
  const Mat& q_form() const;
  Scalar q(const Vec& v, const Vec& w) const;

  // First basis triple (i, j, k) where Jacobi fails, if any.
  std::optional<std::array<size_t, 3>> jacobi_violation() const;
  // First triple where q([x,y],z) + q(y,[x,z]) != 0, if any.
  std::optional<std::array<size_t, 3>> invariance_violation() const;

 private:
  void check_shape() const;

  std::string name_;
  std::vector<std::string> labels_;
  StructureTensor structure_;
  std::optional<Mat> q_;
  Scalar trace_scale_{1};
};

// Subspace of K^n held as a reduced row echelon basis, so equality of
// subspaces is equality of bases.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(size_t ambient) : n_(ambient) {}
  static Subspace span(size_t ambient, const std::vector<Vec>& vectors);
  static Subspace whole(size_t ambient);

  size_t ambient_dim() const { return n_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  // Coordinates of v in basis(); nullopt when v is not in the subspace.
  std::optional<Vec> coords(const Vec& v) const;
  Vec from_coords(const Vec& c) const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  size_t n_ = 0;
  std::vector<Vec> basis_;
  std::vector<size_t> pivots_;
};

Subspace orth_complement(const LieAlgebra& L, const Subspace& S);
// {v in W : [s, v] = 0 for all s in S}
Subspace centralizer_in(const LieAlgebra& L, const Subspace& S, const Subspace& W);
Subspace normalizer(const LieAlgebra& L, const Subspace& S);
Subspace subalgebra_closure(const LieAlgebra& L, const Subspace& S);
bool is_subalgebra(const LieAlgebra& L, const Subspace& S);
// span{[a, b] : a in A, b in B}
Subspace bracket_span(const LieAlgebra& L, const Subspace& A, const Subspace& B);

// The subalgebra S as an algebra in its own right, on the basis S.basis().
LieAlgebra restrict_to(const LieAlgebra& L, const Subspace& S, const std::string& name);

struct IdealDecomposition {
  Subspace center;
  std::vector<Subspace> simple_ideals;
};
IdealDecomposition ideal_decomposition(const LieAlgebra& L);

// su(2) on the basis (iH, F, G) with [iH,F] = 2G, [iH,G] = -2F, [F,G] = 2iH,
// normalized so that q(iH, iH) = -4.
LieAlgebra su2();
// Abelian algebra without an invariant form; direct_sum supplies one.
LieAlgebra abelian(size_t n, const std::string& name = "R");
// Block sum. center_form is required when a summand has no invariant form;
// it covers those summands' bases in order.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, const std::optional<Mat>& center_form,
                      const std::string& name = "");

}  // namespace goorbit
