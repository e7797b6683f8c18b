#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "goorbit/embed.hpp"

namespace goorbit {

enum class RepType { Trivial, Real, Complex, Quaternionic, Unknown };
std::string rep_type_name(RepType t);

struct IsotypicComponent {
  Subspace coords;   // inside m-coordinates (ambient dim m)
  Subspace span;     // the same component inside g
  Rational casimir;  // eigenvalue of the Casimir operator
  std::vector<Rational> central;  // eigenvalue of ad(z)^2 for each central basis element z of h
  size_t irreducible_dim = 0;     // 0 when the weight analysis does not apply
  size_t multiplicity = 0;
  RepType type = RepType::Unknown;
  size_t commutant_dim = 0;       // symmetric equivariant maps supported on this component
  bool type_consistent = true;    // commutant_dim agrees with (type, multiplicity)

  size_t dim() const { return coords.dim(); }
  bool irreducible() const { return multiplicity == 1; }
};

struct IsotypicDecomposition {
  std::vector<IsotypicComponent> components;  // trivial first, then by dim, then by eigenvalue
  std::optional<size_t> trivial_index;
  std::vector<size_t> dims() const;
};

// C = sum (G^-1)_ij ad(e_i) ad(e_j) on m-coordinates, G_ij = -q(e_i, e_j).
Mat casimir(const ReductiveSpace& space);

IsotypicDecomposition isotypic_decompose(const ReductiveSpace& space);

// Centralizer of h in m, cross-checked against normalizer(h) cap m.
Subspace trivial_component(const ReductiveSpace& space);

// Basis of the q-symmetric maps on m (m-coordinates) commuting with ad(h).
// Ordered component by component; each component starts with its identity.
struct CommutantBasis {
  std::vector<Mat> basis;
  std::vector<size_t> component_of;  // component index of each basis element
};
CommutantBasis commutant_symmetric_basis(const ReductiveSpace& space, const IsotypicDecomposition& dec);
std::vector<Mat> commutant_symmetric_basis(const ReductiveSpace& space);

// Projection onto component j along the others, m-coordinates.
Mat component_projection(const IsotypicDecomposition& dec, size_t j);

nlohmann::json to_json(const IsotypicDecomposition& dec);

}  // namespace goorbit
