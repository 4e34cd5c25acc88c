#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modlie/algebra.hpp"

namespace modlie::liecore {

enum class Identity { lie, associative, commutative, left_novikov, right_novikov };

Identity identity_from_string(const std::string& s);
std::string identity_name(Identity id);

struct ValidationReport {
  bool pass = true;
  // First violating basis triple (or pair/single, unused slots = 0) and a
  // human-readable description of the failed law.
  std::size_t witness[3] = {0, 0, 0};
  std::string law;

  std::string describe(const StructureAlgebra& a) const;
};

ValidationReport validate(const StructureAlgebra& a, Identity id);
bool is_lie(const StructureAlgebra& a);

// [x, y] through the structure constants (alias of product, plus a coordinate
// length check).
Vec bracket(const StructureAlgebra& a, const Vec& x, const Vec& y);

// Smallest product-closed subspace containing the generators.
Subspace subalgebra_closure(const StructureAlgebra& a, const std::vector<Vec>& generators);

enum class SeriesKind { derived, lower_central };

struct SeriesReport {
  SeriesKind kind = SeriesKind::derived;
  std::vector<Subspace> terms;  // terms[0] = the subalgebra itself
  bool stabilized = false;
  // Present iff the series reaches zero: the number of nonzero terms, i.e.
  // the smallest n with term_{n} = 0 counting term_0 as the first step.
  std::optional<std::size_t> index;
};

// `on` must be closed under the product (NotASubalgebra otherwise).
SeriesReport series(const StructureAlgebra& a, const Subspace& on, SeriesKind kind);

bool is_nilpotent(const StructureAlgebra& a, const Subspace& on,
                  std::optional<std::size_t>* index_out = nullptr);
bool is_solvable(const StructureAlgebra& a);

struct DerivationAlgebra {
  StructureAlgebra algebra;      // the derivation Lie algebra under commutator
  std::vector<Matrix> matrices;  // basis derivations as dim x dim matrices
};

// All D with D(x*y) = D(x)*y + x*D(y).
DerivationAlgebra derivations(const StructureAlgebra& a);

struct TwoEnvelope {
  StructureAlgebra envelope;       // closure of ad(L) under matrix squaring
  Matrix embedding;                // dim(L) x dim(env): row i = coords of ad(e_i)
  std::vector<Vec> square_map;     // square of each envelope basis element
  std::vector<Matrix> basis_matrices;
};

// Restricted closure of ad(L) inside gl(L), for centerless L over GF(2).
TwoEnvelope two_envelope(const StructureAlgebra& a);

}  // namespace modlie::liecore
