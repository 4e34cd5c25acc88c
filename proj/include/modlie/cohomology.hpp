#pragma once

#include <optional>
#include <string>

#include "modlie/algebra.hpp"

namespace modlie::cohomology {

enum class Flavor { alternating, symmetric };

Flavor flavor_from_string(const std::string& s);
const char* flavor_name(Flavor f);

// A finite-dimensional module over a Lie algebra, given by the action
// matrices of the basis elements.
struct CoefficientModule {
  std::size_t dim;
  std::vector<Matrix> action;  // one dim x dim matrix per basis element of L

  static CoefficientModule trivial(const StructureAlgebra& l);
  static CoefficientModule adjoint(const StructureAlgebra& l);
  // Validates rho([x,y]) = rho(x)rho(y) - rho(y)rho(x) on all basis pairs.
  static CoefficientModule from_action(const StructureAlgebra& l,
                                       std::vector<Matrix> action);
};

// The degree-n cochain space of a flavor. Coordinates are flattened as
// (tuple index) * coeff_dim + (module coordinate); tuples are listed in
// lexicographic order, strictly increasing for alternating cochains and
// non-decreasing for symmetric ones.
struct CochainSpace {
  Flavor flavor;
  std::size_t degree;
  std::size_t algebra_dim;
  std::size_t coeff_dim;
  std::vector<std::vector<std::size_t>> tuples;

  std::size_t dim() const { return tuples.size() * coeff_dim; }
  // Index of a canonical (sorted) tuple.
  std::size_t tuple_index(const std::vector<std::size_t>& t) const;
};

CochainSpace cochain_space(const StructureAlgebra& l, const CoefficientModule& m,
                           std::size_t degree, Flavor flavor);

// The coboundary map C^n -> C^{n+1}. Symmetric flavor requires
// characteristic 2; signs appear only in characteristic != 2.
Matrix differential(const StructureAlgebra& l, const CoefficientModule& m,
                    std::size_t n, Flavor flavor);

struct CohomologyReport {
  std::size_t degree;
  Flavor flavor;
  std::size_t dim_cocycles;
  std::size_t dim_coboundaries;
  std::size_t dim_h;
  std::vector<Vec> cocycle_basis;
};

// Verifies d o d = 0 at the requested degree before reporting. Degrees above
// `max_degree` are refused (the symmetric complex never terminates).
CohomologyReport cohomology(const StructureAlgebra& l, const CoefficientModule& m,
                            std::size_t n, Flavor flavor,
                            std::size_t max_degree = 6);

// n symmetric 2-cocycles on zassenhaus(n) with trivial coefficients whose
// classes form a basis of the commutative H^2. The representatives are
// weight-homogeneous: the first is the dual of e_-1 v e_-1 (weight -2), and
// for k = 1..n-1 the k-th is the sum of all pair duals e_i v e_j with
// i + j = 2^n - 4 + 2^k.
std::vector<Vec> zassenhaus_commutative_cocycles(std::size_t n);

bool is_cocycle(const StructureAlgebra& l, const CoefficientModule& m,
                std::size_t n, Flavor flavor, const Vec& cochain);
// When the cochain is a coboundary and `preimage` is non-null, a degree-(n-1)
// preimage is stored there.
bool is_coboundary(const StructureAlgebra& l, const CoefficientModule& m,
                   std::size_t n, Flavor flavor, const Vec& cochain,
                   Vec* preimage = nullptr);

}  // namespace modlie::cohomology
