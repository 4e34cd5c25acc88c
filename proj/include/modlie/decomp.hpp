#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "modlie/algebra.hpp"
#include "modlie/subspace.hpp"

#include <json.hpp>

namespace modlie::decomp {

// A verified presentation L = N + M with both parts nilpotent subalgebras.
struct DecompositionCertificate {
  StructureAlgebra algebra;
  Subspace n_part;
  Subspace m_part;
  std::size_t n_nilpotency_index;
  std::size_t m_nilpotency_index;
  bool is_direct;           // n_part ∩ m_part = 0
  bool ambient_solvable;
};

// Checks closure, nilpotency, and the spanning condition; throws with a
// witness when a part is not a subalgebra, and InvalidParameter when a part
// is not nilpotent or the parts do not span.
DecompositionCertificate verify(const StructureAlgebra& l, const Subspace& n,
                                const Subspace& m);

struct PetravchukFixture {
  StructureAlgebra l;  // the 5-dimensional 2-envelope of the simple algebra
  Subspace n;          // abelian, spanned by e_0+e_-1+e_-1^[2], e_0+e_1+e_1^[2]
  Subspace m;          // nilpotent, spanned by e_-1^[2], e_0, e_1^[2]
};
PetravchukFixture petravchuk_fixture();

// The direct-sum decomposition of the extended current algebra
// (envelope ⊗ A) + D into (N ⊗ A + D) ⊕ (M ⊗ A), with N, M the fixture parts.
struct Eq3Instance {
  StructureAlgebra l;
  Subspace n_part;
  Subspace m_part;
};
Eq3Instance eq3_instance(const StructureAlgebra& a, const std::vector<Matrix>& dlist);

// Predicted span of the n-th lower central power of L = S ⊗ A + D:
//   S^n ⊗ A  +  Σ_{i+j=n, i>1, j>=1} S^i ⊗ A·D^j(A)  +  S ⊗ D^{n-1}(A)  +  D^n,
// expressed in the coordinates of semidirect_current(s, a, dlist).
Subspace lower_central_formula_span(const StructureAlgebra& s,
                                    const StructureAlgebra& a,
                                    const std::vector<Matrix>& dlist,
                                    std::size_t n);

struct SearchResult {
  std::optional<DecompositionCertificate> certificate;
  std::vector<std::string> log;
  std::size_t operations_used;
};

// Deterministic seeded heuristic: nilpotent seed subalgebras (ad-nilpotent
// basis vectors, graded components) grown by closure, then paired by
// hill-climbing on dim(N + M) with random restarts. Absence of a certificate
// within budget is a value, not an error.
SearchResult search(const StructureAlgebra& l, std::size_t budget = 100000,
                    std::uint64_t seed = 0);

nlohmann::json certificate_to_json(const DecompositionCertificate& c);
DecompositionCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace modlie::decomp
