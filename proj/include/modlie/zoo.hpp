#pragma once

#include "modlie/algebra.hpp"

namespace modlie::zoo {

// binom(n, k) mod 2 via Lucas: odd iff k is a bit-submask of n.
bool binom_is_odd(unsigned long long n, unsigned long long k);

// The 3-dimensional simple Lie algebra over GF(2) with basis e_-1, e_0, e_1
// and [e_-1,e_0] = e_-1, [e_-1,e_1] = e_0, [e_0,e_1] = e_1.
StructureAlgebra ess();

// Characteristic-2 Zassenhaus algebra of dimension 2^n - 1: basis e_i for
// -1 <= i <= 2^n - 3, [e_i,e_j] = (binom(i+j+2, i+1) mod 2) e_{i+j}, zero
// when e_{i+j} falls outside the basis.
StructureAlgebra zassenhaus(std::size_t n);

struct DividedPowers {
  StructureAlgebra algebra;  // commutative associative, dim 2^n
  Matrix derivation;         // x^(i) -> x^(i-1), x^(0) -> 0
};
DividedPowers divided_powers(std::size_t n);

// K[t]/(t^m) over the given field.
StructureAlgebra truncated_poly(std::size_t m, const FieldSpec& f);
StructureAlgebra truncated_poly(std::size_t m, unsigned p);

// Tensor bracket [a (x) b, a' (x) b'] = aa' (x) bb' - a'a (x) b'b on the
// tensor basis; no identity is assumed, the caller validates.
StructureAlgebra koszul_bracket(const StructureAlgebra& a, const StructureAlgebra& b);

struct NovikovPair {
  StructureAlgebra left;   // a o b = a * d(b)
  StructureAlgebra right;  // the opposite product
};
// `c` must be commutative associative and `d` one of its derivations.
NovikovPair novikov_from_comm_der(const StructureAlgebra& c, const Matrix& d);

// Current Lie algebra: [x (x) f, y (x) g] = [x,y] (x) fg.
StructureAlgebra current(const StructureAlgebra& l, const StructureAlgebra& a);

// (s (x) a) + D with D acting on `a` by the given derivation matrices;
// [delta, x (x) f] = x (x) delta(f), [delta, delta'] = matrix commutator.
StructureAlgebra semidirect_current(const StructureAlgebra& s, const StructureAlgebra& a,
                                    const std::vector<Matrix>& dlist);

}  // namespace modlie::zoo
