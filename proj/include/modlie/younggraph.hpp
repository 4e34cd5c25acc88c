#pragma once

#include <string>

#include "modlie/algebra.hpp"
#include "modlie/subspace.hpp"

namespace modlie::younggraph {

struct Partition {
  std::vector<unsigned> parts;  // weakly decreasing, positive

  unsigned size() const;
  Partition transpose() const;
  std::string str() const;  // "(2,1)"

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
};

// All partitions of n in the graph order: ascending by cumulative-sum
// sequences (a total refinement of dominance), so (1^n) comes first and (n)
// last.
std::vector<Partition> partitions_of(unsigned n);

// Murnaghan-Nakayama evaluation of the irreducible character chi_lambda on
// the conjugacy class of cycle type mu.
long long character(const Partition& lambda, const Partition& mu);

struct CharacterTable {
  unsigned n;
  std::vector<Partition> rows;  // irreducibles
  std::vector<Partition> cols;  // conjugacy classes (cycle types)
  std::vector<std::vector<long long>> values;
  std::vector<unsigned long long> class_sizes;
};
CharacterTable character_table(unsigned n);

struct CauchyComponent {
  Partition lambda;
  // Basis of the lambda-isotypic image inside the n-th alternating power of
  // K^a (x) K^b, in wedge coordinates over Q.
  Subspace basis;
};
// Decomposes the n-th alternating power of the tensor product by the central
// idempotents acting on the A-slots; components with more rows than a_dim
// (equivalently more columns than b_dim) come out zero and are kept with
// empty bases.
std::vector<CauchyComponent> cauchy_decompose(std::size_t a_dim, std::size_t b_dim,
                                              std::size_t n);

// The matrix of the central idempotent e_lambda restricted to the alternating
// power, in wedge coordinates.
Matrix cauchy_projector(const Partition& lambda, std::size_t a_dim,
                        std::size_t b_dim, std::size_t n);

struct Block {
  std::size_t from;  // index into source_labels
  std::size_t to;    // index into target_labels
  Matrix matrix;
  bool is_zero;
};

struct BlockReport {
  std::size_t level;  // blocks map degree `level` to `level + 1`
  std::vector<std::string> source_labels;
  std::vector<std::string> target_labels;
  // Invertible row-bases of the two cochain spaces; the blocks assemble into
  // target_basis * d * source_basis^{-1}.
  Matrix source_basis;
  Matrix target_basis;
  std::vector<Block> blocks;
};

// Blocks of the trivial-coefficient Chevalley-Eilenberg differential of
// koszul_bracket(a, b) against the Cauchy components, for levels
// 1 .. n_max-1. Requires rational scalars and n_max <= 5.
std::vector<BlockReport> young_graph_report(const StructureAlgebra& a,
                                            const StructureAlgebra& b,
                                            std::size_t n_max);

// Bidegree blocks for l = n (+) m: level-k cochains split by (i, j) with
// i + j = k counting n- and m-factors; labels are "(i,j)" with j ascending.
std::vector<BlockReport> triangle_report(const StructureAlgebra& l, const Subspace& n,
                                         const Subspace& m, std::size_t n_max);

}  // namespace modlie::younggraph
