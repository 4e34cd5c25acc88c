#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modlie/error.hpp"

namespace modlie::census {

// A binary operation * on {0..n-1}: table is row-major, value(x, y) = x*y.
struct BinaryOpTable {
  unsigned n;
  std::vector<std::uint8_t> table;  // n^2 entries, all < n

  std::uint8_t value(unsigned x, unsigned y) const { return table[x * n + y]; }
  // The op whose table is the base-n expansion of `counter`, least significant
  // digit first. This is the census enumeration order.
  static BinaryOpTable from_counter(unsigned n, unsigned long long counter);
};

// A ternary map {0..n-1}^3 -> {0..n-1}, packed at ceil(log2 n) bits per entry
// in (x,y,z)-lexicographic order. 192 bits cover n <= 4 (n^3 entries).
struct TernaryMapKey {
  unsigned n = 0;
  std::array<std::uint64_t, 3> packed{0, 0, 0};

  static TernaryMapKey encode(unsigned n, const std::vector<std::uint8_t>& table);
  std::vector<std::uint8_t> decode() const;

  bool operator==(const TernaryMapKey& o) const {
    return n == o.n && packed == o.packed;
  }
  bool operator<(const TernaryMapKey& o) const {
    return packed < o.packed;
  }
};

struct KeyHash {
  std::size_t operator()(const TernaryMapKey& k) const;
};

// f(x,y,z) = (x*y)*z and f(x,y,z) = x*(y*z).
TernaryMapKey left_table(const BinaryOpTable& op);
TernaryMapKey right_table(const BinaryOpTable& op);

bool is_symmetric_table(unsigned n, const std::vector<std::uint8_t>& ternary);
bool is_commutative(const BinaryOpTable& op);

struct WhichFlags {
  bool left = true;
  bool lr = false;
  bool sym = false;
  bool sym_comm = false;
};

struct CensusOptions {
  unsigned threads = 1;
  // n = 4 with the left/lr flags is a multi-hour full scan; it must be
  // requested explicitly.
  bool stretch = false;
  // When non-empty (single-threaded only), scan progress is checkpointed here
  // and resumed from an existing file.
  std::string checkpoint_path;
  unsigned long long checkpoint_interval = 1ull << 24;
};

struct CensusResult {
  unsigned n = 0;
  std::optional<unsigned long long> t_left;      // |{(x*y)*z}|
  std::optional<unsigned long long> t_lr;        // |left set  U  right set|
  std::optional<unsigned long long> t_sym;       // S3-invariant members of the left set
  std::optional<unsigned long long> t_sym_comm;  // same, via commutative * only
  double elapsed_seconds = 0;
  unsigned long long ops_enumerated = 0;
};

// Exact deduplicated counts over all n^(n^2) binary operations.
CensusResult census(unsigned n, WhichFlags which, const CensusOptions& opts = {});

// |left set  intersect  right set|; t_lr = 2*t_left - lr_overlap.
unsigned long long lr_overlap(unsigned n);

// The sorted set of S3-invariant left-representable ternary maps, via all
// operations or via commutative operations only.
std::vector<TernaryMapKey> symmetric_left_set(unsigned n, bool commutative_only);

struct ConjectureReport {
  bool equal_sets;
  std::optional<TernaryMapKey> witness;  // symmetric, left-representable, but
                                         // not via any commutative op
  unsigned long long sym_count;
  unsigned long long sym_comm_count;
};
// Compares the two symmetric sets as sets, not counts.
ConjectureReport conjecture_check(unsigned n);

// Versioned binary scan snapshot: the base-n op counter plus the deduplicated
// key sets accumulated so far.
struct Checkpoint {
  unsigned n = 0;
  WhichFlags which;
  unsigned long long next_op = 0;
  std::vector<TernaryMapKey> left, right, sym, sym_comm;
};
void save_checkpoint(const std::string& path, const Checkpoint& c);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace modlie::census
