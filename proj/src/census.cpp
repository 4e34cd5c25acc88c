#include "modlie/census.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <thread>
#include <unordered_set>

namespace modlie::census {

namespace {

constexpr std::size_t kShards = 64;
constexpr char kMagic[8] = {'M', 'L', 'C', 'E', 'N', 'S', 'U', 'S'};
constexpr std::uint32_t kVersion = 1;

unsigned bits_per_entry(unsigned n) {
  unsigned b = 0;
  while ((1u << b) < n) ++b;
  return b;
}

unsigned long long ipow(unsigned long long b, unsigned e) {
  unsigned long long r = 1;
  while (e--) r *= b;
  return r;
}

void check_n(unsigned n) {
  if (n == 0) throw InvalidParameter("census: n must be positive");
  if (n > 4)
    throw ResourceBudget(
        "census: n > 4 is out of the supported range (op space n^(n^2) and "
        "192-bit keys cover n <= 4)");
}

std::size_t shard_of(const TernaryMapKey& k) {
  return static_cast<std::size_t>(k.packed[0] % kShards);
}

using KeySet = std::unordered_set<TernaryMapKey, KeyHash>;

struct ShardedSet {
  bool enabled = false;
  std::array<KeySet, kShards> shards;

  void insert(const TernaryMapKey& k) { shards[shard_of(k)].insert(k); }
  unsigned long long size() const {
    unsigned long long s = 0;
    for (const auto& sh : shards) s += sh.size();
    return s;
  }
  void merge_from(ShardedSet& other) {
    for (std::size_t s = 0; s < kShards; ++s)
      shards[s].merge(other.shards[s]);
  }
  std::vector<TernaryMapKey> sorted() const {
    std::vector<TernaryMapKey> out;
    for (const auto& sh : shards) out.insert(out.end(), sh.begin(), sh.end());
    std::sort(out.begin(), out.end());
    return out;
  }
  void preload(const std::vector<TernaryMapKey>& keys) {
    for (const auto& k : keys) insert(k);
  }
};

struct ScanSets {
  ShardedSet left, right, sym, sym_comm;
};

// Evaluates both superpositions of one op and routes the keys.
void scan_one(unsigned n, const WhichFlags& which, const BinaryOpTable& op,
              std::vector<std::uint8_t>& tl, std::vector<std::uint8_t>& tr,
              ScanSets& out) {
  bool need_left_table = which.left || which.lr || which.sym || which.sym_comm;
  bool comm = (which.sym_comm) ? is_commutative(op) : false;
  if (!need_left_table) return;
  std::size_t idx = 0;
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y) {
      std::uint8_t xy = op.value(x, y);
      for (unsigned z = 0; z < n; ++z, ++idx) {
        tl[idx] = op.value(xy, z);
        if (which.lr) tr[idx] = op.value(x, op.value(y, z));
      }
    }
  if (which.left || which.lr) out.left.insert(TernaryMapKey::encode(n, tl));
  if (which.lr) out.right.insert(TernaryMapKey::encode(n, tr));
  if ((which.sym || which.sym_comm) && is_symmetric_table(n, tl)) {
    auto key = TernaryMapKey::encode(n, tl);
    if (which.sym) out.sym.insert(key);
    if (which.sym_comm && comm) out.sym_comm.insert(key);
  }
}

void scan_range(unsigned n, const WhichFlags& which, unsigned long long lo,
                unsigned long long hi, ScanSets& out) {
  BinaryOpTable op = BinaryOpTable::from_counter(n, lo);
  std::vector<std::uint8_t> tl(ipow(n, 3)), tr(ipow(n, 3));
  for (unsigned long long c = lo; c < hi; ++c) {
    scan_one(n, which, op, tl, tr, out);
    // base-n increment, least significant digit first
    for (std::size_t d = 0; d < op.table.size(); ++d) {
      if (++op.table[d] < n) break;
      op.table[d] = 0;
    }
  }
}

std::uint8_t flags_byte(const WhichFlags& w) {
  return static_cast<std::uint8_t>((w.left ? 1 : 0) | (w.lr ? 2 : 0) |
                                   (w.sym ? 4 : 0) | (w.sym_comm ? 8 : 0));
}

void write_keys(std::FILE* f, const std::vector<TernaryMapKey>& keys) {
  std::uint64_t cnt = keys.size();
  std::fwrite(&cnt, sizeof cnt, 1, f);
  for (const auto& k : keys) std::fwrite(k.packed.data(), sizeof(std::uint64_t), 3, f);
}

std::vector<TernaryMapKey> read_keys(std::FILE* f, unsigned n) {
  std::uint64_t cnt = 0;
  if (std::fread(&cnt, sizeof cnt, 1, f) != 1)
    throw ParseError("checkpoint: truncated key count");
  std::vector<TernaryMapKey> keys(cnt);
  for (auto& k : keys) {
    k.n = n;
    if (std::fread(k.packed.data(), sizeof(std::uint64_t), 3, f) != 3)
      throw ParseError("checkpoint: truncated key data");
  }
  return keys;
}

void save_scan_checkpoint(const std::string& path, unsigned n,
                          const WhichFlags& which, unsigned long long next_op,
                          const ScanSets& sets) {
  Checkpoint c;
  c.n = n;
  c.which = which;
  c.next_op = next_op;
  c.left = sets.left.sorted();
  c.right = sets.right.sorted();
  c.sym = sets.sym.sorted();
  c.sym_comm = sets.sym_comm.sorted();
  save_checkpoint(path, c);
}

}  // namespace

BinaryOpTable BinaryOpTable::from_counter(unsigned n, unsigned long long counter) {
  BinaryOpTable op{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n)};
  for (auto& e : op.table) {
    e = static_cast<std::uint8_t>(counter % n);
    counter /= n;
  }
  return op;
}

TernaryMapKey TernaryMapKey::encode(unsigned n, const std::vector<std::uint8_t>& table) {
  unsigned b = bits_per_entry(n);
  TernaryMapKey k;
  k.n = n;
  if (table.size() != ipow(n, 3))
    throw InvalidParameter("TernaryMapKey: table must have n^3 entries");
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) throw InvalidParameter("TernaryMapKey: entry out of range");
    std::size_t bit = i * b;
    k.packed[bit / 64] |= static_cast<std::uint64_t>(table[i]) << (bit % 64);
    // entries never straddle words: b divides 64 for b in {0,1,2}
  }
  return k;
}

std::vector<std::uint8_t> TernaryMapKey::decode() const {
  unsigned b = bits_per_entry(n);
  std::vector<std::uint8_t> table(ipow(n, 3));
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::size_t bit = i * b;
    table[i] = static_cast<std::uint8_t>((packed[bit / 64] >> (bit % 64)) &
                                         ((1ull << b) - 1));
  }
  return table;
}

std::size_t KeyHash::operator()(const TernaryMapKey& k) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ k.n;
  for (std::uint64_t w : k.packed) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return static_cast<std::size_t>(h);
}

TernaryMapKey left_table(const BinaryOpTable& op) {
  unsigned n = op.n;
  std::vector<std::uint8_t> t(ipow(n, 3));
  std::size_t idx = 0;
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y) {
      std::uint8_t xy = op.value(x, y);
      for (unsigned z = 0; z < n; ++z, ++idx) t[idx] = op.value(xy, z);
    }
  return TernaryMapKey::encode(n, t);
}

TernaryMapKey right_table(const BinaryOpTable& op) {
  unsigned n = op.n;
  std::vector<std::uint8_t> t(ipow(n, 3));
  std::size_t idx = 0;
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y)
      for (unsigned z = 0; z < n; ++z, ++idx)
        t[idx] = op.value(x, op.value(y, z));
  return TernaryMapKey::encode(n, t);
}

bool is_symmetric_table(unsigned n, const std::vector<std::uint8_t>& t) {
  auto at = [&](unsigned x, unsigned y, unsigned z) {
    return t[(static_cast<std::size_t>(x) * n + y) * n + z];
  };
  // invariance under the two generating transpositions
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y)
      for (unsigned z = 0; z < n; ++z) {
        if (at(x, y, z) != at(y, x, z)) return false;
        if (at(x, y, z) != at(x, z, y)) return false;
      }
  return true;
}

bool is_commutative(const BinaryOpTable& op) {
  for (unsigned x = 0; x < op.n; ++x)
    for (unsigned y = x + 1; y < op.n; ++y)
      if (op.value(x, y) != op.value(y, x)) return false;
  return true;
}

CensusResult census(unsigned n, WhichFlags which, const CensusOptions& opts) {
  check_n(n);
  if (opts.threads == 0) throw InvalidParameter("census: threads must be positive");
  if (!opts.checkpoint_path.empty() && opts.threads > 1)
    throw InvalidParameter("census: checkpointing requires a single thread");
  if (n == 4 && (which.left || which.lr) && !opts.stretch)
    throw ResourceBudget(
        "census: the full n=4 scan (4^16 ops) needs the stretch option; the "
        "symmetric-filtered flags are the recommended n=4 mode");

  auto t0 = std::chrono::steady_clock::now();
  unsigned long long total = ipow(n, n * n);
  unsigned long long start = 0;
  ScanSets sets;

  if (!opts.checkpoint_path.empty() &&
      std::filesystem::exists(opts.checkpoint_path)) {
    Checkpoint c = load_checkpoint(opts.checkpoint_path);
    if (c.n != n || flags_byte(c.which) != flags_byte(which))
      throw ParseError("census: checkpoint parameters do not match this run");
    if (c.next_op > total) throw ParseError("census: checkpoint counter out of range");
    start = c.next_op;
    sets.left.preload(c.left);
    sets.right.preload(c.right);
    sets.sym.preload(c.sym);
    sets.sym_comm.preload(c.sym_comm);
  }

  if (opts.threads == 1 || total - start < 2 * opts.threads) {
    if (opts.checkpoint_path.empty()) {
      scan_range(n, which, start, total, sets);
    } else {
      unsigned long long c = start;
      while (c < total) {
        unsigned long long next = std::min(total, c + opts.checkpoint_interval);
        scan_range(n, which, c, next, sets);
        c = next;
        save_scan_checkpoint(opts.checkpoint_path, n, which, c, sets);
      }
    }
  } else {
    std::vector<ScanSets> partial(opts.threads);
    std::vector<std::thread> workers;
    unsigned long long span = total - start;
    for (unsigned t = 0; t < opts.threads; ++t) {
      unsigned long long lo = start + span * t / opts.threads;
      unsigned long long hi = start + span * (t + 1) / opts.threads;
      workers.emplace_back(
          [&, lo, hi, t] { scan_range(n, which, lo, hi, partial[t]); });
    }
    for (auto& w : workers) w.join();
    for (auto& p : partial) {
      sets.left.merge_from(p.left);
      sets.right.merge_from(p.right);
      sets.sym.merge_from(p.sym);
      sets.sym_comm.merge_from(p.sym_comm);
    }
  }

  CensusResult res;
  res.n = n;
  res.ops_enumerated = total;
  if (which.left || which.lr) res.t_left = sets.left.size();
  if (which.lr) {
    ShardedSet both;
    both.preload(sets.left.sorted());
    both.preload(sets.right.sorted());
    res.t_lr = both.size();
  }
  if (which.sym) res.t_sym = sets.sym.size();
  if (which.sym_comm) res.t_sym_comm = sets.sym_comm.size();
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

unsigned long long lr_overlap(unsigned n) {
  check_n(n);
  if (n == 4)
    throw ResourceBudget("lr_overlap: n = 4 needs the stretch census path");
  WhichFlags which;
  which.left = true;
  which.lr = true;
  ScanSets sets;
  scan_range(n, which, 0, ipow(n, n * n), sets);
  unsigned long long overlap = 0;
  for (std::size_t s = 0; s < kShards; ++s)
    for (const auto& k : sets.left.shards[s])
      if (sets.right.shards[s].count(k)) ++overlap;
  return overlap;
}

std::vector<TernaryMapKey> symmetric_left_set(unsigned n, bool commutative_only) {
  check_n(n);
  WhichFlags which;
  which.left = false;
  which.sym = !commutative_only;
  which.sym_comm = commutative_only;
  ScanSets sets;
  scan_range(n, which, 0, ipow(n, n * n), sets);
  return commutative_only ? sets.sym_comm.sorted() : sets.sym.sorted();
}

ConjectureReport conjecture_check(unsigned n) {
  auto all = symmetric_left_set(n, false);
  auto comm = symmetric_left_set(n, true);
  ConjectureReport rep;
  rep.sym_count = all.size();
  rep.sym_comm_count = comm.size();
  // comm is a subset of all by construction, so set equality is size equality
  std::vector<TernaryMapKey> diff;
  std::set_difference(all.begin(), all.end(), comm.begin(), comm.end(),
                      std::back_inserter(diff));
  rep.equal_sets = diff.empty();
  if (!diff.empty()) rep.witness = diff.front();
  return rep;
}

void save_checkpoint(const std::string& path, const Checkpoint& c) {
  std::string tmp = path + ".tmp";
  std::FILE* f = std::fopen(tmp.c_str(), "wb");
  if (!f) throw InvalidParameter("checkpoint: cannot open " + tmp);
  std::fwrite(kMagic, 1, 8, f);
  std::fwrite(&kVersion, sizeof kVersion, 1, f);
  std::uint32_t n32 = c.n;
  std::fwrite(&n32, sizeof n32, 1, f);
  std::uint8_t fb = flags_byte(c.which);
  std::fwrite(&fb, 1, 1, f);
  std::fwrite(&c.next_op, sizeof c.next_op, 1, f);
  write_keys(f, c.left);
  write_keys(f, c.right);
  write_keys(f, c.sym);
  write_keys(f, c.sym_comm);
  std::fclose(f);
  std::filesystem::rename(tmp, path);
}

Checkpoint load_checkpoint(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw ParseError("checkpoint: cannot open " + path);
  struct Closer {
    std::FILE* f;
    ~Closer() { std::fclose(f); }
  } closer{f};
  char magic[8];
  std::uint32_t version = 0, n32 = 0;
  std::uint8_t fb = 0;
  Checkpoint c;
  if (std::fread(magic, 1, 8, f) != 8 || std::memcmp(magic, kMagic, 8) != 0)
    throw ParseError("checkpoint: bad magic header");
  if (std::fread(&version, sizeof version, 1, f) != 1 || version != kVersion)
    throw ParseError("checkpoint: unsupported version");
  if (std::fread(&n32, sizeof n32, 1, f) != 1 || n32 == 0 || n32 > 4)
    throw ParseError("checkpoint: bad set size");
  if (std::fread(&fb, 1, 1, f) != 1)
    throw ParseError("checkpoint: truncated flags");
  if (std::fread(&c.next_op, sizeof c.next_op, 1, f) != 1)
    throw ParseError("checkpoint: truncated counter");
  c.n = n32;
  c.which.left = fb & 1;
  c.which.lr = fb & 2;
  c.which.sym = fb & 4;
  c.which.sym_comm = fb & 8;
  c.left = read_keys(f, c.n);
  c.right = read_keys(f, c.n);
  c.sym = read_keys(f, c.n);
  c.sym_comm = read_keys(f, c.n);
  return c;
}

}  // namespace modlie::census
