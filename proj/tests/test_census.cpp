#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unordered_set>

#include "modlie/census.hpp"

using namespace modlie;
using namespace modlie::census;

namespace {

// disambiguate the function from the enclosing namespace name
CensusResult run_census(unsigned n, WhichFlags w, const CensusOptions& o = {}) {
  return modlie::census::census(n, w, o);
}

WhichFlags all_flags() {
  WhichFlags w;
  w.left = w.lr = w.sym = w.sym_comm = true;
  return w;
}

struct TempPath {
  std::string path;
  explicit TempPath(const char* name)
      : path((std::filesystem::temp_directory_path() / name).string()) {
    std::filesystem::remove(path);
  }
  ~TempPath() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("ternary key packing round-trips") {
  for (unsigned n : {1u, 2u, 3u, 4u}) {
    std::size_t entries = static_cast<std::size_t>(n) * n * n;
    std::vector<std::uint8_t> t(entries);
    for (std::size_t i = 0; i < entries; ++i) t[i] = static_cast<std::uint8_t>((i * 7 + 3) % n);
    auto k = TernaryMapKey::encode(n, t);
    CHECK(k.decode() == t);
  }
  SUBCASE("bad tables are rejected") {
    CHECK_THROWS_AS(TernaryMapKey::encode(2, std::vector<std::uint8_t>(7)),
                    InvalidParameter);
    CHECK_THROWS_AS(TernaryMapKey::encode(2, std::vector<std::uint8_t>(8, 2)),
                    InvalidParameter);
  }
}

TEST_CASE("left and right superposition tables") {
  SUBCASE("xor gives ternary xor") {
    BinaryOpTable xr{2, {0, 1, 1, 0}};
    auto t = left_table(xr).decode();
    for (unsigned x = 0; x < 2; ++x)
      for (unsigned y = 0; y < 2; ++y)
        for (unsigned z = 0; z < 2; ++z)
          CHECK(t[(x * 2 + y) * 2 + z] == (x ^ y ^ z));
    CHECK(left_table(xr) == right_table(xr));  // xor is associative
  }
  SUBCASE("constant op gives constant tables") {
    BinaryOpTable c{3, std::vector<std::uint8_t>(9, 2)};
    auto tl = left_table(c).decode();
    auto tr = right_table(c).decode();
    for (std::size_t i = 0; i < 27; ++i) {
      CHECK(tl[i] == 2);
      CHECK(tr[i] == 2);
    }
  }
  SUBCASE("projections") {
    BinaryOpTable lproj{2, {0, 0, 1, 1}};  // x*y = x
    auto tl = left_table(lproj).decode();
    for (unsigned x = 0; x < 2; ++x)
      for (unsigned y = 0; y < 2; ++y)
        for (unsigned z = 0; z < 2; ++z) CHECK(tl[(x * 2 + y) * 2 + z] == x);
    BinaryOpTable rproj{2, {0, 1, 0, 1}};  // x*y = y
    auto tr = right_table(rproj).decode();
    for (std::size_t i = 0; i < 8; ++i) CHECK(tr[i] == i % 2);
  }
}

TEST_CASE("census counts") {
  SUBCASE("n = 1: everything is the one map") {
    auto r = run_census(1, all_flags());
    CHECK(r.t_left == 1);
    CHECK(r.t_lr == 1);
    CHECK(r.t_sym == 1);
    CHECK(r.t_sym_comm == 1);
    CHECK(r.ops_enumerated == 1);
  }
  SUBCASE("n = 2") {
    auto r = run_census(2, all_flags());
    CHECK(r.t_left == 14);
    CHECK(r.t_lr == 21);
    CHECK(r.t_sym == 5);
    CHECK(r.t_sym_comm == 5);
    CHECK(r.ops_enumerated == 16);
  }
  SUBCASE("n = 3") {
    auto r = run_census(3, all_flags());
    CHECK(r.t_left == 19292);
    CHECK(r.t_lr == 38472);
    CHECK(r.t_sym == 48);
    CHECK(r.t_sym_comm == 48);
    CHECK(r.ops_enumerated == 19683);
  }
  SUBCASE("monotone bounds hold on every run") {
    for (unsigned n : {1u, 2u, 3u}) {
      auto r = run_census(n, all_flags());
      CHECK(*r.t_left <= *r.t_lr);
      CHECK(*r.t_lr <= 2 * *r.t_left);
      CHECK(*r.t_sym <= *r.t_left);
      CHECK(*r.t_sym_comm <= *r.t_sym);
    }
  }
  SUBCASE("sharded parallel run matches single-threaded") {
    for (unsigned n : {2u, 3u}) {
      auto r1 = run_census(n, all_flags());
      CensusOptions par;
      par.threads = 4;
      auto r4 = run_census(n, all_flags(), par);
      CHECK(r1.t_left == r4.t_left);
      CHECK(r1.t_lr == r4.t_lr);
      CHECK(r1.t_sym == r4.t_sym);
      CHECK(r1.t_sym_comm == r4.t_sym_comm);
    }
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(run_census(0, all_flags()), InvalidParameter);
    CHECK_THROWS_AS(run_census(5, all_flags()), ResourceBudget);
    CHECK_THROWS_AS(run_census(4, all_flags()), ResourceBudget);  // needs stretch
    CensusOptions bad;
    bad.threads = 0;
    CHECK_THROWS_AS(run_census(2, all_flags(), bad), InvalidParameter);
    CensusOptions ckpt_par;
    ckpt_par.threads = 2;
    ckpt_par.checkpoint_path = "/tmp/never-written";
    CHECK_THROWS_AS(run_census(2, all_flags(), ckpt_par), InvalidParameter);
  }
}

TEST_CASE("left/right overlap and the two-channel identity") {
  CHECK(lr_overlap(1) == 1);
  CHECK(lr_overlap(2) == 7);
  CHECK(lr_overlap(3) == 112);
  for (unsigned n : {1u, 2u, 3u}) {
    auto r = run_census(n, all_flags());
    CHECK(*r.t_lr == 2 * *r.t_left - lr_overlap(n));
  }
}

TEST_CASE("right set has the size of the left set (reversal bijection)") {
  for (unsigned n : {1u, 2u, 3u}) {
    unsigned long long total = 1;
    for (unsigned i = 0; i < n * n; ++i) total *= n;
    std::unordered_set<TernaryMapKey, KeyHash> lefts, rights;
    for (unsigned long long c = 0; c < total; ++c) {
      auto op = BinaryOpTable::from_counter(n, c);
      lefts.insert(left_table(op));
      rights.insert(right_table(op));
    }
    CHECK(lefts.size() == rights.size());
    auto r = run_census(n, WhichFlags{});
    CHECK(*r.t_left == lefts.size());
  }
}

TEST_CASE("symmetric sets and the conjecture tester") {
  SUBCASE("every counted symmetric key decodes to a symmetric table") {
    for (unsigned n : {2u, 3u}) {
      auto keys = symmetric_left_set(n, false);
      for (const auto& k : keys) CHECK(is_symmetric_table(n, k.decode()));
    }
  }
  SUBCASE("conjecture holds in the computed range") {
    for (unsigned n : {1u, 2u, 3u}) {
      auto rep = conjecture_check(n);
      CHECK(rep.equal_sets);
      CHECK_FALSE(rep.witness.has_value());
      CHECK(rep.sym_count == rep.sym_comm_count);
    }
    CHECK(conjecture_check(2).sym_count == 5);
    CHECK(conjecture_check(3).sym_count == 48);
  }
}

TEST_CASE("checkpointing") {
  auto flags = all_flags();
  auto reference = run_census(3, flags);

  SUBCASE("a fresh run with a checkpoint path leaves a complete snapshot") {
    TempPath tmp("modlie-census-ckpt-a.bin");
    CensusOptions opts;
    opts.checkpoint_path = tmp.path;
    opts.checkpoint_interval = 4096;
    auto r = run_census(3, flags, opts);
    CHECK(r.t_left == reference.t_left);
    auto c = load_checkpoint(tmp.path);
    CHECK(c.n == 3);
    CHECK(c.next_op == 19683);
    CHECK(c.left.size() == *reference.t_left);
  }
  SUBCASE("resuming from a mid-scan snapshot reproduces the full counts") {
    TempPath tmp("modlie-census-ckpt-b.bin");
    // build the state of the first 5000 ops by hand
    Checkpoint c;
    c.n = 3;
    c.which = flags;
    c.next_op = 5000;
    std::vector<TernaryMapKey> left, right, sym, symc;
    for (unsigned long long i = 0; i < 5000; ++i) {
      auto op = BinaryOpTable::from_counter(3, i);
      left.push_back(left_table(op));
      right.push_back(right_table(op));
      if (is_symmetric_table(3, left.back().decode())) {
        sym.push_back(left.back());
        if (is_commutative(op)) symc.push_back(left.back());
      }
    }
    c.left = left;
    c.right = right;
    c.sym = sym;
    c.sym_comm = symc;
    save_checkpoint(tmp.path, c);
    CensusOptions opts;
    opts.checkpoint_path = tmp.path;
    auto r = run_census(3, flags, opts);
    CHECK(r.t_left == reference.t_left);
    CHECK(r.t_lr == reference.t_lr);
    CHECK(r.t_sym == reference.t_sym);
    CHECK(r.t_sym_comm == reference.t_sym_comm);
  }
  SUBCASE("mismatched or corrupt checkpoints are rejected") {
    TempPath tmp("modlie-census-ckpt-c.bin");
    Checkpoint c;
    c.n = 2;
    c.which = flags;
    c.next_op = 0;
    save_checkpoint(tmp.path, c);
    CensusOptions opts;
    opts.checkpoint_path = tmp.path;
    CHECK_THROWS_AS(run_census(3, flags, opts), ParseError);  // n mismatch
    {
      std::ofstream f(tmp.path, std::ios::binary | std::ios::trunc);
      f << "not a checkpoint";
    }
    CHECK_THROWS_AS(load_checkpoint(tmp.path), ParseError);
  }
}
