// modlie: command-line workbench for modular Lie algebra experiments.
//
// Subcommands: zoo | check | cohomology | envelope | decomp | young | census
// | suite. Global flags: --json (machine output), --seed, --out <file>,
// --manifest <file>. Exit codes: 0 success, 1 domain error or failed check,
// 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "modlie/census.hpp"
#include "modlie/cohomology.hpp"
#include "modlie/decomp.hpp"
#include "modlie/json_io.hpp"
#include "modlie/liecore.hpp"
#include "modlie/suite.hpp"
#include "modlie/younggraph.hpp"
#include "modlie/zoo.hpp"

using nlohmann::json;
using namespace modlie;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Ctx {
  bool json_output = false;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string manifest_path;
  std::string command_line;
  std::map<std::string, std::string> input_digests;
  std::vector<std::string> outputs;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
};

std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string slurp(Ctx& ctx, const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  std::string data = os.str();
  ctx.input_digests[path] = fnv1a64_hex(data);
  return data;
}

json load_json(Ctx& ctx, const std::string& path) {
  try {
    return json::parse(slurp(ctx, path));
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

StructureAlgebra load_algebra(Ctx& ctx, const std::string& path) {
  return algebra_from_json(load_json(ctx, path));
}

Subspace load_subspace(Ctx& ctx, const std::string& path) {
  return subspace_from_json(load_json(ctx, path));
}

Matrix load_matrix(Ctx& ctx, const std::string& path) {
  return matrix_from_json(load_json(ctx, path));
}

void emit(Ctx& ctx, const std::string& text) {
  if (ctx.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(ctx.out_path, std::ios::binary);
    if (!f) throw ParseError("cannot write " + ctx.out_path);
    f << text;
    ctx.outputs.push_back(ctx.out_path);
  }
}

void emit_json(Ctx& ctx, const json& j) { emit(ctx, j.dump(2) + "\n"); }

void write_manifest(Ctx& ctx) {
  if (ctx.manifest_path.empty()) return;
  json m;
  m["command"] = ctx.command_line;
  m["seed"] = ctx.seed;
  m["versions"] = {{"modlie", kVersion}};
  m["inputs"] = json::object();
  for (const auto& [path, digest] : ctx.input_digests)
    m["inputs"][path] = {{"digest_fnv1a64", digest}};
  m["elapsed_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - ctx.t0)
          .count();
  m["outputs"] = ctx.outputs;
  std::ofstream f(ctx.manifest_path, std::ios::binary);
  if (!f) throw ParseError("cannot write " + ctx.manifest_path);
  f << m.dump(2) << "\n";
}

unsigned default_threads() {
  if (const char* env = std::getenv("MODLIE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

json vec_to_json(const FieldSpec& f, const Vec& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(scalar_to_json(f, s));
  return a;
}

// ---------- subcommand handlers ----------

struct ZooArgs {
  std::string name;
  std::size_t n = 2, m = 2;
  std::string field = "gf2";
  std::string a_path, b_path, s_path;
  std::vector<std::string> d_paths;
};

int run_zoo(Ctx& ctx, const ZooArgs& args) {
  StructureAlgebra out;
  if (args.name == "ess") {
    out = zoo::ess();
  } else if (args.name == "zassenhaus") {
    out = zoo::zassenhaus(args.n);
  } else if (args.name == "divided-powers") {
    out = zoo::divided_powers(args.n).algebra;
  } else if (args.name == "truncated-poly") {
    out = zoo::truncated_poly(args.m, FieldSpec::parse(args.field));
  } else if (args.name == "current" || args.name == "koszul") {
    auto a = load_algebra(ctx, args.a_path);
    auto b = load_algebra(ctx, args.b_path);
    out = args.name == "current" ? zoo::current(a, b) : zoo::koszul_bracket(a, b);
  } else if (args.name == "semidirect") {
    auto s = load_algebra(ctx, args.s_path);
    auto a = load_algebra(ctx, args.a_path);
    std::vector<Matrix> dlist;
    for (const auto& p : args.d_paths) dlist.push_back(load_matrix(ctx, p));
    out = zoo::semidirect_current(s, a, dlist);
  } else {
    throw InvalidParameter("unknown zoo algebra: " + args.name);
  }
  emit_json(ctx, algebra_to_json(out));
  return 0;
}

int run_check(Ctx& ctx, const std::string& path, const std::string& identity) {
  auto a = load_algebra(ctx, path);
  auto id = liecore::identity_from_string(identity);
  auto rep = liecore::validate(a, id);
  if (ctx.json_output) {
    json j;
    j["identity"] = identity;
    j["pass"] = rep.pass;
    if (!rep.pass) {
      j["law"] = rep.law;
      j["witness"] = {rep.witness[0], rep.witness[1], rep.witness[2]};
    }
    emit_json(ctx, j);
  } else {
    emit(ctx, rep.describe(a));
  }
  return rep.pass ? 0 : 1;
}

int run_cohomology(Ctx& ctx, const std::string& path, const std::string& flavor,
                   std::size_t degree, const std::string& coeffs,
                   std::size_t max_degree) {
  auto l = load_algebra(ctx, path);
  auto fl = cohomology::flavor_from_string(flavor);
  cohomology::CoefficientModule m =
      coeffs == "trivial"   ? cohomology::CoefficientModule::trivial(l)
      : coeffs == "adjoint" ? cohomology::CoefficientModule::adjoint(l)
                            : [&] {
                                auto j = load_json(ctx, coeffs);
                                std::vector<Matrix> action;
                                for (const auto& mj : j.at("action"))
                                  action.push_back(matrix_from_json(mj));
                                return cohomology::CoefficientModule::from_action(
                                    l, std::move(action));
                              }();
  auto rep = cohomology::cohomology(l, m, degree, fl, max_degree);
  if (ctx.json_output) {
    json j;
    j["degree"] = rep.degree;
    j["flavor"] = cohomology::flavor_name(rep.flavor);
    j["dim_cocycles"] = rep.dim_cocycles;
    j["dim_coboundaries"] = rep.dim_coboundaries;
    j["dim_H"] = rep.dim_h;
    j["cocycle_basis"] = json::array();
    for (const auto& v : rep.cocycle_basis)
      j["cocycle_basis"].push_back(vec_to_json(l.field(), v));
    emit_json(ctx, j);
  } else {
    std::ostringstream os;
    os << flavor << " H^" << degree << ": dim " << rep.dim_h << " (cocycles "
       << rep.dim_cocycles << ", coboundaries " << rep.dim_coboundaries << ")";
    emit(ctx, os.str());
  }
  return 0;
}

int run_envelope(Ctx& ctx, const std::string& path) {
  auto a = load_algebra(ctx, path);
  auto env = liecore::two_envelope(a);
  if (ctx.json_output) {
    json j;
    j["algebra_dim"] = a.dim();
    j["envelope_dim"] = env.envelope.dim();
    j["envelope"] = algebra_to_json(env.envelope);
    j["embedding"] = matrix_to_json(env.embedding);
    j["square_map"] = json::array();
    for (const auto& v : env.square_map)
      j["square_map"].push_back(vec_to_json(a.field(), v));
    emit_json(ctx, j);
  } else {
    std::ostringstream os;
    os << "2-envelope: dim " << env.envelope.dim() << " (algebra dim " << a.dim()
       << ")";
    emit(ctx, os.str());
  }
  return 0;
}

int run_decomp_verify(Ctx& ctx, const std::string& path, const std::string& n_path,
                      const std::string& m_path) {
  auto l = load_algebra(ctx, path);
  auto cert = decomp::verify(l, load_subspace(ctx, n_path), load_subspace(ctx, m_path));
  if (ctx.json_output) {
    emit_json(ctx, decomp::certificate_to_json(cert));
  } else {
    std::ostringstream os;
    os << "verified: N (dim " << cert.n_part.dim() << ", index "
       << cert.n_nilpotency_index << ") + M (dim " << cert.m_part.dim()
       << ", index " << cert.m_nilpotency_index << "), "
       << (cert.is_direct ? "direct" : "non-direct") << ", ambient "
       << (cert.ambient_solvable ? "solvable" : "non-solvable");
    emit(ctx, os.str());
  }
  return 0;
}

int run_decomp_search(Ctx& ctx, const std::string& path, std::size_t budget) {
  auto l = load_algebra(ctx, path);
  auto res = decomp::search(l, budget, ctx.seed);
  if (ctx.json_output) {
    json j;
    j["found"] = res.certificate.has_value();
    if (res.certificate)
      j["certificate"] = decomp::certificate_to_json(*res.certificate);
    j["operations_used"] = res.operations_used;
    j["log"] = res.log;
    emit_json(ctx, j);
  } else {
    std::ostringstream os;
    if (res.certificate)
      os << "found: N dim " << res.certificate->n_part.dim() << ", M dim "
         << res.certificate->m_part.dim() << " (" << res.operations_used
         << " ops)";
    else
      os << "no certificate within budget (" << res.operations_used << " ops)";
    emit(ctx, os.str());
  }
  return 0;
}

json report_to_json(const std::vector<younggraph::BlockReport>& reps) {
  json levels = json::array();
  for (const auto& rep : reps) {
    json arrows = json::array();
    for (const auto& blk : rep.blocks)
      arrows.push_back({{"from", rep.source_labels[blk.from]},
                        {"to", rep.target_labels[blk.to]},
                        {"rows", blk.matrix.rows()},
                        {"cols", blk.matrix.cols()},
                        {"zero", blk.is_zero}});
    levels.push_back({{"level", rep.level},
                      {"source_labels", rep.source_labels},
                      {"target_labels", rep.target_labels},
                      {"arrows", arrows}});
  }
  return {{"levels", levels}};
}

// ASCII grid per level: rows = sources, columns = targets, '*' nonzero arrow.
std::string report_to_text(const std::vector<younggraph::BlockReport>& reps) {
  std::ostringstream os;
  for (const auto& rep : reps) {
    os << "level " << rep.level << " -> " << rep.level + 1 << "\n";
    std::size_t w = 0;
    for (const auto& s : rep.source_labels) w = std::max(w, s.size());
    os << std::string(w, ' ');
    for (const auto& t : rep.target_labels) os << "  " << t;
    os << "\n";
    for (std::size_t s = 0; s < rep.source_labels.size(); ++s) {
      os << rep.source_labels[s]
         << std::string(w - rep.source_labels[s].size(), ' ');
      for (std::size_t t = 0; t < rep.target_labels.size(); ++t) {
        bool zero = true;
        for (const auto& blk : rep.blocks)
          if (blk.from == s && blk.to == t) zero = blk.is_zero;
        os << "  " << std::string(rep.target_labels[t].size() / 2, ' ')
           << (zero ? '.' : '*')
           << std::string(rep.target_labels[t].size() -
                              rep.target_labels[t].size() / 2 - 1,
                          ' ');
      }
      os << "\n";
    }
  }
  return os.str();
}

int run_young_report(Ctx& ctx, const std::string& a_path, const std::string& b_path,
                     std::size_t nmax) {
  auto a = load_algebra(ctx, a_path);
  auto b = load_algebra(ctx, b_path);
  auto reps = younggraph::young_graph_report(a, b, nmax);
  if (ctx.json_output)
    emit_json(ctx, report_to_json(reps));
  else
    emit(ctx, report_to_text(reps));
  return 0;
}

int run_young_triangle(Ctx& ctx, const std::string& l_path, const std::string& n_path,
                       const std::string& m_path, std::size_t nmax) {
  auto l = load_algebra(ctx, l_path);
  auto reps = younggraph::triangle_report(l, load_subspace(ctx, n_path),
                                          load_subspace(ctx, m_path), nmax);
  if (ctx.json_output)
    emit_json(ctx, report_to_json(reps));
  else
    emit(ctx, report_to_text(reps));
  return 0;
}

census::WhichFlags parse_which(const std::string& which) {
  census::WhichFlags w;
  w.left = false;
  std::stringstream ss(which);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "left")
      w.left = true;
    else if (tok == "lr")
      w.lr = true;
    else if (tok == "sym")
      w.sym = true;
    else if (tok == "symcomm")
      w.sym_comm = true;
    else
      throw InvalidParameter("unknown census flag: " + tok +
                             " (expected left,lr,sym,symcomm)");
  }
  return w;
}

int run_census_run(Ctx& ctx, unsigned n, const std::string& which, unsigned threads,
                   bool stretch, const std::string& checkpoint) {
  census::CensusOptions opts;
  opts.threads = threads;
  opts.stretch = stretch;
  opts.checkpoint_path = checkpoint;
  auto r = census::census(n, parse_which(which), opts);
  if (ctx.json_output) {
    json j;
    j["n"] = r.n;
    if (r.t_left) j["t_left"] = *r.t_left;
    if (r.t_lr) j["t_lr"] = *r.t_lr;
    if (r.t_sym) j["t_sym"] = *r.t_sym;
    if (r.t_sym_comm) j["t_sym_comm"] = *r.t_sym_comm;
    j["elapsed_seconds"] = r.elapsed_seconds;
    j["ops_enumerated"] = r.ops_enumerated;
    emit_json(ctx, j);
  } else {
    std::ostringstream os;
    os << "n=" << r.n;
    if (r.t_left) os << " t_left=" << *r.t_left;
    if (r.t_lr) os << " t_lr=" << *r.t_lr;
    if (r.t_sym) os << " t_sym=" << *r.t_sym;
    if (r.t_sym_comm) os << " t_sym_comm=" << *r.t_sym_comm;
    os << " (" << r.ops_enumerated << " ops)";
    emit(ctx, os.str());
  }
  return 0;
}

int run_census_conjecture(Ctx& ctx, unsigned n) {
  auto rep = census::conjecture_check(n);
  if (ctx.json_output) {
    json j;
    j["n"] = n;
    j["equal_sets"] = rep.equal_sets;
    j["sym_count"] = rep.sym_count;
    j["sym_comm_count"] = rep.sym_comm_count;
    if (rep.witness) {
      json w = json::array();
      for (auto e : rep.witness->decode()) w.push_back(e);
      j["witness_table"] = w;
    }
    emit_json(ctx, j);
  } else {
    std::ostringstream os;
    os << "n=" << n << ": symmetric sets "
       << (rep.equal_sets ? "coincide" : "DIFFER") << " (" << rep.sym_count
       << " vs " << rep.sym_comm_count << ")";
    emit(ctx, os.str());
  }
  return 0;
}

int run_suite(Ctx& ctx, unsigned census_max_n, unsigned threads) {
  suite::SuiteOptions opts;
  opts.census_max_n = census_max_n;
  opts.census_threads = threads;
  opts.seed = ctx.seed;
  auto results = suite::run_all(opts);
  if (ctx.json_output) {
    json j = json::array();
    for (const auto& r : results)
      j.push_back({{"number", r.number},
                   {"name", r.name},
                   {"status", suite::status_name(r.status)},
                   {"detail", r.detail},
                   {"elapsed_seconds", r.elapsed_seconds}});
    emit_json(ctx, j);
  } else {
    std::ostringstream os;
    for (const auto& r : results) {
      char line[512];
      std::snprintf(line, sizeof line, "[%2d/%zu] %s  %s (%.2fs)\n", r.number,
                    results.size(), suite::status_name(r.status), r.name.c_str(),
                    r.elapsed_seconds);
      os << line;
      if (r.status == suite::Status::failed && !r.detail.empty())
        os << "        " << r.detail << "\n";
    }
    os << (suite::all_passed(results) ? "ALL CHECKS PASSED" : "FAILURES PRESENT");
    emit(ctx, os.str());
  }
  return suite::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Ctx ctx;
  for (int i = 0; i < argc; ++i) {
    if (i) ctx.command_line += ' ';
    ctx.command_line += argv[i];
  }

  CLI::App app{"modlie: exact workbench for characteristic-2 modular Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global flags after a subcommand too
  app.add_flag("--json", ctx.json_output, "machine-readable JSON output");
  app.add_option("--seed", ctx.seed, "seed for randomized searches");
  app.add_option("--out", ctx.out_path, "write output to a file instead of stdout");
  app.add_option("--manifest", ctx.manifest_path, "write a run manifest JSON here");

  // zoo build
  ZooArgs zoo_args;
  auto* zoo_cmd = app.add_subcommand("zoo", "construct catalogue algebras");
  auto* zoo_build = zoo_cmd->add_subcommand("build", "emit structure-constant JSON");
  zoo_build
      ->add_option("name", zoo_args.name,
                   "ess|zassenhaus|divided-powers|truncated-poly|current|"
                   "semidirect|koszul")
      ->required();
  zoo_build->add_option("--n", zoo_args.n, "size parameter (zassenhaus, divided-powers)");
  zoo_build->add_option("--m", zoo_args.m, "truncation order (truncated-poly)");
  zoo_build->add_option("--field", zoo_args.field, "gf2 | gfp:<p> | Q");
  zoo_build->add_option("--a", zoo_args.a_path, "first factor algebra JSON");
  zoo_build->add_option("--b", zoo_args.b_path, "second factor algebra JSON");
  zoo_build->add_option("--s", zoo_args.s_path, "acting Lie algebra JSON (semidirect)");
  zoo_build->add_option("--d", zoo_args.d_paths, "derivation matrix JSON (repeatable)");

  // check
  std::string check_path, check_identity = "lie";
  auto* check_cmd = app.add_subcommand("check", "validate an algebra identity");
  check_cmd->add_option("file", check_path, "algebra JSON")->required();
  check_cmd->add_option("--identity", check_identity,
                        "lie|associative|commutative|left_novikov|right_novikov");

  // cohomology
  std::string coh_path, coh_flavor = "alternating", coh_coeffs = "trivial";
  std::size_t coh_degree = 2, coh_max_degree = 6;
  auto* coh_cmd = app.add_subcommand("cohomology", "Chevalley-Eilenberg / commutative cohomology");
  coh_cmd->add_option("file", coh_path, "algebra JSON")->required();
  coh_cmd->add_option("--flavor", coh_flavor, "alternating|symmetric");
  coh_cmd->add_option("--degree", coh_degree, "cochain degree");
  coh_cmd->add_option("--coeffs", coh_coeffs, "trivial|adjoint|<module.json>");
  coh_cmd->add_option("--max-degree", coh_max_degree, "degree budget");

  // envelope
  std::string env_path;
  auto* env_cmd = app.add_subcommand("envelope", "2-envelope of a GF(2) Lie algebra");
  env_cmd->add_option("file", env_path, "algebra JSON")->required();

  // decomp
  auto* dec_cmd = app.add_subcommand("decomp", "nilpotent decompositions");
  std::string dv_path, dv_n, dv_m;
  auto* dv = dec_cmd->add_subcommand("verify", "verify a decomposition");
  dv->add_option("file", dv_path, "algebra JSON")->required();
  dv->add_option("--n", dv_n, "first part subspace JSON")->required();
  dv->add_option("--m", dv_m, "second part subspace JSON")->required();
  std::string ds_path;
  std::size_t ds_budget = 100000;
  auto* ds = dec_cmd->add_subcommand("search", "search for a decomposition");
  ds->add_option("file", ds_path, "algebra JSON")->required();
  ds->add_option("--budget", ds_budget, "closure-operation budget");

  // young
  auto* young_cmd = app.add_subcommand("young", "block analyses of CE differentials");
  std::string yr_a, yr_b;
  std::size_t yr_nmax = 4;
  auto* yr = young_cmd->add_subcommand("report", "Young-graph blocks of a tensor product");
  yr->add_option("--a", yr_a, "first factor algebra JSON (over Q)")->required();
  yr->add_option("--b", yr_b, "second factor algebra JSON (over Q)")->required();
  yr->add_option("--nmax", yr_nmax, "top cochain degree (<= 5)");
  std::string yt_l, yt_n, yt_m;
  std::size_t yt_nmax = 4;
  auto* yt = young_cmd->add_subcommand("triangle", "bidegree blocks for L = N + M");
  yt->add_option("--algebra", yt_l, "algebra JSON")->required();
  yt->add_option("--n", yt_n, "first part subspace JSON")->required();
  yt->add_option("--m", yt_m, "second part subspace JSON")->required();
  yt->add_option("--nmax", yt_nmax, "top cochain degree (<= 5)");

  // census
  auto* cen_cmd = app.add_subcommand("census", "ternary superposition census");
  unsigned cr_n = 2;
  std::string cr_which = "left", cr_checkpoint;
  unsigned cr_threads = default_threads();
  bool cr_stretch = false;
  auto* cr = cen_cmd->add_subcommand("run", "count representable ternary maps");
  cr->add_option("--n", cr_n, "set size (1..4)")->required();
  cr->add_option("--which", cr_which, "comma list of left,lr,sym,symcomm");
  cr->add_option("--threads", cr_threads, "worker count");
  cr->add_flag("--stretch", cr_stretch, "allow the long n=4 full scan");
  cr->add_option("--checkpoint", cr_checkpoint, "checkpoint file (single-threaded)");
  unsigned cc_n = 2;
  auto* cc = cen_cmd->add_subcommand("conjecture", "compare symmetric sets");
  cc->add_option("--n", cc_n, "set size (1..4)")->required();

  // suite
  auto* suite_cmd = app.add_subcommand("suite", "run the full acceptance suite");
  unsigned su_max_n = 3, su_threads = default_threads();
  suite_cmd->add_option("--census-max-n", su_max_n,
                        "census rows above this n are SKIPPED");
  suite_cmd->add_option("--threads", su_threads, "census worker count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    int rc = 0;
    if (zoo_build->parsed())
      rc = run_zoo(ctx, zoo_args);
    else if (check_cmd->parsed())
      rc = run_check(ctx, check_path, check_identity);
    else if (coh_cmd->parsed())
      rc = run_cohomology(ctx, coh_path, coh_flavor, coh_degree, coh_coeffs,
                          coh_max_degree);
    else if (env_cmd->parsed())
      rc = run_envelope(ctx, env_path);
    else if (dv->parsed())
      rc = run_decomp_verify(ctx, dv_path, dv_n, dv_m);
    else if (ds->parsed())
      rc = run_decomp_search(ctx, ds_path, ds_budget);
    else if (yr->parsed())
      rc = run_young_report(ctx, yr_a, yr_b, yr_nmax);
    else if (yt->parsed())
      rc = run_young_triangle(ctx, yt_l, yt_n, yt_m, yt_nmax);
    else if (cr->parsed())
      rc = run_census_run(ctx, cr_n, cr_which, cr_threads, cr_stretch, cr_checkpoint);
    else if (cc->parsed())
      rc = run_census_conjecture(ctx, cc_n);
    else if (suite_cmd->parsed())
      rc = run_suite(ctx, su_max_n, su_threads);
    else {
      std::cerr << "missing subcommand; see --help\n";
      return 2;
    }
    write_manifest(ctx);
    return rc;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
