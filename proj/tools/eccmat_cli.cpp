// Copyright 2026 The eccmat authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.  Exit codes: 0 success / all checks passed,
// 1 a verification found failures, 2 usage error, 3 invalid graph input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <eccmat/eccmat.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadGraph = 3;

class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

nlohmann::json envelope(const std::string& command, nlohmann::json input, nlohmann::json result) {
  return nlohmann::json{{"format_version", 1},
                        {"command", command},
                        {"input", std::move(input)},
                        {"result", std::move(result)}};
}

void emit(const nlohmann::json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------
// Shared graph input: either a family with integer parameters, an edge-list
// file, or a graph6 string -- exactly one of them.
// ---------------------------------------------------------------------------

struct graph_input {
  std::vector<std::string> family_args;
  std::string edge_list_file;
  std::string graph6;
};

void add_graph_input_options(CLI::App* cmd, graph_input& in) {
  cmd->add_option("family", in.family_args,
                  "graph family and integer parameters, e.g. 'star 5' or 'lollipop 3 2'")
      ->expected(-1);
  cmd->add_option("--edge-list", in.edge_list_file,
                  "file with the vertex count on the first data line and one 'u v' edge per line");
  cmd->add_option("--graph6", in.graph6, "graph6 string");
}

int parse_param(const std::string& s) {
  std::size_t pos = 0;
  int v;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw usage_error("expected an integer parameter, got '" + s + "'");
  }
  if (pos != s.size()) throw usage_error("expected an integer parameter, got '" + s + "'");
  return v;
}

std::vector<int> parse_params(const std::vector<std::string>& args, std::size_t from) {
  std::vector<int> out;
  for (std::size_t i = from; i < args.size(); ++i) out.push_back(parse_param(args[i]));
  return out;
}

eccmat::graph build_family(const std::string& name, const std::vector<int>& p) {
  auto arity = [&](std::size_t k) {
    if (p.size() != k)
      throw usage_error("family '" + name + "' takes " + std::to_string(k) + " parameter(s), got " +
                        std::to_string(p.size()));
  };
  if (name == "path") { arity(1); return eccmat::make_path(p[0]); }
  if (name == "cycle") { arity(1); return eccmat::make_cycle(p[0]); }
  if (name == "complete") { arity(1); return eccmat::make_complete(p[0]); }
  if (name == "star") { arity(1); return eccmat::make_star(p[0]); }
  if (name == "wheel") { arity(1); return eccmat::make_wheel(p[0]); }
  if (name == "cocktail") { arity(1); return eccmat::make_cocktail_party(p[0]); }
  if (name == "barbell") { arity(1); return eccmat::make_barbell(p[0]); }
  if (name == "bipartite") { arity(2); return eccmat::make_complete_bipartite(p[0], p[1]); }
  if (name == "lollipop") { arity(2); return eccmat::make_lollipop(p[0], p[1]); }
  if (name == "corona") {
    // The eccentricity matrix of K_n o H depends only on |H|, so the CLI
    // builds the edgeless attachment of the requested order.
    arity(2);
    if (p[1] < 1) throw eccmat::graph_error("corona: attachment order must be positive");
    return eccmat::make_corona_complete(p[0], eccmat::graph(p[1]));
  }
  if (name == "multipartite") {
    if (p.size() < 2) throw usage_error("family 'multipartite' needs at least 2 part sizes");
    return eccmat::make_complete_multipartite(p);
  }
  throw usage_error("unknown family '" + name + "'");
}

eccmat::graph resolve_graph(const graph_input& in) {
  const int sources = (!in.family_args.empty() ? 1 : 0) + (!in.edge_list_file.empty() ? 1 : 0) +
                      (!in.graph6.empty() ? 1 : 0);
  if (sources != 1)
    throw usage_error("need exactly one graph source: a family, --edge-list, or --graph6");
  if (!in.family_args.empty())
    return build_family(in.family_args[0], parse_params(in.family_args, 1));
  if (!in.edge_list_file.empty()) {
    std::ifstream f(in.edge_list_file);
    if (!f) throw usage_error("cannot open edge-list file '" + in.edge_list_file + "'");
    return eccmat::read_edge_list(f);
  }
  return eccmat::graph6_decode(in.graph6);
}

nlohmann::json input_json(const graph_input& in) {
  if (!in.family_args.empty()) {
    nlohmann::json params = nlohmann::json::array();
    for (std::size_t i = 1; i < in.family_args.size(); ++i) params.push_back(parse_param(in.family_args[i]));
    return {{"source", "family"}, {"family", in.family_args[0]}, {"params", std::move(params)}};
  }
  if (!in.edge_list_file.empty()) return {{"source", "edge-list"}, {"file", in.edge_list_file}};
  return {{"source", "graph6"}, {"graph6", in.graph6}};
}

// ---------------------------------------------------------------------------
// build
// ---------------------------------------------------------------------------

struct build_options {
  graph_input input;
  std::string out_file;
  std::string format = "edgelist";
};

int run_build(const build_options& opt) {
  const eccmat::graph g = resolve_graph(opt.input);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!opt.out_file.empty()) {
    file.open(opt.out_file);
    if (!file) throw usage_error("cannot open output file '" + opt.out_file + "'");
    out = &file;
  }

  if (opt.format == "edgelist") {
    *out << g.num_vertices() << '\n';
    for (auto [u, v] : g.edge_list()) *out << u << ' ' << v << '\n';
  } else if (opt.format == "graph6") {
    *out << eccmat::graph6_encode(g) << '\n';
  } else if (opt.format == "json") {
    nlohmann::json result{{"graph", eccmat::graph_to_json(g)},
                          {"graph6", eccmat::graph6_encode(g)}};
    emit(envelope("build", input_json(opt.input), std::move(result)), *out);
  } else {
    throw usage_error("unknown build format '" + opt.format + "' (edgelist, graph6, json)");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// eccmat
// ---------------------------------------------------------------------------

struct eccmat_options {
  graph_input input;
  std::string format = "csv";
};

int run_eccmat(const eccmat_options& opt) {
  const eccmat::imatrix e = eccmat::ecc_matrix(resolve_graph(opt.input));
  if (opt.format == "csv") {
    std::cout << eccmat::matrix_to_csv(e);
  } else if (opt.format == "json") {
    emit(envelope("eccmat", input_json(opt.input), {{"matrix", eccmat::matrix_to_json(e)}}),
         std::cout);
  } else {
    throw usage_error("unknown matrix format '" + opt.format + "' (csv, json)");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

struct spectrum_options {
  graph_input input;
  std::string exact_family;
  double tol = 1e-12;
};

int run_spectrum(const spectrum_options& opt) {
  if (!opt.exact_family.empty()) {
    if (!opt.input.edge_list_file.empty() || !opt.input.graph6.empty())
      throw usage_error("--exact-family takes integer parameters, not --edge-list/--graph6");
    const std::vector<int> p = parse_params(opt.input.family_args, 0);
    auto arity = [&](std::size_t k) {
      if (p.size() != k)
        throw usage_error("--exact-family " + opt.exact_family + " takes " + std::to_string(k) +
                          " parameter(s)");
    };
    eccmat::spectrum s;
    nlohmann::json result;
    if (opt.exact_family == "star") {
      arity(1);
      s = eccmat::star_ecc_spectrum(p[0]);
      result["det"] = eccmat::star_ecc_det(p[0]).str();
    } else if (opt.exact_family == "corona") {
      arity(2);
      s = eccmat::corona_ecc_spectrum(p[0], p[1]);
    } else if (opt.exact_family == "wheel") {
      arity(1);
      s = eccmat::wheel_ecc_spectrum(p[0]);
    } else if (opt.exact_family == "barbell") {
      arity(1);
      s = eccmat::barbell_ecc_spectrum(p[0]);
    } else if (opt.exact_family == "cocktail") {
      arity(1);
      s = eccmat::cocktail_ecc_spectrum(p[0]);
    } else if (opt.exact_family == "multipartite") {
      if (p.size() < 2) throw usage_error("--exact-family multipartite needs at least 2 part sizes");
      s = eccmat::multipartite_ecc_spectrum(p);
    } else {
      throw usage_error("unknown exact family '" + opt.exact_family +
                        "' (star, corona, wheel, barbell, cocktail, multipartite)");
    }
    result["spectrum"] = s.to_json();
    nlohmann::json params = nlohmann::json::array();
    for (int v : p) params.push_back(v);
    emit(envelope("spectrum",
                  {{"source", "closed-form"}, {"family", opt.exact_family}, {"params", params}},
                  std::move(result)),
         std::cout);
    return kExitOk;
  }

  const eccmat::imatrix e = eccmat::ecc_matrix(resolve_graph(opt.input));
  eccmat::jacobi_options jopt;
  jopt.tol = opt.tol;
  const eccmat::spectrum s = eccmat::symmetric_spectrum(e, jopt);
  emit(envelope("spectrum", input_json(opt.input),
                {{"n", e.rows()}, {"spectrum", s.to_json()}}),
       std::cout);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// inertia
// ---------------------------------------------------------------------------

int run_inertia(const graph_input& input) {
  const eccmat::imatrix e = eccmat::ecc_matrix(resolve_graph(input));
  emit(envelope("inertia", input_json(input),
                {{"inertia", eccmat::inertia_to_json(eccmat::matrix_inertia(e))}}),
       std::cout);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct verify_options {
  std::string claim;
  int max_n = 9;
  bool max_n_set = false;
  std::string grid;
  bool grid_set = false;
  int jobs = 0;  // 0: fall back to ECCMAT_JOBS, then 1
  std::uint64_t seed = 42;
};

std::pair<int, int> parse_grid(const std::string& grid) {
  const auto dots = grid.find("..");
  if (dots == std::string::npos)
    throw usage_error("--grid expects LO..HI, got '" + grid + "'");
  const int lo = parse_param(grid.substr(0, dots));
  const int hi = parse_param(grid.substr(dots + 2));
  if (lo > hi)
    throw usage_error("--grid range is empty: " + grid);
  return {lo, hi};
}

int resolve_jobs(int jobs_flag) {
  if (jobs_flag > 0) return jobs_flag;
  if (const char* env = std::getenv("ECCMAT_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid ECCMAT_JOBS='" << env << "'\n";
  }
  return 1;
}

int run_verify(const verify_options& opt) {
  using eccmat::verification_report;
  const int jobs = resolve_jobs(opt.jobs);

  auto reject_grid = [&]() {
    if (opt.grid_set) throw usage_error("claim '" + opt.claim + "' does not take --grid");
  };
  auto reject_max_n = [&]() {
    if (opt.max_n_set) throw usage_error("claim '" + opt.claim + "' does not take --max-n");
  };

  std::vector<verification_report> reports;
  auto sweep = [&](int n_max) {
    eccmat::tree_sweep_options topt;
    topt.n_max = n_max;
    topt.jobs = jobs;
    if (opt.grid_set) {
      auto [lo, hi] = parse_grid(opt.grid);
      topt.n_min = lo;
      topt.n_max = hi;
    }
    return eccmat::verify_tree_theorems(topt);
  };
  auto grid_or = [&](int lo, int hi) {
    return opt.grid_set ? parse_grid(opt.grid) : std::pair<int, int>{lo, hi};
  };

  if (opt.claim == "tree-conjecture") {
    reports.push_back(sweep(opt.max_n).conjecture);
  } else if (opt.claim == "tree-irreducibility") {
    reports.push_back(sweep(opt.max_n).irreducibility);
  } else if (opt.claim == "star") {
    reject_max_n();
    auto [lo, hi] = grid_or(3, 30);
    reports.push_back(eccmat::verify_star_family(lo, hi));
  } else if (opt.claim == "corona") {
    reject_max_n();
    auto [lo, hi] = grid_or(2, 5);
    reports.push_back(eccmat::verify_corona_family(lo, hi));
  } else if (opt.claim == "wheel") {
    reject_max_n();
    auto [lo, hi] = grid_or(4, 12);
    reports.push_back(eccmat::verify_wheel_family(lo, hi));
  } else if (opt.claim == "barbell") {
    reject_max_n();
    auto [lo, hi] = grid_or(2, 10);
    reports.push_back(eccmat::verify_barbell_family(lo, hi));
  } else if (opt.claim == "cocktail") {
    reject_max_n();
    auto [lo, hi] = grid_or(2, 12);
    reports.push_back(eccmat::verify_cocktail_family(lo, hi));
  } else if (opt.claim == "multipartite") {
    reject_max_n();
    reject_grid();
    reports.push_back(eccmat::verify_multipartite_family(10, 12, opt.seed));
  } else if (opt.claim == "cone") {
    reject_max_n();
    reject_grid();
    reports.push_back(eccmat::verify_cone_family());
  } else if (opt.claim == "join") {
    reject_max_n();
    reject_grid();
    reports.push_back(eccmat::verify_join_family());
  } else if (opt.claim == "path-inertia") {
    reject_max_n();
    auto [lo, hi] = grid_or(4, 40);
    reports.push_back(eccmat::verify_path_inertia(lo, hi));
  } else if (opt.claim == "lollipop-inertia") {
    reject_max_n();
    auto [lo, hi] = grid_or(3, 8);
    reports.push_back(eccmat::verify_lollipop_inertia(lo, hi));
  } else if (opt.claim == "cospectral") {
    reject_max_n();
    reject_grid();
    reports.push_back(eccmat::verify_corona_cospectral());
  } else if (opt.claim == "block-lemma") {
    reject_max_n();
    reject_grid();
    reports.push_back(eccmat::verify_block_lemma(100, opt.seed));
  } else if (opt.claim == "kronecker") {
    reject_max_n();
    reject_grid();
    reports.push_back(eccmat::verify_kronecker_spectrum(100, opt.seed));
  } else if (opt.claim == "column-sum") {
    reject_max_n();
    reject_grid();
    reports.push_back(eccmat::verify_column_sum_lemma(50, opt.seed));
  } else if (opt.claim == "interlacing") {
    reject_max_n();
    reject_grid();
    reports.push_back(eccmat::verify_interlacing(200, opt.seed));
  } else if (opt.claim == "all") {
    reject_grid();
    reports.push_back(eccmat::verify_star_family());
    auto both = sweep(opt.max_n);
    reports.push_back(both.conjecture);
    reports.push_back(both.irreducibility);
    reports.push_back(eccmat::verify_path_inertia());
    reports.push_back(eccmat::verify_lollipop_inertia());
    reports.push_back(eccmat::verify_corona_family());
    reports.push_back(eccmat::verify_wheel_family());
    reports.push_back(eccmat::verify_barbell_family());
    reports.push_back(eccmat::verify_cocktail_family());
    reports.push_back(eccmat::verify_multipartite_family(10, 12, opt.seed));
    reports.push_back(eccmat::verify_cone_family());
    reports.push_back(eccmat::verify_join_family());
    reports.push_back(eccmat::verify_corona_cospectral());
    reports.push_back(eccmat::verify_block_lemma(100, opt.seed));
    reports.push_back(eccmat::verify_kronecker_spectrum(100, opt.seed));
    reports.push_back(eccmat::verify_column_sum_lemma(50, opt.seed));
    reports.push_back(eccmat::verify_interlacing(200, opt.seed));
  } else {
    throw usage_error("unknown claim '" + opt.claim + "'");
  }

  bool all_passed = true;
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : reports) {
    all_passed = all_passed && r.passed();
    rs.push_back(r.to_json());
    std::cerr << (r.passed() ? "PASS" : "FAIL") << "  " << r.claim << "  ("
              << r.instances_checked << " instances, " << r.elapsed_seconds << " s)\n";
  }

  nlohmann::json input{{"claim", opt.claim}, {"jobs", jobs}, {"seed", opt.seed}};
  if (opt.max_n_set) input["max_n"] = opt.max_n;
  if (opt.grid_set) input["grid"] = opt.grid;
  emit(envelope("verify", std::move(input), {{"passed", all_passed}, {"reports", std::move(rs)}}),
       std::cout);
  return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eccentricity matrices of connected graphs: construction, spectra, inertia, "
               "and brute-force verification"};
  app.require_subcommand(1);

  build_options bopt;
  CLI::App* build = app.add_subcommand("build", "construct a graph and serialize it");
  add_graph_input_options(build, bopt.input);
  build->add_option("--out", bopt.out_file, "write to a file instead of stdout");
  build->add_option("--format", bopt.format, "output format: edgelist (default), graph6, json");

  eccmat_options eopt;
  CLI::App* ecc = app.add_subcommand("eccmat", "compute the eccentricity matrix");
  add_graph_input_options(ecc, eopt.input);
  ecc->add_option("--format", eopt.format, "output format: csv (default), json");

  spectrum_options sopt;
  CLI::App* spec = app.add_subcommand("spectrum", "eigenvalues of the eccentricity matrix");
  add_graph_input_options(spec, sopt.input);
  spec->add_option("--exact-family", sopt.exact_family,
                   "emit the closed-form spectrum of a family instead of solving numerically");
  spec->add_option("--tol", sopt.tol, "relative Jacobi tolerance (default 1e-12)");

  graph_input iopt;
  CLI::App* inert = app.add_subcommand("inertia", "exact inertia of the eccentricity matrix");
  add_graph_input_options(inert, iopt);

  verify_options vopt;
  CLI::App* verify = app.add_subcommand(
      "verify", "check a theorem or identity over a parameter range; exits 1 on failures");
  verify->add_option("claim", vopt.claim,
                     "tree-conjecture, tree-irreducibility, star, corona, wheel, barbell, "
                     "cocktail, multipartite, cone, join, path-inertia, lollipop-inertia, "
                     "cospectral, block-lemma, kronecker, column-sum, interlacing, all")
      ->required();
  CLI::Option* max_n_opt =
      verify->add_option("--max-n", vopt.max_n, "largest tree order for the sweeps (default 9)");
  CLI::Option* grid_opt =
      verify->add_option("--grid", vopt.grid, "parameter range LO..HI for ranged claims");
  verify->add_option("--jobs", vopt.jobs,
                     "worker threads for the tree sweeps (default: ECCMAT_JOBS or 1)");
  verify->add_option("--seed", vopt.seed, "seed for the randomized suites (default 42)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  vopt.max_n_set = max_n_opt->count() > 0;
  vopt.grid_set = grid_opt->count() > 0;

  try {
    if (app.got_subcommand(build)) return run_build(bopt);
    if (app.got_subcommand(ecc)) return run_eccmat(eopt);
    if (app.got_subcommand(spec)) return run_spectrum(sopt);
    if (app.got_subcommand(inert)) return run_inertia(iopt);
    if (app.got_subcommand(verify)) return run_verify(vopt);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const eccmat::graph_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadGraph;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
