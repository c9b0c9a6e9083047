// gf4lc: classify self-dual additive codes over GF(4) through LC orbits of graphs.
//
// Exit status: 0 success, 1 validation failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gf4lc/analytics.hpp"
#include "gf4lc/catalog.hpp"
#include "gf4lc/inventory.hpp"
#include "gf4lc/orbit.hpp"
#include "gf4lc/standardize.hpp"

namespace {

using namespace gf4lc;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

std::uint64_t budget_from_env() {
  const char* env = std::getenv("GF4LC_BUDGET");
  if (!env || !*env) return kDefaultOrbitBudget;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(env).size() || v == 0) throw UsageError("GF4LC_BUDGET must be a positive integer");
  return v;
}

ClassifyOptions options(int j, int jobs) {
  ClassifyOptions o;
  o.j = j;
  o.jobs = jobs;
  o.budget = budget_from_env();
  o.progress = [](std::string_view msg) { std::cerr << msg << '\n'; };
  return o;
}

Catalog load_catalog(const std::string& path) {
  try {
    return catalog_read(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// Indecomposable catalogs for lengths 1..max_n: taken from the given files
// where available, classified otherwise.
std::vector<std::vector<OrbitRecord>> catalogs_up_to(int max_n, const std::vector<std::string>& files,
                                                     const ClassifyOptions& opts) {
  std::map<int, std::vector<OrbitRecord>> given;
  for (const auto& f : files) {
    Catalog c = load_catalog(f);
    if (c.scope != CatalogScope::All) throw UsageError("'" + f + "' is a Type II catalog; a complete one is needed");
    given[c.n] = std::move(c.records);
  }
  std::vector<std::vector<OrbitRecord>> out;
  std::vector<Graph> reps;
  for (int n = 1; n <= max_n; ++n) {
    if (auto it = given.find(n); it != given.end())
      out.push_back(it->second);
    else
      out.push_back(classify(n, reps, opts));
    reps = representatives(out.back());
  }
  return out;
}

Graph parse_graph_arg(const std::string& text) {
  try {
    return graph_parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--graph: ") + e.what());
  }
}

int run_classify(int n, bool type2, int j, int jobs, const std::string& from, const std::string& out) {
  const ClassifyOptions opts = options(j, jobs);
  if (n < 1 || n > kMaxVertices) throw UsageError("--n must be in 1.." + std::to_string(kMaxVertices));
  if (type2 && n % 2) throw UsageError("--type2 needs an even --n");
  const int prev_n = type2 ? n - 2 : n - 1;
  std::vector<Graph> previous;
  if (prev_n >= 1) {
    if (!from.empty()) {
      const Catalog c = load_catalog(from);
      if (c.n != prev_n || c.scope != CatalogScope::All)
        throw UsageError("--from must be the complete catalog of length " + std::to_string(prev_n));
      previous = representatives(c.records);
    } else {
      previous = representatives(catalogs_up_to(prev_n, {}, opts).back());
    }
  }
  Catalog c;
  c.n = n;
  c.scope = type2 ? CatalogScope::TypeII : CatalogScope::All;
  c.records = type2 ? classify_type2(n, previous, opts) : classify(n, previous, opts);
  write_file(out, catalog_write(c));
  std::cerr << "n=" << n << ": " << c.records.size() << (type2 ? " Type II" : "") << " classes\n";
  return kOk;
}

int run_orbit(const std::string& graph) {
  const Orbit orbit = lc_orbit(parse_graph_arg(graph), budget_from_env());
  for (const auto& m : orbit.members) std::cout << graph_format(m.graph()) << '\n';
  std::cerr << "members=" << orbit.members.size() << " l=" << orbit.labeled_count << '\n';
  return kOk;
}

int run_invariants(const std::string& graph) {
  const Graph g = parse_graph_arg(graph);
  const WeightEnumerator wd = graph_weight_enumerator(g);
  const auto linear = linearity_test(g);
  std::cout << "graph=" << graph_format(g) << '\n'
            << "n=" << g.size() << '\n'
            << "d=" << wd.min_distance() << '\n'
            << "type=" << to_string(wd.type()) << '\n'
            << "wd=" << wd.to_string() << '\n'
            << "enumerator=" << wd.polynomial() << '\n'
            << "scalings=" << (g.size() <= 14 ? std::to_string(scaling_count(g)) : std::string("n/a")) << '\n'
            << "anti-Eulerian=" << (is_anti_eulerian(g) ? "true" : "false") << '\n'
            << "connected=" << (is_connected(g) ? "true" : "false") << '\n'
            << "linear=" << (linear ? "true" : "false") << '\n';
  if (linear) std::cout << "linear-diagonal=" << *linear << '\n';
  return kOk;
}

int run_standardize(const std::string& matrix) {
  const auto rows = parse_matrix(read_file(matrix));
  const Standardization s = code_to_graph(rows);
  // The transcript is replayed and compared, not trusted.
  if (code_from_generators(replay(s.start, s.transcript)) != graph_to_code(s.graph)) {
    std::cerr << "error: transcript replay does not reproduce the graph code\n";
    return kInvalid;
  }
  std::cout << "graph=" << graph_format(s.graph) << '\n';
  std::cout << "transcript=" << s.transcript.size() << '\n';
  for (const auto& op : s.transcript) std::cout << op.to_string() << '\n';
  return kOk;
}

int run_verify_mass(int n, const std::vector<std::string>& catalogs) {
  if (n < 1 || n > 14) throw UsageError("--n must be in 1..14");
  const auto by_length = catalogs_up_to(n, catalogs, options(-1, 1));
  const ClassInventory inv = make_inventory(n, all_classes(n, by_length));
  const MassCheck m = mass_check(inv);
  std::cout << "mass lhs=" << m.lhs << " rhs=" << m.rhs << (m.ok ? " ok" : " FAIL") << '\n';
  bool ok = m.ok;
  if (n % 2 == 0) {
    const MassCheck t = mass_check_type2(inv);
    std::cout << "mass-type2 lhs=" << t.lhs << " rhs=" << t.rhs << (t.ok ? " ok" : " FAIL") << '\n';
    ok = ok && t.ok;
  }
  return ok ? kOk : kInvalid;
}

int run_tables(int max_n, const std::vector<std::string>& catalogs, int jobs, const std::string& out) {
  if (max_n < 1 || max_n > 14) throw UsageError("--max-n must be in 1..14");
  write_file(out, emit_tables(catalogs_up_to(max_n, catalogs, options(-1, jobs))));
  return kOk;
}

int run_convert(const std::string& matrix, const std::string& to) {
  const auto rows = parse_matrix(read_file(matrix));
  const AdditiveCode code = code_from_generators(rows);
  if (to == "beta") {
    const auto img = beta_image(code);
    std::cout << format_binary_matrix(img);
  } else if (to == "isodual") {
    const auto img = isodual_image(code);
    std::cout << format_binary_matrix(img);
  } else {
    const auto img = z4_image(code_to_graph(code).graph);
    std::cout << format_z4_matrix(img);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-dual additive codes over GF(4) and LC orbits of graphs", "gf4lc"};
  app.require_subcommand(1);

  int n = 0, j = -1, jobs = 1, max_n = 0;
  bool type2 = false;
  std::string out, from, graph, matrix, to;
  std::vector<std::string> catalogs;

  auto* classify_cmd = app.add_subcommand("classify", "Classify the indecomposable codes of length n");
  classify_cmd->add_option("--n", n, "Code length")->required();
  classify_cmd->add_flag("--type2", type2, "Only Type II codes (even n)");
  classify_cmd->add_option("--j", j, "Partial weight distribution depth (default min(n-2, 6))")->check(CLI::NonNegativeNumber);
  classify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--from", from, "Complete catalog of length n-1 (n-2 with --type2); computed if absent")
      ->check(CLI::ExistingFile);
  classify_cmd->add_option("--out", out, "Output catalog ('-' for stdout)")->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "Print every unlabeled graph in the LC orbit of a graph");
  orbit_cmd->add_option("--graph", graph, "Graph as <n>:<upper-triangle bits>")->required();

  auto* inv_cmd = app.add_subcommand("invariants", "Code invariants of a graph");
  inv_cmd->add_option("--graph", graph, "Graph as <n>:<upper-triangle bits>")->required();

  auto* std_cmd = app.add_subcommand("standardize", "Reduce a generator matrix to a graph");
  std_cmd->add_option("--matrix", matrix, "Matrix file ('-' for stdin)")->required();

  auto* mass_cmd = app.add_subcommand("verify-mass", "Check the mass formulas at length n");
  mass_cmd->add_option("--n", n, "Code length")->required();
  mass_cmd->add_option("--catalog", catalogs, "Complete catalogs to use instead of classifying")->check(CLI::ExistingFile);

  auto* tables_cmd = app.add_subcommand("tables", "Summary tables for lengths 1..N");
  tables_cmd->add_option("--max-n", max_n, "Largest length")->required();
  tables_cmd->add_option("--catalog", catalogs, "Complete catalogs to use instead of classifying")->check(CLI::ExistingFile);
  tables_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  tables_cmd->add_option("--out", out, "Output file")->default_val("-");

  auto* convert_cmd = app.add_subcommand("convert", "Binary or Z4 image of a code");
  convert_cmd->add_option("--matrix", matrix, "Matrix file ('-' for stdin)")->required();
  convert_cmd->add_option("--to", to, "beta, z4 or isodual")->required()->check(CLI::IsMember({"beta", "z4", "isodual"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    // Requirement checks run before unknown arguments are reported; name them too.
    std::vector<std::string> extra = app.remaining();
    for (const auto* sub : app.get_subcommands())
      for (const auto& s : sub->remaining()) extra.push_back(s);
    if (!extra.empty() && !dynamic_cast<const CLI::ExtrasError*>(&e)) {
      std::cerr << "unrecognized arguments:";
      for (const auto& s : extra) std::cerr << ' ' << s;
      std::cerr << '\n';
    }
    return kUsage;
  }

  try {
    if (*classify_cmd) return run_classify(n, type2, j, jobs, from, out);
    if (*orbit_cmd) return run_orbit(graph);
    if (*inv_cmd) return run_invariants(graph);
    if (*std_cmd) return run_standardize(matrix);
    if (*mass_cmd) return run_verify_mass(n, catalogs);
    if (*tables_cmd) return run_tables(max_n, catalogs, jobs, out);
    if (*convert_cmd) return run_convert(matrix, to);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const gf4lc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kUsage;
}
