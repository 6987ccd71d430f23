// toricgraph: toric ideals of graphs and the homological invariants of
// their edge subrings.  Exit codes: 0 success, 1 failed claim or integrity
// failure, 2 usage error, 3 resource cap.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toricgraph/cache.hpp"
#include "toricgraph/errors.hpp"
#include "toricgraph/families.hpp"
#include "toricgraph/graph.hpp"
#include "toricgraph/invariants.hpp"
#include "toricgraph/primitive.hpp"
#include "toricgraph/report.hpp"
#include "toricgraph/repro.hpp"
#include "toricgraph/toric.hpp"

namespace {

using namespace toricgraph;
using nlohmann::ordered_json;

struct GraphArgs {
  std::string family;
  int t = 0;
  int r = 0;
  int n = 0;
  std::string file;
};

void add_graph_flags(CLI::App* cmd, GraphArgs& a) {
  cmd->add_option("--family", a.family, "built-in family: K2t, Gt, C4r, Cn, Z")
      ->check(CLI::IsMember({"K2t", "Gt", "C4r", "Cn", "Z"}));
  cmd->add_option("--t", a.t, "parameter t for K2t and Gt");
  cmd->add_option("--r", a.r, "parameter r for C4r");
  cmd->add_option("--n", a.n, "cycle length for Cn");
  cmd->add_option("--graph", a.file, "graph JSON file");
}

Graph load_graph(const GraphArgs& a, std::string& id) {
  if (a.family.empty() == a.file.empty())
    throw ValidationError("give exactly one graph source: --family or --graph");
  if (!a.file.empty()) {
    std::ifstream in(a.file);
    if (!in) throw ValidationError("cannot open graph file: " + a.file);
    std::stringstream buf;
    buf << in.rdbuf();
    id = a.file;
    return graph_from_json(buf.str());
  }
  FamilySpec spec = FamilySpec::z();
  if (a.family == "K2t") {
    if (a.t < 2) throw ValidationError("K2t needs --t >= 2");
    spec = FamilySpec::k2t(a.t);
  } else if (a.family == "Gt") {
    if (a.t < 2) throw ValidationError("Gt needs --t >= 2");
    spec = FamilySpec::gt(a.t);
  } else if (a.family == "C4r") {
    if (a.r < 1) throw ValidationError("C4r needs --r >= 1");
    spec = FamilySpec::c4r(a.r);
  } else if (a.family == "Cn") {
    if (a.n < 3) throw ValidationError("Cn needs --n >= 3");
    spec = FamilySpec::cycle(a.n);
  }
  id = spec.id();
  return build_family(spec);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << content;
}

ContextPtr order_context(const Graph& g, const std::string& order) {
  if (order == "paper-gt") return edge_context(g, gt_family_order(g));
  return edge_context(g);
}

int run_family(const GraphArgs& ga, const std::string& out_file,
               const std::string& dot_file) {
  std::string id;
  Graph g = load_graph(ga, id);
  std::string js = graph_to_json(g);
  if (!dot_file.empty()) write_file(dot_file, graph_to_dot(g));
  if (!out_file.empty())
    write_file(out_file, js);
  else
    std::cout << js;
  return 0;
}

int run_toric_gb(const GraphArgs& ga, const std::string& order,
                 const std::string& format, const std::string& cache_dir,
                 int max_walk_len) {
  std::string id;
  Graph g = load_graph(ga, id);
  ContextPtr ctx = order_context(g, order);

  GroebnerBasis gb = [&] {
    std::string dir = cache_dir.empty() ? default_cache_dir() : cache_dir;
    if (dir.empty()) return toric_ideal(g, ctx);
    std::string key = cache_key(g, ctx->order());
    if (auto cached = cache_load(dir, key, ctx)) return std::move(*cached);
    GroebnerBasis fresh = toric_ideal(g, ctx);
    cache_store(dir, key, fresh);
    return fresh;
  }();

  std::vector<Binomial> prim;
  if (max_walk_len > 0) prim = primitive_binomials(g, gb, max_walk_len);

  if (format == "json") {
    ordered_json doc;
    doc["graph"] = id;
    doc["order"] = ctx->order().describe();
    ordered_json gens = ordered_json::array();
    for (const auto& b : gb.binomial_generators())
      gens.push_back(binomial_str(ctx, b));
    doc["generators"] = std::move(gens);
    if (max_walk_len > 0) {
      ordered_json pj = ordered_json::array();
      for (const auto& b : prim) pj.push_back(binomial_str(ctx, b));
      doc["primitive"] = std::move(pj);
      doc["max_walk_length"] = max_walk_len;
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "graph: " << id << "\n";
    std::cout << "order: " << ctx->order().describe() << "\n";
    std::cout << "reduced basis (" << gb.generators().size() << " generators):\n";
    for (const auto& b : gb.binomial_generators())
      std::cout << "  " << binomial_str(ctx, b) << "\n";
    if (max_walk_len > 0) {
      std::cout << "primitive binomials from closed even walks up to length "
                << max_walk_len << " (" << prim.size() << "):\n";
      for (const auto& b : prim) std::cout << "  " << binomial_str(ctx, b) << "\n";
    }
  }
  return 0;
}

AnalyzeOptions make_analyze_options(const std::string& order,
                                    const std::string& cache_dir,
                                    long long budget_cells, int jobs) {
  AnalyzeOptions opts;
  opts.use_gt_order = (order == "paper-gt");
  opts.cache_dir = cache_dir;
  if (budget_cells > 0) opts.koszul.budget_cells = budget_cells;
  if (jobs > 0) opts.koszul.jobs = jobs;
  return opts;
}

int run_invariants(const GraphArgs& ga, const std::string& order,
                   const std::string& format, const std::string& cache_dir,
                   long long budget_cells, int jobs) {
  std::string id;
  Graph g = load_graph(ga, id);
  AnalyzeOptions opts = make_analyze_options(order, cache_dir, budget_cells, jobs);
  opts.graph_id = id;
  InvariantReport r = analyze(g, opts);
  std::cout << (format == "json" ? report_json(r) : report_text(r));
  return 0;
}

int run_glue(const GraphArgs& ga, int cycle, const std::string& edge,
             const std::string& order, const std::string& format,
             const std::string& cache_dir, long long budget_cells, int jobs,
             const std::string& out_file, const std::string& dot_file) {
  if (cycle < 4 || cycle % 2 != 0)
    throw ValidationError("--cycle must be an even length >= 4");
  if (edge.empty()) throw ValidationError("--edge is required");
  std::string id;
  Graph g = load_graph(ga, id);

  if (!out_file.empty() || !dot_file.empty()) {
    Graph glued = glue_along_edge(g, build_family(FamilySpec::cycle(cycle)), edge, "e1");
    if (!out_file.empty()) write_file(out_file, graph_to_json(glued));
    if (!dot_file.empty()) write_file(dot_file, graph_to_dot(glued));
  }

  AnalyzeOptions opts = make_analyze_options(order, cache_dir, budget_cells, jobs);
  opts.graph_id = id;
  GluingCheck check = verify_gluing_increment(g, cycle / 2, edge, opts);
  std::cout << (format == "json" ? gluing_check_json(check)
                                 : gluing_check_text(check));
  bool ok = check.deg_h_increment_ok &&
            (check.reg_increment_ok ? *check.reg_increment_ok
                                    : check.reg_increment_consistent);
  return ok ? 0 : 1;
}

int run_reproduce(const std::vector<std::string>& scopes,
                  const std::string& fixtures, int jobs,
                  const std::string& format, const std::string& cache_dir,
                  long long budget_cells) {
  ReproOptions opts;
  opts.scopes.insert(scopes.begin(), scopes.end());
  opts.fixtures_path = fixtures;
  opts.jobs = jobs;
  opts.analyze = make_analyze_options("grevlex", cache_dir, budget_cells, 1);
  ReproSummary s = run_reproduction(opts);
  std::cout << (format == "json" ? repro_json(s) : repro_text(s));
  return s.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric ideals of graphs: Groebner bases, Hilbert series, and "
               "graded Betti data over the edge ring"};
  app.set_version_flag("--version", "toricgraph 1.0.0");
  app.require_subcommand(1);

  std::string order = "grevlex";
  std::string format = "text";
  std::string cache_dir;
  long long budget_cells = 0;
  int jobs = 1;

  auto add_common = [&](CLI::App* cmd, bool with_budget) {
    cmd->add_option("--order", order, "monomial order: grevlex (declaration) or paper-gt")
        ->check(CLI::IsMember({"grevlex", "paper-gt"}));
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--cache", cache_dir,
                    "basis cache directory (default: $TORICGRAPH_CACHE)");
    if (with_budget) {
      cmd->add_option("--budget-cells", budget_cells,
                      "homology oracle budget in matrix cells");
      cmd->add_option("--jobs", jobs, "worker threads");
    }
  };

  GraphArgs fam_args;
  std::string fam_out, fam_dot;
  CLI::App* fam = app.add_subcommand("family", "emit a graph as JSON");
  add_graph_flags(fam, fam_args);
  fam->add_option("--out", fam_out, "write JSON here instead of stdout");
  fam->add_option("--dot", fam_dot, "also write a DOT rendering");

  GraphArgs gb_args;
  int max_walk_len = 0;
  CLI::App* gb = app.add_subcommand("toric-gb", "reduced basis of the toric ideal");
  add_graph_flags(gb, gb_args);
  add_common(gb, false);
  gb->add_option("--max-walk-len", max_walk_len,
                 "also list primitive binomials from closed even walks up to "
                 "this length");

  GraphArgs inv_args;
  CLI::App* inv = app.add_subcommand("invariants", "full homological report");
  add_graph_flags(inv, inv_args);
  add_common(inv, true);

  GraphArgs glue_args;
  int cycle = 4;
  std::string glue_edge, glue_out, glue_dot;
  CLI::App* glue = app.add_subcommand(
      "glue", "glue an even cycle onto an edge and compare invariants");
  add_graph_flags(glue, glue_args);
  add_common(glue, true);
  glue->add_option("--cycle", cycle, "even cycle length to glue (>= 4)");
  glue->add_option("--edge", glue_edge, "host edge to glue along")->required();
  glue->add_option("--out", glue_out, "write the glued graph JSON here");
  glue->add_option("--dot", glue_dot, "write the glued graph DOT here");

  std::vector<std::string> scopes;
  std::string fixtures;
  CLI::App* rep = app.add_subcommand("reproduce", "check expected-value claims");
  rep->add_option("--scope", scopes,
                  "claim scopes: all, gt, k2t, c4r, glue, z, table");
  rep->add_option("--fixtures", fixtures,
                  "expected-value fixtures (default: $TORICGRAPH_DATA or the "
                  "built-in data directory)");
  add_common(rep, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (fam->parsed()) return run_family(fam_args, fam_out, fam_dot);
    if (gb->parsed())
      return run_toric_gb(gb_args, order, format, cache_dir, max_walk_len);
    if (inv->parsed())
      return run_invariants(inv_args, order, format, cache_dir, budget_cells, jobs);
    if (glue->parsed())
      return run_glue(glue_args, cycle, glue_edge, order, format, cache_dir,
                      budget_cells, jobs, glue_out, glue_dot);
    if (rep->parsed())
      return run_reproduce(scopes, fixtures, jobs, format, cache_dir, budget_cells);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity failure: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
