#include "toricgraph/invariants.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "toricgraph/cache.hpp"
#include "toricgraph/errors.hpp"
#include "toricgraph/families.hpp"
#include "toricgraph/toric.hpp"

namespace toricgraph {

int dim_toric(const Graph& g) {
  auto [components, bipartite] = bipartite_components(g);
  return static_cast<int>(g.num_vertices()) - bipartite;
}

int depth_from_pdim(int num_edges, int pdim) { return num_edges - pdim; }

MonomialOrder gt_family_order(const Graph& g) {
  std::vector<std::string> wanted;
  const size_t q = g.num_edges();
  if (q < 10 || q % 2 != 0)
    throw ValidationError("graph does not carry the a/f/e/b edge layout");
  const int t = static_cast<int>(q - 6) / 2;
  for (int i = 1; i <= t; ++i) wanted.push_back("a" + std::to_string(i));
  for (int i = 1; i <= 3; ++i) wanted.push_back("f" + std::to_string(i));
  for (int i = 1; i <= 3; ++i) wanted.push_back("e" + std::to_string(i));
  for (int i = 1; i <= t; ++i) wanted.push_back("b" + std::to_string(i));
  std::vector<int> priority;
  priority.reserve(q);
  for (const std::string& name : wanted) {
    const int idx = g.edge_index(name);
    if (idx < 0)
      throw ValidationError("graph does not carry the a/f/e/b edge layout (missing " +
                            name + ")");
    priority.push_back(idx);
  }
  return MonomialOrder::grevlex(std::move(priority));
}

namespace {

// Exact toric Betti entries forced by the numerator: within each column j
// the toric support lies inside the initial support, so once all but one
// entry of a column is certified, the alternating sum pins the last one.
// Oracle entries (exact mode) seed the propagation.
std::map<std::pair<int, int>, long long> certify_toric_entries(
    const BettiTable& initial, const ZPoly& numerator,
    const std::optional<KoszulResult>& oracle) {
  std::map<std::pair<int, int>, long long> certified;

  if (oracle && !oracle->probabilistic) {
    for (const auto& [ij, e] : initial.entries())
      if (ij.first <= oracle->max_i && ij.second <= oracle->max_j)
        certified[ij] = oracle->table.value(ij.first, ij.second);
  }

  std::set<int> columns;
  for (const auto& [ij, e] : initial.entries()) columns.insert(ij.second);

  bool progress = true;
  while (progress) {
    progress = false;
    for (int j : columns) {
      std::vector<std::pair<int, int>> unknown;
      Integer residual = numerator.coeff(j);
      for (const auto& [ij, e] : initial.entries()) {
        if (ij.second != j) continue;
        auto it = certified.find(ij);
        if (it == certified.end())
          unknown.push_back(ij);
        else
          residual -= (ij.first % 2 == 0 ? Integer(static_cast<long>(it->second))
                                         : Integer(static_cast<long>(-it->second)));
      }
      if (unknown.size() != 1) continue;
      const auto ij = unknown.front();
      const Integer value = ij.first % 2 == 0 ? residual : -residual;
      if (value < 0)
        throw IntegrityError("numerator forces a negative Betti entry at (" +
                             std::to_string(ij.first) + "," + std::to_string(ij.second) +
                             ")");
      if (value > Integer(static_cast<long>(initial.value(ij.first, ij.second))))
        throw IntegrityError("numerator forces an entry above the initial bound");
      certified[ij] = static_cast<long long>(value.get_si());
      progress = true;
    }
  }
  return certified;
}

void finish_bounds(InvariantReport& r) {
  if (!r.initial_betti_available) {
    r.reg.route = "unbounded: no initial table";
    r.pdim.route = "unbounded: no initial table";
    r.reg.upper = -1;
    r.pdim.upper = -1;
    return;
  }

  // Support still possible for the toric table: initial support minus
  // certified zeros.
  int reg_upper = 0, pdim_upper = 0, reg_lower = 0, pdim_lower = 0;
  for (const auto& [ij, e] : r.initial_betti.entries()) {
    auto it = r.certified_toric.find(ij);
    if (it != r.certified_toric.end() && it->second == 0) continue;
    reg_upper = std::max(reg_upper, ij.second - ij.first);
    pdim_upper = std::max(pdim_upper, ij.first);
  }
  for (const auto& [ij, v] : r.certified_toric) {
    if (v <= 0) continue;
    reg_lower = std::max(reg_lower, ij.second - ij.first);
    pdim_lower = std::max(pdim_lower, ij.first);
  }
  r.reg.lower = reg_lower;
  r.reg.upper = reg_upper;
  r.pdim.lower = pdim_lower;
  r.pdim.upper = pdim_upper;

  const bool oracle_exact = r.toric_betti && !r.toric_betti->probabilistic &&
                            r.comparison && r.comparison->window_covers_initial;
  auto pick_route = [&](bool exact) -> std::string {
    if (!exact) return "initial-bound";
    if (oracle_exact) return "koszul";
    return "corner";
  };
  if (reg_lower == reg_upper) r.reg.exact = reg_upper;
  if (pdim_lower == pdim_upper) r.pdim.exact = pdim_upper;
  r.reg.route = pick_route(r.reg.exact.has_value());
  r.pdim.route = pick_route(r.pdim.exact.has_value());
}

}  // namespace

BettiComparison compare_betti(const KoszulResult& toric, const BettiTable& initial) {
  BettiComparison cmp;
  cmp.probabilistic = toric.probabilistic;

  // The toric table is bounded by the initial table entrywise; any excess
  // inside the certified window is a bug.
  for (const auto& [ij, e] : toric.table.entries()) {
    if (ij.first > toric.max_i || ij.second > toric.max_j) continue;
    if (e.value > initial.value(ij.first, ij.second))
      throw IntegrityError("oracle Betti entry (" + std::to_string(ij.first) + "," +
                           std::to_string(ij.second) + ") = " + std::to_string(e.value) +
                           " exceeds the initial bound " +
                           std::to_string(initial.value(ij.first, ij.second)));
  }

  cmp.window_covers_initial = initial.pdim() <= toric.max_i && initial.max_j() <= toric.max_j;

  bool all_equal = cmp.window_covers_initial;
  for (const auto& [ij, e] : initial.entries()) {
    if (ij.first > toric.max_i || ij.second > toric.max_j) continue;
    const long long tv = toric.table.value(ij.first, ij.second);
    if (tv < e.value) {
      cmp.smaller_cells.push_back(ij);
      all_equal = false;
    }
  }
  cmp.all_equal = all_equal;

  // Rows (diagonal degree d) that fit in the window and match entrywise.
  std::set<int> rows;
  for (const auto& [ij, e] : initial.entries()) rows.insert(ij.second - ij.first);
  for (int d : rows) {
    bool inside = true, equal = true;
    for (const auto& [ij, e] : initial.entries()) {
      if (ij.second - ij.first != d) continue;
      if (ij.first > toric.max_i || ij.second > toric.max_j) {
        inside = false;
        break;
      }
      if (toric.table.value(ij.first, ij.second) != e.value) equal = false;
    }
    if (inside && equal) cmp.equal_rows.push_back(d);
  }
  return cmp;
}

InvariantReport analyze(const Graph& g, const AnalyzeOptions& options) {
  if (g.num_edges() == 0) throw ValidationError("graph has no edges");

  InvariantReport r;
  r.graph_id = options.graph_id;
  r.num_vertices = static_cast<int>(g.num_vertices());
  r.num_edges = static_cast<int>(g.num_edges());
  auto [components, bipartite] = bipartite_components(g);
  r.components = components;
  r.bipartite_comps = bipartite;
  r.connected = g.is_connected();
  if (!r.connected)
    r.warnings.push_back("graph is disconnected; invariants are computed globally");

  ContextPtr ctx = options.use_gt_order ? edge_context(g, gt_family_order(g))
                                        : edge_context(g);
  r.order_description = ctx->order().describe();

  const std::string cache_dir =
      options.cache_dir.empty() ? default_cache_dir() : options.cache_dir;
  if (!cache_dir.empty()) {
    const std::string key = cache_key(g, ctx->order());
    if (auto cached = cache_load(cache_dir, key, ctx)) {
      r.basis = std::move(*cached);
      r.checks.push_back("cache certificate: ok");
    } else {
      r.basis = toric_ideal(g, ctx, options.gb_limits);
      cache_store(cache_dir, key, *r.basis);
    }
  } else {
    r.basis = toric_ideal(g, ctx, options.gb_limits);
  }

  const MonomialIdeal initial = initial_ideal(*r.basis);
  r.initial_gens = initial.min_gens();

  r.hilbert = hilbert_series(initial, options.hilbert_limits);
  r.dim = dim_toric(g);
  if (r.dim != r.hilbert.krull_dim)
    throw IntegrityError("combinatorial dimension " + std::to_string(r.dim) +
                         " disagrees with the Hilbert series (" +
                         std::to_string(r.hilbert.krull_dim) + ")");
  r.checks.push_back("dimension cross-check: ok");
  r.deg_h = r.hilbert.deg_h();

  // Betti numbers of the initial ideal: linear quotients when they exist,
  // Taylor strands otherwise.
  if (auto cert = find_linear_quotients(initial, options.lq_exhaustive_cap)) {
    r.linquo = std::move(cert);
    r.initial_betti = betti_from_linear_quotients(*r.linquo);
    r.initial_betti_available = true;
    r.initial_betti_route = "linear-quotients";
  } else {
    try {
      r.initial_betti = betti_taylor(initial, options.taylor_limits);
      r.initial_betti_available = true;
      r.initial_betti_route = "taylor";
    } catch (const ResourceError& e) {
      r.initial_betti_route = std::string("unavailable: ") + e.what();
      r.warnings.push_back("initial Betti table skipped: " + std::string(e.what()));
    }
  }

  if (r.initial_betti_available) {
    if (!(euler_numerator(r.initial_betti) == r.hilbert.numerator))
      throw IntegrityError("initial Betti table disagrees with the Hilbert numerator");
    r.checks.push_back("euler consistency: ok");
    r.extremal = extremal_betti(r.initial_betti);
  }

  // Homology oracle on the initial table's window, when allowed/affordable.
  if (r.initial_betti_available && (options.koszul_auto || options.koszul_force)) {
    const int max_i = r.initial_betti.pdim();
    const int max_j = r.initial_betti.max_j();
    try {
      r.toric_betti = koszul_betti(g, *r.basis, max_i, max_j, options.koszul);
    } catch (const ResourceError& e) {
      if (options.koszul_force) throw;
      r.warnings.push_back("homology oracle skipped: " + std::string(e.what()));
    }
    if (r.toric_betti) {
      r.comparison = compare_betti(*r.toric_betti, r.initial_betti);
      r.checks.push_back("oracle bounded by initial table: ok");
    }
  }

  if (r.initial_betti_available) {
    r.certified_toric =
        certify_toric_entries(r.initial_betti, r.hilbert.numerator, r.toric_betti);
    if (r.certified_toric.count({0, 0}) && r.certified_toric[{0, 0}] != 1)
      throw IntegrityError("certified beta(0,0) is not 1");
  }
  finish_bounds(r);

  if (r.pdim.exact) {
    r.depth = depth_from_pdim(r.num_edges, *r.pdim.exact);
    r.cohen_macaulay = (*r.depth == r.dim);
  }

  // A nonzero toric ideal with exact regularity 1 must have a linear
  // h-polynomial.
  if (!initial.is_zero() && r.reg.exact && *r.reg.exact == 1) {
    if (r.deg_h != 1)
      throw IntegrityError("regularity 1 with deg h = " + std::to_string(r.deg_h));
    r.checks.push_back("reg 1 forces deg h 1: ok");
  }

  return r;
}

GluingCheck verify_gluing_increment(const Graph& g, int s, const std::string& edge,
                                    const AnalyzeOptions& options) {
  if (s < 2) throw ValidationError("gluing needs an even cycle C_{2s} with s >= 2");
  GluingCheck check;
  check.s = s;
  check.edge = edge;

  AnalyzeOptions host_options = options;
  host_options.graph_id = options.graph_id + " (host)";
  check.before = analyze(g, host_options);
  check.applies = check.before.connected;

  const Graph glued = glue_along_edge(g, build_family(FamilySpec::cycle(2 * s)), edge, "e1");
  AnalyzeOptions glued_options = options;
  glued_options.graph_id = options.graph_id + " + C" + std::to_string(2 * s);
  glued_options.use_gt_order = false;  // the glued graph has extra edges
  check.after = analyze(glued, glued_options);

  check.deg_h_before = check.before.deg_h;
  check.deg_h_after = check.after.deg_h;
  check.deg_h_increment_ok = (check.deg_h_after == check.deg_h_before + s - 1);

  check.reg_before = check.before.reg;
  check.reg_after = check.after.reg;
  const int inc = s - 1;  // both invariants grow by s - 1
  if (check.reg_before.exact && check.reg_after.exact)
    check.reg_increment_ok = (*check.reg_after.exact == *check.reg_before.exact + inc);
  check.reg_increment_consistent =
      check.reg_after.upper < 0 || check.reg_before.upper < 0 ||
      (check.reg_after.upper >= check.reg_before.lower + inc &&
       check.reg_after.lower <= check.reg_before.upper + inc);
  return check;
}

RegOneCheck check_reg_one_forces_linear_h(const InvariantReport& report) {
  RegOneCheck out;
  out.deg_h = report.deg_h;
  if (!report.reg.exact || *report.reg.exact != 1 || report.initial_gens.empty())
    return out;  // vacuous
  out.applicable = true;
  out.holds = (report.deg_h == 1);
  return out;
}

}  // namespace toricgraph
