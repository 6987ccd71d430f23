#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricgraph/betti.hpp"
#include "toricgraph/graph.hpp"
#include "toricgraph/groebner.hpp"
#include "toricgraph/hilbert.hpp"
#include "toricgraph/koszul.hpp"
#include "toricgraph/linquo.hpp"
#include "toricgraph/taylor.hpp"

namespace toricgraph {

struct AnalyzeOptions {
  bool use_gt_order = false;  // order a1..at > f1..f3 > e1..e3 > b1..bt
  BuchbergerLimits gb_limits;
  HilbertLimits hilbert_limits;
  TaylorLimits taylor_limits;
  KoszulOptions koszul;
  bool koszul_auto = true;    // run the homology oracle when the budget admits
  bool koszul_force = false;  // run it and propagate a budget failure
  size_t lq_exhaustive_cap = 8;
  std::string cache_dir;      // empty: no basis cache
  std::string graph_id = "graph";
};

// An invariant known exactly or sandwiched between bounds.
struct BoundedInvariant {
  int lower = 0;
  int upper = -1;  // -1: no upper bound available
  std::optional<int> exact;
  std::string route;  // how the value was pinned down

  bool admits(int v) const {
    return v >= lower && (upper < 0 || v <= upper);
  }
};

// Outcome of comparing the toric Betti table against the initial one on a
// certified window.
struct BettiComparison {
  bool window_covers_initial = false;
  bool all_equal = false;
  bool probabilistic = false;
  std::vector<std::pair<int, int>> smaller_cells;  // strict drops under the bound
  std::vector<int> equal_rows;  // rows d = j - i fully compared and equal
};

struct InvariantReport {
  std::string graph_id;
  int num_vertices = 0;
  int num_edges = 0;
  bool connected = true;
  int components = 1;
  int bipartite_comps = 0;
  std::string order_description;

  std::optional<GroebnerBasis> basis;   // reduced basis of the toric ideal
  std::vector<Monomial> initial_gens;   // minimal generators of the initial ideal
  HilbertData hilbert;
  int dim = 0;    // Krull dimension of the edge subring quotient
  int deg_h = 0;

  bool initial_betti_available = false;
  std::string initial_betti_route;  // "linear-quotients", "taylor", or why not
  BettiTable initial_betti;
  std::optional<LinearQuotientCertificate> linquo;
  std::vector<std::pair<int, int>> extremal;  // corners of the initial table

  std::optional<KoszulResult> toric_betti;
  std::optional<BettiComparison> comparison;
  // Exact toric entries pinned by the oracle and/or the numerator; values
  // may be 0 (a certified drop below the initial bound).
  std::map<std::pair<int, int>, long long> certified_toric;

  BoundedInvariant reg;
  BoundedInvariant pdim;
  std::optional<int> depth;            // |E| - pdim when pdim is exact
  std::optional<bool> cohen_macaulay;  // depth == dim when depth is known

  std::vector<std::string> checks;    // internal cross-checks that ran and passed
  std::vector<std::string> warnings;
};

// Full pipeline: toric basis, initial ideal, Hilbert data, Betti tables,
// certified bounds.  Throws ValidationError on an edgeless graph and
// IntegrityError when any internal cross-check fails.
InvariantReport analyze(const Graph& g, const AnalyzeOptions& options = {});

// Krull dimension of the edge subring quotient, combinatorially:
// |V| - (number of bipartite connected components).
int dim_toric(const Graph& g);

// depth via Auslander-Buchsbaum over the edge ring.
int depth_from_pdim(int num_edges, int pdim);

// The order a1 > ... > at > f1 > f2 > f3 > e1 > e2 > e3 > b1 > ... > bt on
// a graph carrying exactly those edge names (any declaration order).
MonomialOrder gt_family_order(const Graph& g);

// Compare an oracle window against the initial-ideal table; raises
// IntegrityError if the toric side ever exceeds the initial side.
BettiComparison compare_betti(const KoszulResult& toric, const BettiTable& initial);

// Glue an even cycle C_{2s} onto the given edge and compare invariants of
// both graphs: deg h and reg must both grow by s - 1 whenever they are
// exact on both sides (bounds must stay consistent otherwise).
struct GluingCheck {
  int s = 0;
  std::string edge;
  bool applies = false;  // host is connected, so the increment law holds
  int deg_h_before = 0, deg_h_after = 0;
  bool deg_h_increment_ok = false;
  BoundedInvariant reg_before, reg_after;
  std::optional<bool> reg_increment_ok;  // set when both sides exact
  bool reg_increment_consistent = false;
  InvariantReport before, after;
};
GluingCheck verify_gluing_increment(const Graph& g, int s, const std::string& edge,
                                    const AnalyzeOptions& options = {});

// reg = 1 forces deg h = 1 for a nonzero toric ideal; checked on a graph.
struct RegOneCheck {
  bool applicable = false;  // reg known exactly and equal to 1
  bool holds = true;
  int deg_h = 0;
};
RegOneCheck check_reg_one_forces_linear_h(const InvariantReport& report);

}  // namespace toricgraph
