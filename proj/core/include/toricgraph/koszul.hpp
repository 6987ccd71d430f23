#pragma once

#include "toricgraph/betti.hpp"
#include "toricgraph/graph.hpp"
#include "toricgraph/groebner.hpp"

namespace toricgraph {

struct KoszulOptions {
  // Per-block work proxy: (standard monomials of degree j-i) * C(q, i) must
  // stay within budget_cells for every block in the window.
  long long budget_cells = 8'000'000;
  bool modular_only = false;  // ranks over F_p only; result marked probabilistic
  int jobs = 1;               // strand ranks computed in parallel
};

// Betti numbers computed from Koszul homology of the quotient.
struct KoszulResult {
  BettiTable table;
  int max_i = -1;  // window that was certified: all i <= max_i, j <= max_j
  int max_j = -1;
  bool probabilistic = false;
};

// Betti numbers beta_{i,j}(R/I) for i <= max_i, j <= max_j, where I is the
// toric ideal of g with Groebner basis gb.  Works strand by strand: the
// Koszul complex (R/I) (x) Wedge(edges) splits by the vertex-degree
// multigrading, each strand is a small complex of standard monomials times
// subsets, and its homology ranks are computed exactly over the rationals
// (over F_p when modular_only).  Throws ResourceError naming the first
// block whose size estimate exceeds budget_cells.
KoszulResult koszul_betti(const Graph& g, const GroebnerBasis& gb, int max_i,
                          int max_j, const KoszulOptions& options = {});

}  // namespace toricgraph
