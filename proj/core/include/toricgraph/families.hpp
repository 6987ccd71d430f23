#pragma once

#include <string>

#include "toricgraph/graph.hpp"

namespace toricgraph {

// Built-in graph families.
//
//   K2t(t):   complete bipartite K_{2,t}; vertices x1,x2,y1..yt, edges
//             ai = {x1,yi}, bi = {x2,yi}.  t >= 2.
//   Gt(t):    two triangles hung off x1 and x2 plus the K_{2,t} core;
//             vertices x1,x2,y1..yt,z1,z2,w1,w2; edges a1..at, f1..f3,
//             e1..e3, b1..bt declared in that order.  t >= 2.
//   C4r(r):   r squares sharing the common edge {x1,x2}; vertices
//             x1..x_{2r+2}, edges e0 = {x1,x2} and pi,qi,ri per square.
//             r >= 1; C4r(1) is a 4-cycle.
//   Cycle(n): n-cycle on x1..xn with edges e1..en.  n >= 3.
//   Z:        a fixed 10-vertex, 15-edge graph used as a regression case.
struct FamilySpec {
  enum class Kind { K2t, Gt, C4r, Cycle, Z };
  Kind kind;
  int parameter = 0;

  static FamilySpec k2t(int t) { return {Kind::K2t, t}; }
  static FamilySpec gt(int t) { return {Kind::Gt, t}; }
  static FamilySpec c4r(int r) { return {Kind::C4r, r}; }
  static FamilySpec cycle(int n) { return {Kind::Cycle, n}; }
  static FamilySpec z() { return {Kind::Z, 0}; }

  std::string id() const;  // "Gt(3)", "Z", ... stable across runs
};

Graph build_family(const FamilySpec& spec);

// Glues g2 onto g1, identifying edge e2 of g2 with edge e1 of g1.  The
// surviving g2 names get a "#k" suffix, k = gluing generation.  Default
// orientation pairs endpoints in declaration order; flip reverses it.
// |V| = |V1| + |V2| - 2 and |E| = |E1| + |E2| - 1.
Graph glue_along_edge(const Graph& g1, const Graph& g2, const std::string& e1,
                      const std::string& e2, bool flip = false);

// Graph with deg h = d and expected regularity r, for 4 <= r <= d: the
// base family with q = d - r + 1 glued with r - 4 squares along b1.
// For r = d it is C4r(r).
Graph build_table_graph(int r, int d);

// Closed-form reference bases over an edge ring ctx that contains the
// family's edge names.  For Gt the set splits into three blocks:
//   (1)  ai*bj - aj*bi                      1 <= i < j <= t
//   (2)  ai*aj*f1*f3*e2 - f2*e1*e3*bi*bj    1 <= i < j <= t
//   (3)  ai^2*f1*f3*e2 - f2*e1*e3*bi^2      1 <= i <= t
// Block (1) alone is the K2t reference basis.  Binomials come back
// oriented by ctx's order.
std::vector<Binomial> gt_reference_basis(const ContextPtr& ctx, int t);
std::vector<Binomial> k2t_reference_basis(const ContextPtr& ctx, int t);

// Lead monomials of the reference basis, listed block (1), (2), (3) with
// each block ascending in ctx's order.  This listing admits linear
// quotients; for K2t it is just block (1) ascending.
std::vector<Monomial> gt_reference_lead_order(const ContextPtr& ctx, int t);
std::vector<Monomial> k2t_reference_lead_order(const ContextPtr& ctx, int t);

}  // namespace toricgraph
