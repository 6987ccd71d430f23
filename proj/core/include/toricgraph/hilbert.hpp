#pragma once

#include "toricgraph/groebner.hpp"
#include "toricgraph/zpoly.hpp"

namespace toricgraph {

// Hilbert series of R/I for a monomial ideal I in n variables, in the two
// standard presentations:
//
//   HS(x) = numerator / (1-x)^n = h / (1-x)^dim,   h(1) != 0.
//
// dim is the Krull dimension of R/I; deg h is the degree of h.
struct HilbertData {
  ZPoly numerator;
  ZPoly h;
  int num_vars = 0;
  int krull_dim = 0;

  int deg_h() const { return h.degree(); }
};

struct HilbertLimits {
  size_t max_nodes = 4'000'000;  // recursion tree nodes
};

HilbertData hilbert_series(const MonomialIdeal& ideal, const HilbertLimits& limits = {});

// Just the numerator over (1-x)^n.
ZPoly hilbert_numerator(const MonomialIdeal& ideal, const HilbertLimits& limits = {});

}  // namespace toricgraph
