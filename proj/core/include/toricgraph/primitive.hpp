#pragma once

#include <vector>

#include "toricgraph/graph.hpp"
#include "toricgraph/groebner.hpp"
#include "toricgraph/walks.hpp"

namespace toricgraph {

// Primitive binomials of the toric ideal, found by sieving walk binomials:
// f = f1 - f2 is dropped when some strictly smaller g1 - g2 with g1 | f1,
// g2 | f2 also lies in the ideal.  Walks are enumerated up to
// max_walk_length; gb must be a Groebner basis of the toric ideal of g over
// its edge ring (any order), used for the membership tests.  The result is
// the Graver-style generating set restricted to the enumerated window,
// sorted by the gb context order (lead, then trail).
std::vector<Binomial> primitive_binomials(const Graph& g, const GroebnerBasis& gb,
                                          int max_walk_length,
                                          const WalkLimits& limits = {});

}  // namespace toricgraph
