#pragma once

#include "toricgraph/betti.hpp"
#include "toricgraph/groebner.hpp"

namespace toricgraph {

struct TaylorLimits {
  size_t max_generators = 22;   // 2^m subsets get enumerated
  size_t max_strand = 200'000;  // subsets sharing one lcm
};

// Graded Betti numbers of R/I for a monomial ideal I, read off the Taylor
// resolution: subsets with equal lcm form a strand per multidegree, and
// beta_{k,deg} is the homology rank of that strand at k.  Exact (rational
// ranks); cost grows with 2^(number of generators).
BettiTable betti_taylor(const MonomialIdeal& ideal, const TaylorLimits& limits = {});

}  // namespace toricgraph
