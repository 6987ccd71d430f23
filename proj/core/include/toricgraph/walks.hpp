#pragma once

#include <cstddef>
#include <vector>

#include "toricgraph/graph.hpp"
#include "toricgraph/polynomial.hpp"

namespace toricgraph {

// Closed even walk, stored as its canonical edge-index sequence: the
// lexicographically least among all rotations of the sequence and of its
// reversal.  Two traversals of the same closed walk canonicalize equal.
struct Walk {
  std::vector<int> edge_seq;

  size_t length() const { return edge_seq.size(); }
  bool operator==(const Walk& o) const { return edge_seq == o.edge_seq; }
  bool operator<(const Walk& o) const { return edge_seq < o.edge_seq; }
};

Walk canonical_walk(std::vector<int> edge_seq);

struct WalkLimits {
  size_t max_classes = 1u << 20;   // distinct canonical walks kept
  size_t max_steps = 50'000'000;  // DFS extensions before giving up
};

// All closed even walks of length in [4, max_length] whose attached binomial
// is nonzero, one representative per canonical class, sorted.  Length-2
// closed walks repeat an edge and always give the zero binomial, so they are
// not reported.  Throws ResourceError when a limit is hit.
std::vector<Walk> enumerate_closed_even_walks(const Graph& g, int max_length,
                                              const WalkLimits& limits = {});

// The binomial of a closed even walk: product of odd-position edges minus
// product of even-position edges, normalized under ctx's order.  ctx must
// have one variable per edge of g, in declaration order.  Throws
// ValidationError if the two sides are equal (zero binomial) or the sequence
// is not a closed walk of even length.
Binomial walk_to_binomial(const ContextPtr& ctx, const Graph& g, const Walk& w);

std::vector<std::string> walk_edge_names(const Graph& g, const Walk& w);

}  // namespace toricgraph
