#pragma once

#include "toricgraph/graph.hpp"
#include "toricgraph/groebner.hpp"
#include "toricgraph/polynomial.hpp"

namespace toricgraph {

// Edge ring of g: one variable per edge, named after it, declaration order.
ContextPtr edge_context(const Graph& g);
// Same variables under another single-block grevlex order.
ContextPtr edge_context(const Graph& g, const MonomialOrder& order);

// Image of an edge monomial under e -> (product of endpoints): the vertex
// exponent vector, as a monomial over the vertices in declaration order.
Monomial phi_image(const Graph& g, const Monomial& edge_mono);

// Reduced Groebner basis of the kernel of the edge map, computed by
// eliminating the vertex variables from <e - uv> under a block order
// (vertices before edges, the requested order inside the edge block).
// Every generator is a monic homogeneous binomial with coprime sides that
// the edge map sends to zero; violations raise IntegrityError.
GroebnerBasis toric_ideal(const Graph& g, const ContextPtr& edge_ctx,
                          const BuchbergerLimits& limits = {});
GroebnerBasis toric_ideal(const Graph& g);

}  // namespace toricgraph
