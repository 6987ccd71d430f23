#include "toricgraph/toric.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "toricgraph/errors.hpp"

namespace toricgraph {

ContextPtr edge_context(const Graph& g) {
  std::vector<std::string> names;
  names.reserve(g.num_edges());
  for (const auto& e : g.edges()) names.push_back(e.name);
  return make_grevlex_context(std::move(names));
}

ContextPtr edge_context(const Graph& g, const MonomialOrder& order) {
  if (order.num_vars() != g.num_edges())
    throw ContextMismatchError("edge order size does not match edge count");
  if (order.is_block())
    throw ValidationError("edge order must be a single grevlex block");
  std::vector<std::string> names;
  names.reserve(g.num_edges());
  for (const auto& e : g.edges()) names.push_back(e.name);
  return make_context(std::move(names), order);
}

Monomial phi_image(const Graph& g, const Monomial& edge_mono) {
  if (edge_mono.num_vars() != g.num_edges())
    throw ContextMismatchError("phi_image: monomial not over the edge ring");
  std::vector<int> vexp(g.num_vertices(), 0);
  for (size_t e = 0; e < g.num_edges(); ++e) {
    const int k = edge_mono.exponent(static_cast<int>(e));
    if (k == 0) continue;
    const Graph::Edge& ed = g.edge(static_cast<int>(e));
    vexp[static_cast<size_t>(ed.u)] += k;
    vexp[static_cast<size_t>(ed.v)] += k;
  }
  return Monomial::from_exponents(std::move(vexp));
}

GroebnerBasis toric_ideal(const Graph& g, const ContextPtr& edge_ctx,
                          const BuchbergerLimits& limits) {
  const size_t n = g.num_vertices();
  const size_t q = g.num_edges();
  if (q == 0) throw ValidationError("graph has no edges");
  if (edge_ctx->num_vars() != q)
    throw ContextMismatchError("edge context does not match edge count");
  for (size_t e = 0; e < q; ++e)
    if (edge_ctx->variable_name(static_cast<int>(e)) != g.edge(static_cast<int>(e)).name)
      throw ContextMismatchError("edge context variables must match edge names in order");
  if (edge_ctx->order().is_block())
    throw ValidationError("edge order must be a single grevlex block");

  // Combined ring: vertex variables first (they get eliminated), then the
  // edge variables under the requested order.
  std::vector<std::string> names;
  names.reserve(n + q);
  std::unordered_set<std::string> seen;
  for (const auto& v : g.vertices()) names.push_back("$" + v);
  for (const auto& e : g.edges()) names.push_back(e.name);
  for (const auto& nm : names)
    if (!seen.insert(nm).second)
      throw ValidationError("vertex/edge name collision on '" + nm + "'");

  std::vector<int> priority;
  priority.reserve(n + q);
  for (size_t v = 0; v < n; ++v) priority.push_back(static_cast<int>(v));
  for (int rank : edge_ctx->order().priority())
    priority.push_back(static_cast<int>(n) + rank);
  ContextPtr big =
      make_context(std::move(names),
                   MonomialOrder::block_grevlex(std::move(priority), static_cast<int>(n)));

  std::vector<Polynomial> gens;
  gens.reserve(q);
  for (size_t e = 0; e < q; ++e) {
    const Graph::Edge& ed = g.edge(static_cast<int>(e));
    Monomial uv = Monomial::variable(n + q, ed.u) * Monomial::variable(n + q, ed.v);
    gens.push_back(Polynomial::from_terms(
        big, {{Monomial::variable(n + q, static_cast<int>(n + e)), Rational(1)},
              {std::move(uv), Rational(-1)}}));
  }

  GroebnerBasis elim = buchberger(big, std::move(gens), limits);

  // Keep generators free of vertex variables; with vertices in the leading
  // block, a vertex-free lead forces a vertex-free generator.
  std::vector<Polynomial> kernel;
  for (const Polynomial& gen : elim.generators()) {
    const auto& lead = gen.leading_monomial().exponents();
    bool pure = true;
    for (size_t v = 0; v < n && pure; ++v)
      if (lead[v] != 0) pure = false;
    if (!pure) continue;
    std::vector<Polynomial::Term> terms;
    terms.reserve(gen.num_terms());
    for (const auto& [m, c] : gen.terms()) {
      for (size_t v = 0; v < n; ++v)
        if (m.exponents()[v] != 0)
          throw IntegrityError("vertex variable below a vertex-free lead");
      terms.emplace_back(
          Monomial::from_exponents(std::vector<int>(m.exponents().begin() +
                                                        static_cast<long>(n),
                                                    m.exponents().end())),
          c);
    }
    kernel.push_back(Polynomial::from_terms(edge_ctx, std::move(terms)));
  }

  // Restriction of a reduced elimination basis is itself reduced and sorted
  // under the edge order; the constructor re-checks the shape.
  GroebnerBasis gb(edge_ctx, std::move(kernel));

  if (!is_groebner_basis(std::span<const Polynomial>(gb.generators())))
    throw IntegrityError("elimination result fails the s-polynomial certificate");
  for (const Polynomial& gen : gb.generators()) {
    if (gen.num_terms() != 2) throw IntegrityError("kernel generator is not a binomial");
    if (!gen.is_homogeneous()) throw IntegrityError("kernel generator is not homogeneous");
    const Monomial& lead = gen.terms()[0].first;
    const Monomial& trail = gen.terms()[1].first;
    if (gen.terms()[1].second != Rational(-1))
      throw IntegrityError("kernel generator is not a difference of monomials");
    if (!lead.coprime_with(trail))
      throw IntegrityError("kernel generator sides are not coprime");
    if (phi_image(g, lead) != phi_image(g, trail))
      throw IntegrityError("kernel generator does not vanish under the edge map");
  }
  return gb;
}

GroebnerBasis toric_ideal(const Graph& g) { return toric_ideal(g, edge_context(g)); }

}  // namespace toricgraph
