#include "toricgraph/primitive.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "toricgraph/errors.hpp"

namespace toricgraph {

namespace {

void divisors_rec(const std::vector<int>& exps, size_t var, std::vector<int>& cur,
                  std::vector<Monomial>& out) {
  if (var == exps.size()) {
    out.push_back(Monomial::from_exponents(cur));
    return;
  }
  for (int k = 0; k <= exps[var]; ++k) {
    cur[var] = k;
    divisors_rec(exps, var + 1, cur, out);
  }
  cur[var] = 0;
}

std::vector<Monomial> divisors(const Monomial& m) {
  std::vector<Monomial> out;
  std::vector<int> cur(m.num_vars(), 0);
  divisors_rec(m.exponents(), 0, cur, out);
  return out;
}

}  // namespace

std::vector<Binomial> primitive_binomials(const Graph& g, const GroebnerBasis& gb,
                                          int max_walk_length, const WalkLimits& limits) {
  const ContextPtr& ctx = gb.context();
  if (ctx->num_vars() != g.num_edges())
    throw ContextMismatchError("basis is not over the edge ring of the graph");
  for (size_t e = 0; e < g.num_edges(); ++e)
    if (ctx->variable_name(static_cast<int>(e)) != g.edge(static_cast<int>(e)).name)
      throw ContextMismatchError("basis variables do not match the edge names");

  // One binomial per sign-insensitive class of walk binomials.
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<Binomial> candidates;
  for (const Walk& w : enumerate_closed_even_walks(g, max_walk_length, limits)) {
    Binomial b = walk_to_binomial(ctx, g, w);
    if (seen.insert({b.lead.exponents(), b.trail.exponents()}).second)
      candidates.push_back(std::move(b));
  }

  std::vector<Binomial> primitive;
  for (const Binomial& f : candidates) {
    bool keep = true;
    const std::vector<Monomial> d1s = divisors(f.lead);
    const std::vector<Monomial> d2s = divisors(f.trail);
    for (const Monomial& d1 : d1s) {
      for (const Monomial& d2 : d2s) {
        if (d1 == f.lead && d2 == f.trail) continue;  // f itself
        if (d1 == d2) continue;                       // zero binomial
        // The ideal is homogeneous and monomial-free, so only equal degrees
        // can be members.
        if (d1.degree() != d2.degree()) continue;
        Polynomial cand =
            Polynomial::from_terms(ctx, {{d1, Rational(1)}, {d2, Rational(-1)}});
        if (gb.contains(cand)) {
          keep = false;
          break;
        }
      }
      if (!keep) break;
    }
    if (keep) primitive.push_back(f);
  }

  const MonomialOrder& ord = ctx->order();
  std::sort(primitive.begin(), primitive.end(), [&](const Binomial& a, const Binomial& b) {
    const Ordering c = ord.compare(a.lead, b.lead);
    if (c != Ordering::EQ) return c == Ordering::LT;
    return ord.less(a.trail, b.trail);
  });
  return primitive;
}

}  // namespace toricgraph
