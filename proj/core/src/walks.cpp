#include "toricgraph/walks.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "toricgraph/errors.hpp"

namespace toricgraph {

namespace {

// Exponent vectors of the two sides of the walk binomial, over the edges.
std::pair<std::vector<int>, std::vector<int>> side_exponents(size_t num_edges,
                                                             const std::vector<int>& seq) {
  std::vector<int> odd(num_edges, 0), even(num_edges, 0);
  for (size_t i = 0; i < seq.size(); ++i)
    ++(i % 2 == 0 ? odd : even)[static_cast<size_t>(seq[i])];
  return {std::move(odd), std::move(even)};
}

// Follows the edge sequence from one orientation of its first edge; true if
// it threads (consecutive edges share the running vertex) and closes.
bool threads_from(const Graph& g, const std::vector<int>& seq, int start) {
  int cur = start;
  for (int ei : seq) {
    const Graph::Edge& e = g.edge(ei);
    if (e.u != cur && e.v != cur) return false;
    cur = g.other_endpoint(ei, cur);
  }
  return cur == start;
}

}  // namespace

Walk canonical_walk(std::vector<int> edge_seq) {
  if (edge_seq.empty()) throw ValidationError("empty walk");
  const size_t n = edge_seq.size();
  std::vector<int> reversed(edge_seq.rbegin(), edge_seq.rend());
  std::vector<int> best;
  std::vector<int> rotated(n);
  for (const std::vector<int>* base : {&edge_seq, &reversed}) {
    for (size_t s = 0; s < n; ++s) {
      for (size_t i = 0; i < n; ++i) rotated[i] = (*base)[(s + i) % n];
      if (best.empty() || rotated < best) best = rotated;
    }
  }
  return Walk{std::move(best)};
}

std::vector<Walk> enumerate_closed_even_walks(const Graph& g, int max_length,
                                              const WalkLimits& limits) {
  if (max_length < 0) throw ValidationError("negative walk length cap");
  std::set<std::vector<int>> classes;
  size_t steps = 0;
  std::vector<int> seq;

  auto emit = [&](const std::vector<int>& s) {
    auto [odd, even] = side_exponents(g.num_edges(), s);
    if (odd == even) return;  // zero binomial
    Walk w = canonical_walk(s);
    if (classes.size() >= limits.max_classes && !classes.count(w.edge_seq))
      throw ResourceError("walk class cap " + std::to_string(limits.max_classes) +
                          " exceeded");
    classes.insert(std::move(w.edge_seq));
  };

  // DFS over walk prefixes from each start vertex; a prefix that returns to
  // the start at even length >= 4 is recorded and still extended.
  auto dfs = [&](auto&& self, int start, int cur) -> void {
    for (int ei : g.incident_edges(cur)) {
      if (++steps > limits.max_steps)
        throw ResourceError("walk enumeration step cap " +
                            std::to_string(limits.max_steps) + " exceeded");
      seq.push_back(ei);
      const int nxt = g.other_endpoint(ei, cur);
      if (nxt == start && seq.size() % 2 == 0 && seq.size() >= 4) emit(seq);
      if (static_cast<int>(seq.size()) < max_length) self(self, start, nxt);
      seq.pop_back();
    }
  };
  for (size_t v = 0; v < g.num_vertices(); ++v)
    dfs(dfs, static_cast<int>(v), static_cast<int>(v));

  std::vector<Walk> out;
  out.reserve(classes.size());
  for (const auto& s : classes) out.push_back(Walk{s});
  return out;
}

Binomial walk_to_binomial(const ContextPtr& ctx, const Graph& g, const Walk& w) {
  if (ctx->num_vars() != g.num_edges())
    throw ContextMismatchError("walk_to_binomial: context has " +
                               std::to_string(ctx->num_vars()) + " variables for " +
                               std::to_string(g.num_edges()) + " edges");
  const auto& seq = w.edge_seq;
  if (seq.size() < 2 || seq.size() % 2 != 0)
    throw ValidationError("walk length must be even and positive");
  for (int ei : seq)
    if (ei < 0 || ei >= static_cast<int>(g.num_edges()))
      throw ValidationError("walk references unknown edge index");
  const Graph::Edge& first = g.edge(seq[0]);
  if (!threads_from(g, seq, first.u) && !threads_from(g, seq, first.v))
    throw ValidationError("edge sequence is not a closed walk");

  auto [odd, even] = side_exponents(g.num_edges(), seq);
  Monomial mo = Monomial::from_exponents(std::move(odd));
  Monomial me = Monomial::from_exponents(std::move(even));
  if (mo == me) throw ValidationError("walk binomial is zero");

  // Both sides must have the same image in the vertex ring.
  std::vector<int> vo(g.num_vertices(), 0), ve(g.num_vertices(), 0);
  for (size_t e = 0; e < g.num_edges(); ++e) {
    const Graph::Edge& ed = g.edge(static_cast<int>(e));
    vo[static_cast<size_t>(ed.u)] += mo.exponent(static_cast<int>(e));
    vo[static_cast<size_t>(ed.v)] += mo.exponent(static_cast<int>(e));
    ve[static_cast<size_t>(ed.u)] += me.exponent(static_cast<int>(e));
    ve[static_cast<size_t>(ed.v)] += me.exponent(static_cast<int>(e));
  }
  if (vo != ve) throw IntegrityError("walk binomial sides map to different vertex monomials");

  return make_binomial(ctx, mo, me);
}

std::vector<std::string> walk_edge_names(const Graph& g, const Walk& w) {
  std::vector<std::string> names;
  names.reserve(w.edge_seq.size());
  for (int ei : w.edge_seq) names.push_back(g.edge(ei).name);
  return names;
}

}  // namespace toricgraph
