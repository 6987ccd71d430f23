#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "toricgraph/errors.hpp"
#include "toricgraph/families.hpp"
#include "toricgraph/graph.hpp"
#include "toricgraph/toric.hpp"
#include "toricgraph/walks.hpp"

using namespace toricgraph;

namespace {

std::vector<int> rotate(std::vector<int> s, size_t k) {
  std::rotate(s.begin(), s.begin() + static_cast<long>(k % s.size()), s.end());
  return s;
}

// Random closed even walk: wander from a start vertex and keep the prefix
// the first time it returns at even length.
std::vector<int> random_closed_walk(const Graph& g, std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> vstart(0, static_cast<int>(g.num_vertices()) - 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    const int start = vstart(rng);
    int at = start;
    std::vector<int> seq;
    for (int step = 0; step < max_len; ++step) {
      const auto& inc = g.incident_edges(at);
      if (inc.empty()) break;
      std::uniform_int_distribution<size_t> pick(0, inc.size() - 1);
      const int e = inc[pick(rng)];
      seq.push_back(e);
      at = g.other_endpoint(e, at);
      if (at == start && seq.size() % 2 == 0) return seq;
    }
  }
  return {};
}

}  // namespace

TEST_CASE("graph json round trip keeps names and declaration order") {
  Graph g = build_family(FamilySpec::gt(2));
  Graph back = graph_from_json(graph_to_json(g));
  CHECK(back.vertices() == g.vertices());
  REQUIRE(back.num_edges() == g.num_edges());
  for (size_t i = 0; i < g.num_edges(); ++i) {
    CHECK(back.edge(static_cast<int>(i)).name == g.edge(static_cast<int>(i)).name);
    CHECK(back.edge(static_cast<int>(i)).u == g.edge(static_cast<int>(i)).u);
    CHECK(back.edge(static_cast<int>(i)).v == g.edge(static_cast<int>(i)).v);
  }
  CHECK(back.canonical_json() == g.canonical_json());
}

TEST_CASE("graph validation rejects loops, duplicates and unknown names") {
  Graph g;
  g.add_vertex("u");
  g.add_vertex("v");
  CHECK_THROWS_AS(g.add_edge("e", "u", "u"), ValidationError);
  CHECK_THROWS_AS(g.add_edge("e", "u", "w"), ValidationError);
  g.add_edge("e", "u", "v");
  CHECK_THROWS_AS(g.add_edge("f", "v", "u"), ValidationError);  // same pair
  CHECK_THROWS_AS(g.add_edge("e", "u", "v"), ValidationError);  // same name
}

TEST_CASE("bipartite components count isolated vertices as bipartite") {
  Graph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_vertex("c");
  g.add_vertex("lone");
  g.add_edge("ab", "a", "b");
  g.add_edge("bc", "b", "c");
  g.add_edge("ca", "c", "a");  // triangle: odd
  auto [comps, bip] = bipartite_components(g);
  CHECK(comps == 2);
  CHECK(bip == 1);
  CHECK_FALSE(is_bipartite(g));
  CHECK(g.is_connected() == false);
}

TEST_CASE("dot export names every edge") {
  Graph g = build_family(FamilySpec::c4r(1));
  const std::string dot = graph_to_dot(g);
  for (const auto& e : g.edges())
    CHECK(dot.find(e.name) != std::string::npos);
}

TEST_CASE("canonical walk is invariant under rotation and reversal") {
  std::mt19937 rng(440217);
  Graph g = build_family(FamilySpec::gt(3));
  int produced = 0;
  while (produced < 250) {
    std::vector<int> seq = random_closed_walk(g, rng, 12);
    if (seq.empty()) continue;
    ++produced;
    const Walk canon = canonical_walk(seq);
    std::uniform_int_distribution<size_t> r(0, seq.size() - 1);
    CHECK(canonical_walk(rotate(seq, r(rng))) == canon);
    std::vector<int> rev(seq.rbegin(), seq.rend());
    CHECK(canonical_walk(rotate(rev, r(rng))) == canon);
  }
}

TEST_CASE("the square of K22 yields the minor with the expected orientation") {
  Graph g = build_family(FamilySpec::k2t(2));
  auto ctx = edge_context(g);
  auto walks = enumerate_closed_even_walks(g, 4);
  REQUIRE(walks.size() == 1);
  Binomial b = walk_to_binomial(ctx, g, walks[0]);
  CHECK(ctx->monomial_str(b.lead) == "a2*b1");
  CHECK(ctx->monomial_str(b.trail) == "a1*b2");
}

TEST_CASE("four-walk classes of K23 are the three squares") {
  Graph g = build_family(FamilySpec::k2t(3));
  auto walks = enumerate_closed_even_walks(g, 4);
  CHECK(walks.size() == 3);
}

TEST_CASE("every enumerated walk binomial lies in the toric ideal") {
  Graph g = build_family(FamilySpec::gt(2));
  auto ctx = edge_context(g);
  GroebnerBasis gb = toric_ideal(g, ctx);
  for (const Walk& w : enumerate_closed_even_walks(g, 8))
    CHECK(gb.contains(binomial_to_polynomial(ctx, walk_to_binomial(ctx, g, w))));
}

TEST_CASE("degenerate walk inputs are rejected") {
  Graph g = build_family(FamilySpec::cycle(4));
  auto ctx = edge_context(g);
  CHECK_THROWS_AS(walk_to_binomial(ctx, g, Walk{{0, 1, 2}}), ValidationError);   // odd
  CHECK_THROWS_AS(walk_to_binomial(ctx, g, Walk{{0, 0}}), ValidationError);     // zero binomial
  CHECK_THROWS_AS(walk_to_binomial(ctx, g, Walk{{0, 2, 0, 2}}), ValidationError);  // not a walk
}
