#include <set>

#include "doctest.h"
#include "toricgraph/errors.hpp"
#include "toricgraph/families.hpp"
#include "toricgraph/invariants.hpp"
#include "toricgraph/toric.hpp"

using namespace toricgraph;

TEST_CASE("family sizes and ids") {
  CHECK(FamilySpec::gt(3).id() == "Gt(3)");
  CHECK(FamilySpec::z().id() == "Z");

  Graph k = build_family(FamilySpec::k2t(5));
  CHECK(k.num_vertices() == 7);
  CHECK(k.num_edges() == 10);

  Graph g = build_family(FamilySpec::gt(4));
  CHECK(g.num_vertices() == 10);  // t + 6
  CHECK(g.num_edges() == 14);     // 2t + 6

  Graph c = build_family(FamilySpec::c4r(3));
  CHECK(c.num_vertices() == 8);   // 2r + 2
  CHECK(c.num_edges() == 10);     // 3r + 1

  Graph z = build_family(FamilySpec::z());
  CHECK(z.num_vertices() == 10);
  CHECK(z.num_edges() == 15);
  CHECK_FALSE(is_bipartite(z));
  CHECK(z.is_connected());

  CHECK_THROWS_AS(build_family(FamilySpec::k2t(1)), ValidationError);
  CHECK_THROWS_AS(build_family(FamilySpec::cycle(2)), ValidationError);
  CHECK_THROWS_AS(build_family(FamilySpec::c4r(0)), ValidationError);
}

TEST_CASE("edge declaration order of the two-triangle family") {
  Graph g = build_family(FamilySpec::gt(2));
  std::vector<std::string> names;
  for (const auto& e : g.edges()) names.push_back(e.name);
  CHECK(names == std::vector<std::string>{"a1", "a2", "f1", "f2", "f3", "e1", "e2", "e3",
                                          "b1", "b2"});
}

TEST_CASE("gluing identifies one edge and both its endpoints") {
  Graph host = build_family(FamilySpec::gt(2));
  Graph cyc = build_family(FamilySpec::cycle(4));
  Graph glued = glue_along_edge(host, cyc, "b1", "e1");
  CHECK(glued.num_vertices() == host.num_vertices() + cyc.num_vertices() - 2);
  CHECK(glued.num_edges() == host.num_edges() + cyc.num_edges() - 1);
  // Host names survive unchanged; the guest keeps its non-identified edges.
  CHECK(glued.edge_index("b1") >= 0);
  CHECK(glued.edge_index("a1") >= 0);
  std::set<std::string> names;
  for (const auto& e : glued.edges()) names.insert(e.name);
  CHECK(names.size() == glued.num_edges());

  CHECK_THROWS_AS(glue_along_edge(host, cyc, "nope", "e1"), ValidationError);
}

TEST_CASE("table graphs stretch the base family and then add squares") {
  // r = d is the shared-edge family itself.
  CHECK(build_table_graph(4, 4).num_edges() == build_family(FamilySpec::c4r(4)).num_edges());
  // r < d: two-triangle base with q = d - r + 1, plus r - 4 glued squares.
  Graph a = build_table_graph(4, 7);
  CHECK(a.num_edges() == 14);  // plain base, q = 4
  CHECK(a.edge_index("a4") >= 0);
  Graph b = build_table_graph(5, 7);
  CHECK(b.num_edges() == 15);  // q = 3 base and one square
  CHECK(b.edge_index("a3") >= 0);
  CHECK(b.edge_index("a4") < 0);
  CHECK_THROWS_AS(build_table_graph(3, 7), ValidationError);
  CHECK_THROWS_AS(build_table_graph(5, 4), ValidationError);
}

TEST_CASE("reference bases orient by the supplied context") {
  Graph g = build_family(FamilySpec::gt(2));
  auto ctx = edge_context(g, gt_family_order(g));
  auto basis = gt_reference_basis(ctx, 2);
  CHECK(basis.size() == 4);  // 1 minor + 1 mixed + 2 squares
  for (const Binomial& b : basis) CHECK(ctx->order().greater(b.lead, b.trail));
  auto leads = gt_reference_lead_order(ctx, 2);
  CHECK(leads.size() == 4);
  CHECK(ctx->monomial_str(leads[0]) == "a2*b1");
}
