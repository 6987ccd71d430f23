#include "toricgraph/families.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "toricgraph/errors.hpp"

namespace toricgraph {

namespace {

std::string num(const std::string& stem, int i) { return stem + std::to_string(i); }

Graph build_k2t(int t) {
  if (t < 2) throw ValidationError("K2t requires t >= 2, got " + std::to_string(t));
  Graph g;
  g.add_vertex("x1");
  g.add_vertex("x2");
  for (int i = 1; i <= t; ++i) g.add_vertex(num("y", i));
  for (int i = 1; i <= t; ++i) g.add_edge(num("a", i), "x1", num("y", i));
  for (int i = 1; i <= t; ++i) g.add_edge(num("b", i), "x2", num("y", i));
  return g;
}

Graph build_gt(int t) {
  if (t < 2) throw ValidationError("Gt requires t >= 2, got " + std::to_string(t));
  Graph g;
  g.add_vertex("x1");
  g.add_vertex("x2");
  for (int i = 1; i <= t; ++i) g.add_vertex(num("y", i));
  g.add_vertex("z1");
  g.add_vertex("z2");
  g.add_vertex("w1");
  g.add_vertex("w2");
  // Edge declaration order fixes the default variable order:
  // a1..at > f1 > f2 > f3 > e1 > e2 > e3 > b1..bt.
  for (int i = 1; i <= t; ++i) g.add_edge(num("a", i), "x1", num("y", i));
  g.add_edge("f1", "x2", "w1");
  g.add_edge("f2", "w1", "w2");
  g.add_edge("f3", "w2", "x2");
  g.add_edge("e1", "x1", "z1");
  g.add_edge("e2", "z1", "z2");
  g.add_edge("e3", "z2", "x1");
  for (int i = 1; i <= t; ++i) g.add_edge(num("b", i), "x2", num("y", i));
  return g;
}

Graph build_c4r(int r) {
  if (r < 1) throw ValidationError("C4r requires r >= 1, got " + std::to_string(r));
  Graph g;
  for (int i = 1; i <= 2 * r + 2; ++i) g.add_vertex(num("x", i));
  g.add_edge("e0", "x1", "x2");
  for (int i = 1; i <= r; ++i) {
    g.add_edge(num("p", i), "x1", num("x", 2 * i + 1));
    g.add_edge(num("q", i), "x2", num("x", 2 * i + 2));
    g.add_edge(num("r", i), num("x", 2 * i + 1), num("x", 2 * i + 2));
  }
  return g;
}

Graph build_cycle(int n) {
  if (n < 3) throw ValidationError("Cycle requires n >= 3, got " + std::to_string(n));
  Graph g;
  for (int i = 1; i <= n; ++i) g.add_vertex(num("x", i));
  for (int i = 1; i < n; ++i) g.add_edge(num("e", i), num("x", i), num("x", i + 1));
  g.add_edge(num("e", n), num("x", n), "x1");
  return g;
}

Graph build_z() {
  Graph g;
  for (int i = 1; i <= 10; ++i) g.add_vertex(num("x", i));
  // Two triangles x1x2x3 and x4x5x6, both apexes joined to x7, x8, x9,
  // and a path x8 - x10 - x9.
  const std::pair<int, int> ends[15] = {
      {1, 2}, {1, 3}, {1, 7}, {1, 8}, {1, 9}, {4, 5}, {4, 6}, {4, 7},
      {4, 8}, {4, 9}, {2, 3}, {5, 6}, {7, 8}, {8, 10}, {9, 10}};
  for (int i = 0; i < 15; ++i)
    g.add_edge(num("e", i + 1), num("x", ends[i].first), num("x", ends[i].second));
  return g;
}

// Gluing generation already used in g: highest "#k" suffix over all names.
int max_generation(const Graph& g) {
  int best = 0;
  auto scan = [&best](const std::string& name) {
    auto pos = name.rfind('#');
    if (pos == std::string::npos || pos + 1 == name.size()) return;
    int value = 0;
    for (size_t i = pos + 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return;
      value = value * 10 + (name[i] - '0');
    }
    if (value > best) best = value;
  };
  for (const auto& v : g.vertices()) scan(v);
  for (const auto& e : g.edges()) scan(e.name);
  return best;
}

}  // namespace

std::string FamilySpec::id() const {
  switch (kind) {
    case Kind::K2t:
      return "K2t(" + std::to_string(parameter) + ")";
    case Kind::Gt:
      return "Gt(" + std::to_string(parameter) + ")";
    case Kind::C4r:
      return "C4r(" + std::to_string(parameter) + ")";
    case Kind::Cycle:
      return "Cycle(" + std::to_string(parameter) + ")";
    case Kind::Z:
      return "Z";
  }
  throw ValidationError("unknown family kind");
}

Graph build_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::K2t:
      return build_k2t(spec.parameter);
    case FamilySpec::Kind::Gt:
      return build_gt(spec.parameter);
    case FamilySpec::Kind::C4r:
      return build_c4r(spec.parameter);
    case FamilySpec::Kind::Cycle:
      return build_cycle(spec.parameter);
    case FamilySpec::Kind::Z:
      return build_z();
  }
  throw ValidationError("unknown family kind");
}

Graph glue_along_edge(const Graph& g1, const Graph& g2, const std::string& e1,
                      const std::string& e2, bool flip) {
  int i1 = g1.edge_index(e1);
  if (i1 < 0) throw ValidationError("glue: edge '" + e1 + "' not in first graph");
  int i2 = g2.edge_index(e2);
  if (i2 < 0) throw ValidationError("glue: edge '" + e2 + "' not in second graph");
  const Graph::Edge& host = g1.edges()[static_cast<size_t>(i1)];
  const Graph::Edge& guest = g2.edges()[static_cast<size_t>(i2)];
  const std::string host_u = g1.vertices()[static_cast<size_t>(host.u)];
  const std::string host_v = g1.vertices()[static_cast<size_t>(host.v)];

  int gen = max_generation(g1) + 1;
  std::string suffix = "#" + std::to_string(gen);

  std::unordered_set<std::string> used;
  for (const auto& v : g1.vertices()) used.insert(v);
  for (const auto& e : g1.edges()) used.insert(e.name);

  auto fresh = [&used, &suffix](const std::string& name) {
    std::string candidate = name + suffix;
    if (used.count(candidate))
      throw ValidationError("glue: name collision on '" + candidate + "'");
    used.insert(candidate);
    return candidate;
  };

  Graph out = g1;
  std::vector<std::string> vmap(g2.vertices().size());
  for (size_t v = 0; v < g2.vertices().size(); ++v) {
    const std::string& name = g2.vertices()[v];
    if (static_cast<int>(v) == guest.u)
      vmap[v] = flip ? host_v : host_u;
    else if (static_cast<int>(v) == guest.v)
      vmap[v] = flip ? host_u : host_v;
    else {
      vmap[v] = fresh(name);
      out.add_vertex(vmap[v]);
    }
  }
  for (const auto& e : g2.edges()) {
    if (e.name == guest.name) continue;  // identified with the host edge
    // add_edge rejects a parallel edge, which is exactly the failure mode here.
    out.add_edge(fresh(e.name), vmap[static_cast<size_t>(e.u)],
                 vmap[static_cast<size_t>(e.v)]);
  }
  return out;
}

namespace {

Monomial named_product(const PolynomialContext& ctx,
                       const std::vector<std::pair<std::string, int>>& factors) {
  std::vector<int> e(ctx.num_vars(), 0);
  for (const auto& f : factors) {
    int v = ctx.var_index(f.first);
    if (v < 0) throw ValidationError("edge variable not in ring: " + f.first);
    e[static_cast<size_t>(v)] += f.second;
  }
  return Monomial::from_exponents(std::move(e));
}



void sort_ascending(const PolynomialContext& ctx, std::vector<Monomial>& ms) {
  std::sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) {
    return ctx.order().less(a, b);
  });
}

}  // namespace

std::vector<Binomial> k2t_reference_basis(const ContextPtr& ctx, int t) {
  if (t < 2) throw ValidationError("K2t reference basis requires t >= 2");
  std::vector<Binomial> out;
  for (int i = 1; i <= t; ++i)
    for (int j = i + 1; j <= t; ++j)
      out.push_back(make_binomial(ctx, named_product(*ctx, {{num("a", i), 1}, {num("b", j), 1}}),
                                  named_product(*ctx, {{num("a", j), 1}, {num("b", i), 1}})));
  return out;
}

std::vector<Binomial> gt_reference_basis(const ContextPtr& ctx, int t) {
  if (t < 2) throw ValidationError("Gt reference basis requires t >= 2");
  std::vector<Binomial> out = k2t_reference_basis(ctx, t);
  auto scaffold = [&](std::vector<std::pair<std::string, int>> a_side,
                      std::vector<std::pair<std::string, int>> b_side) {
    a_side.insert(a_side.end(), {{"f1", 1}, {"f3", 1}, {"e2", 1}});
    b_side.insert(b_side.end(), {{"f2", 1}, {"e1", 1}, {"e3", 1}});
    out.push_back(make_binomial(ctx, named_product(*ctx, a_side),
                                named_product(*ctx, b_side)));
  };
  for (int i = 1; i <= t; ++i)
    for (int j = i + 1; j <= t; ++j)
      scaffold({{num("a", i), 1}, {num("a", j), 1}}, {{num("b", i), 1}, {num("b", j), 1}});
  for (int i = 1; i <= t; ++i) scaffold({{num("a", i), 2}}, {{num("b", i), 2}});
  return out;
}

std::vector<Monomial> k2t_reference_lead_order(const ContextPtr& ctx, int t) {
  std::vector<Monomial> leads;
  for (const auto& b : k2t_reference_basis(ctx, t)) leads.push_back(b.lead);
  sort_ascending(*ctx, leads);
  return leads;
}

std::vector<Monomial> gt_reference_lead_order(const ContextPtr& ctx, int t) {
  std::vector<Binomial> basis = gt_reference_basis(ctx, t);
  size_t minors = static_cast<size_t>(t) * (t - 1) / 2;
  std::vector<Monomial> b1, b2, b3;
  for (size_t k = 0; k < basis.size(); ++k) {
    Monomial m = basis[k].lead;
    (k < minors ? b1 : k < 2 * minors ? b2 : b3).push_back(m);
  }
  sort_ascending(*ctx, b1);
  sort_ascending(*ctx, b2);
  sort_ascending(*ctx, b3);
  std::vector<Monomial> out = std::move(b1);
  out.insert(out.end(), b2.begin(), b2.end());
  out.insert(out.end(), b3.begin(), b3.end());
  return out;
}

Graph build_table_graph(int r, int d) {
  if (r > d) throw ValidationError("table graph requires r <= d");
  if (r == d) return build_c4r(r);
  if (r < 4)
    throw ValidationError("table graph with r < d requires r >= 4");
  int q = d - r + 1;  // q >= 2 since d > r
  Graph g = build_gt(q);
  for (int k = 0; k < r - 4; ++k)
    g = glue_along_edge(g, build_cycle(4), "b1", "e1");
  return g;
}

}  // namespace toricgraph
