#include <random>
#include <vector>

#include "doctest.h"
#include "toricgraph/families.hpp"
#include "toricgraph/hilbert.hpp"
#include "toricgraph/invariants.hpp"
#include "toricgraph/toric.hpp"
#include "toricgraph/zpoly.hpp"

using namespace toricgraph;

namespace {

MonomialIdeal ideal_of(const ContextPtr& ctx, std::vector<std::string> gens) {
  std::vector<Monomial> ms;
  for (const auto& s : gens) ms.push_back(ctx->parse_monomial(s));
  return MonomialIdeal::from_generators(ctx, std::move(ms));
}

}  // namespace

TEST_CASE("zpoly arithmetic and division by (1-x)^k") {
  ZPoly a({Integer(1), Integer(-2), Integer(1)});  // (1-x)^2
  CHECK(a.multiplicity_at_one() == 2);
  ZPoly q = a.divide_by_one_minus_x(2);
  CHECK(q == ZPoly::one());
  ZPoly p = ZPoly({Integer(1), Integer(3)}) * a;
  CHECK(p.divide_by_one_minus_x(2) == ZPoly({Integer(1), Integer(3)}));
  CHECK(p.eval(Integer(1)) == Integer(0));
}

TEST_CASE("hilbert series of textbook monomial ideals") {
  auto ctx = make_grevlex_context({"x", "y", "z"});
  {
    // One quadric: numerator 1 - x^2, dim 2, h = 1 + x.
    HilbertData h = hilbert_series(ideal_of(ctx, {"x^2"}));
    CHECK(h.numerator == ZPoly({Integer(1), Integer(0), Integer(-1)}));
    CHECK(h.krull_dim == 2);
    CHECK(h.h == ZPoly({Integer(1), Integer(1)}));
  }
  {
    // Full polynomial ring: numerator 1, dim = number of variables.
    HilbertData h = hilbert_series(ideal_of(ctx, {}));
    CHECK(h.numerator == ZPoly::one());
    CHECK(h.krull_dim == 3);
    CHECK(h.deg_h() == 0);
  }
  {
    // The irrelevant-power ideal <x,y,z>: artinian quotient.
    HilbertData h = hilbert_series(ideal_of(ctx, {"x", "y", "z"}));
    CHECK(h.krull_dim == 0);
    CHECK(h.h == ZPoly::one());
  }
}

TEST_CASE("h(1) is the multiplicity and never zero") {
  std::mt19937 rng(5150);
  auto ctx = make_grevlex_context({"x", "y", "z", "w"});
  std::uniform_int_distribution<int> e(0, 3), ng(1, 5);
  for (int it = 0; it < 200; ++it) {
    std::vector<Monomial> gens;
    for (int k = ng(rng); k > 0; --k) {
      std::vector<int> exps(4);
      for (auto& x : exps) x = e(rng);
      Monomial m = Monomial::from_exponents(exps);
      if (!m.is_one()) gens.push_back(m);
    }
    HilbertData h = hilbert_series(MonomialIdeal::from_generators(ctx, gens));
    CHECK(h.h.eval(Integer(1)) != Integer(0));
    CHECK(h.numerator.multiplicity_at_one() ==
          h.num_vars - h.krull_dim);
  }
}

TEST_CASE("frozen numerators of the small family graphs") {
  {
    Graph g = build_family(FamilySpec::gt(2));
    HilbertData h = hilbert_series(initial_ideal(toric_ideal(g, edge_context(g, gt_family_order(g)))));
    // 1 - x^2 - 3x^5 + 4x^6 - x^7 over (1-x)^10.
    CHECK(h.numerator == ZPoly({Integer(1), Integer(0), Integer(-1), Integer(0), Integer(0),
                                Integer(-3), Integer(4), Integer(-1)}));
    CHECK(h.krull_dim == 8);
    CHECK(h.deg_h() == 5);
  }
  {
    Graph g = build_family(FamilySpec::z());
    HilbertData h = hilbert_series(initial_ideal(toric_ideal(g)));
    CHECK(h.h == ZPoly({Integer(1), Integer(5), Integer(10), Integer(13), Integer(10)}));
    CHECK(h.krull_dim == 10);
  }
}

TEST_CASE("krull dimension equals the combinatorial count") {
  for (auto spec : {FamilySpec::k2t(4), FamilySpec::gt(3), FamilySpec::c4r(2),
                    FamilySpec::cycle(5), FamilySpec::cycle(6), FamilySpec::z()}) {
    Graph g = build_family(spec);
    HilbertData h = hilbert_series(initial_ideal(toric_ideal(g)));
    CHECK(h.krull_dim == dim_toric(g));
  }
}
