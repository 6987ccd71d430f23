#include <random>
#include <vector>

#include "doctest.h"
#include "toricgraph/errors.hpp"
#include "toricgraph/polynomial.hpp"

using namespace toricgraph;

namespace {

ContextPtr xyz() { return make_grevlex_context({"x", "y", "z"}); }

Polynomial parse_sum(const ContextPtr& ctx, std::vector<std::pair<std::string, int>> terms) {
  std::vector<Polynomial::Term> t;
  for (auto& [m, c] : terms) t.push_back({ctx->parse_monomial(m), Rational(c)});
  return Polynomial::from_terms(ctx, std::move(t));
}

Polynomial random_poly(const ContextPtr& ctx, std::mt19937& rng, int max_terms) {
  std::uniform_int_distribution<int> nt(1, max_terms), e(0, 3), coef(-4, 4);
  std::vector<Polynomial::Term> terms;
  const size_t n = ctx->num_vars();
  for (int k = nt(rng); k > 0; --k) {
    std::vector<int> exps(n);
    for (auto& x : exps) x = e(rng);
    int c = coef(rng);
    if (c == 0) c = 1;
    terms.push_back({Monomial::from_exponents(exps), Rational(c)});
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

}  // namespace

TEST_CASE("terms are kept strictly descending and merged") {
  auto ctx = xyz();
  Polynomial f = parse_sum(ctx, {{"x*y", 1}, {"x^2", 2}, {"x*y", 3}, {"z^2", -1}});
  REQUIRE(f.num_terms() == 3);
  CHECK(ctx->monomial_str(f.leading_monomial()) == "x^2");
  for (size_t i = 0; i + 1 < f.terms().size(); ++i)
    CHECK(ctx->order().greater(f.terms()[i].first, f.terms()[i + 1].first));
  // Cancellation drops the term entirely.
  Polynomial g = parse_sum(ctx, {{"x*y", -4}, {"x^2", -2}});
  CHECK((f + g).num_terms() == 1);
}

TEST_CASE("normal form against a fixed basis: remainder terms are irreducible") {
  auto ctx = xyz();
  std::vector<Polynomial> basis = {
      parse_sum(ctx, {{"x^2", 1}, {"y*z", -1}}),
      parse_sum(ctx, {{"y^2", 1}, {"x*z", -1}}),
  };
  Polynomial f = parse_sum(ctx, {{"x^2*y^2", 1}, {"x", 1}});
  Polynomial r = normal_form(f, basis);
  for (const auto& [m, c] : r.terms())
    for (const Polynomial& b : basis)
      CHECK_FALSE(b.leading_monomial().divides(m));
}

TEST_CASE("normal form is idempotent on random inputs") {
  std::mt19937 rng(91521);
  auto ctx = xyz();
  for (int it = 0; it < 300; ++it) {
    std::vector<Polynomial> basis;
    std::uniform_int_distribution<int> nb(1, 3);
    for (int k = nb(rng); k > 0; --k) {
      Polynomial b = random_poly(ctx, rng, 2);
      if (!b.is_zero()) basis.push_back(b);
    }
    Polynomial f = random_poly(ctx, rng, 4);
    Polynomial r = normal_form(f, basis);
    CHECK(normal_form(r, basis) == r);
  }
}

TEST_CASE("s-polynomial cancels both leading terms") {
  auto ctx = xyz();
  Polynomial f = parse_sum(ctx, {{"x^2*y", 1}, {"z", 1}});
  Polynomial g = parse_sum(ctx, {{"x*y^2", 1}, {"x", -1}});
  Polynomial s = s_polynomial(f, g);
  CHECK(ctx->order().greater(Monomial::lcm(f.leading_monomial(), g.leading_monomial()),
                             s.leading_monomial()));
}

TEST_CASE("reordered rebuilds the term order under the new context") {
  auto ctx = xyz();
  auto rev = with_order(ctx, MonomialOrder::grevlex({2, 1, 0}));
  Polynomial f = parse_sum(ctx, {{"x^2", 1}, {"y*z", 5}, {"z^2", -2}});
  Polynomial g = f.reordered(rev);
  CHECK(g.num_terms() == f.num_terms());
  for (size_t i = 0; i + 1 < g.terms().size(); ++i)
    CHECK(rev->order().greater(g.terms()[i].first, g.terms()[i + 1].first));
  CHECK(g.reordered(ctx) == f);
}

TEST_CASE("binomial normalization orients lead above trail") {
  auto ctx = xyz();
  Binomial b = make_binomial(ctx, ctx->parse_monomial("y*z"), ctx->parse_monomial("x^2"));
  CHECK(ctx->monomial_str(b.lead) == "x^2");
  CHECK(ctx->monomial_str(b.trail) == "y*z");
  CHECK_THROWS_AS(make_binomial(ctx, ctx->parse_monomial("x"), ctx->parse_monomial("x")),
                  ValidationError);
}
