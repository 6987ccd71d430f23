#include <algorithm>
#include <vector>

#include "doctest.h"
#include "toricgraph/families.hpp"
#include "toricgraph/invariants.hpp"
#include "toricgraph/linquo.hpp"
#include "toricgraph/taylor.hpp"
#include "toricgraph/toric.hpp"

using namespace toricgraph;

namespace {

std::vector<int> colon_sizes(const LinearQuotientCertificate& cert) {
  std::vector<int> out;
  for (const auto& vars : cert.colon_vars) out.push_back(static_cast<int>(vars.size()));
  return out;
}

}  // namespace

TEST_CASE("K23 minors in ascending order have colon sizes 0,1,1") {
  Graph g = build_family(FamilySpec::k2t(3));
  auto ctx = edge_context(g);
  auto outcome = check_linear_quotients(ctx, k2t_reference_lead_order(ctx, 3));
  auto* cert = std::get_if<LinearQuotientCertificate>(&outcome);
  REQUIRE(cert != nullptr);
  CHECK(colon_sizes(*cert) == std::vector<int>{0, 1, 1});
  CHECK(cert->max_colon_size() == 1);
}

TEST_CASE("K23 minors reversed still admit linear quotients") {
  Graph g = build_family(FamilySpec::k2t(3));
  auto ctx = edge_context(g);
  auto order = k2t_reference_lead_order(ctx, 3);
  std::reverse(order.begin(), order.end());
  auto outcome = check_linear_quotients(ctx, order);
  auto* cert = std::get_if<LinearQuotientCertificate>(&outcome);
  REQUIRE(cert != nullptr);
  CHECK(colon_sizes(*cert) == std::vector<int>{0, 1, 1});
}

TEST_CASE("K24 colon sizes drive the Betti numbers") {
  Graph g = build_family(FamilySpec::k2t(4));
  auto ctx = edge_context(g);
  auto outcome = check_linear_quotients(ctx, k2t_reference_lead_order(ctx, 4));
  auto* cert = std::get_if<LinearQuotientCertificate>(&outcome);
  REQUIRE(cert != nullptr);
  CHECK(colon_sizes(*cert) == std::vector<int>{0, 1, 1, 2, 2, 2});

  BettiTable t = betti_from_linear_quotients(*cert);
  CHECK(t.value(1, 2) == 6);
  CHECK(t.value(2, 3) == 8);
  CHECK(t.value(3, 4) == 3);
  CHECK(t.pdim() == 3);
  CHECK(t.reg() == 1);

  // The Taylor ranks agree entrywise.
  MonomialIdeal ideal = initial_ideal(toric_ideal(g, ctx));
  CHECK(t.values_equal(betti_taylor(ideal)));
}

TEST_CASE("a generator order without linear quotients is detected") {
  auto ctx = make_grevlex_context({"x", "y", "z"});
  // <x^2, z^2> first: the colon at z^2 is <x^2>, not variable-generated.
  std::vector<Monomial> order = {ctx->parse_monomial("x^2"), ctx->parse_monomial("z^2")};
  auto outcome = check_linear_quotients(ctx, order);
  auto* fail = std::get_if<LinearQuotientFailure>(&outcome);
  REQUIRE(fail != nullptr);
  CHECK(fail->position == 1);
  CHECK(ctx->monomial_str(fail->offending) == "x^2");
}

TEST_CASE("the search finds an ordering when one exists") {
  auto ctx = make_grevlex_context({"x", "y"});
  MonomialIdeal ideal = MonomialIdeal::from_generators(
      ctx, {ctx->parse_monomial("x^2"), ctx->parse_monomial("x*y"), ctx->parse_monomial("y^2")});
  auto cert = find_linear_quotients(ideal);
  REQUIRE(cert.has_value());
  CHECK(cert->order.size() == 3);
  BettiTable t = betti_from_linear_quotients(*cert);
  CHECK(t.values_equal(betti_taylor(ideal)));
}

TEST_CASE("the two-triangle reference listing passes with max colon 2t-2") {
  for (int t : {2, 3, 4}) {
    Graph g = build_family(FamilySpec::gt(t));
    auto ctx = edge_context(g, gt_family_order(g));
    auto outcome = check_linear_quotients(ctx, gt_reference_lead_order(ctx, t));
    auto* cert = std::get_if<LinearQuotientCertificate>(&outcome);
    REQUIRE(cert != nullptr);
    CHECK(cert->max_colon_size() == 2 * t - 2);
  }
}

TEST_CASE("binomial coefficients used by the quotient formula") {
  CHECK(binomial_coefficient(5, 2) == 10);
  CHECK(binomial_coefficient(4, 0) == 1);
  CHECK(binomial_coefficient(3, 5) == 0);
}
