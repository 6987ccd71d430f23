#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "toricgraph/monomial.hpp"
#include "toricgraph/polynomial.hpp"

using namespace toricgraph;

namespace {

Monomial mono(std::vector<int> e) { return Monomial::from_exponents(std::move(e)); }

Monomial random_monomial(std::mt19937& rng, size_t n, int max_exp) {
  std::uniform_int_distribution<int> d(0, max_exp);
  std::vector<int> e(n);
  for (auto& x : e) x = d(rng);
  return mono(e);
}

}  // namespace

TEST_CASE("grevlex on three variables: the classic degree-2 chain") {
  // x > y > z, declaration order.
  MonomialOrder o = MonomialOrder::grevlex({0, 1, 2});
  const Monomial x2 = mono({2, 0, 0}), xy = mono({1, 1, 0}), y2 = mono({0, 2, 0});
  const Monomial xz = mono({1, 0, 1}), yz = mono({0, 1, 1}), z2 = mono({0, 0, 2});
  std::vector<Monomial> expected = {x2, xy, y2, xz, yz, z2};
  for (size_t i = 0; i < expected.size(); ++i)
    for (size_t j = i + 1; j < expected.size(); ++j)
      CHECK(o.greater(expected[i], expected[j]));
  // Degree dominates everything else.
  CHECK(o.greater(z2, mono({1, 0, 0})));
}

TEST_CASE("grevlex tie-break scans from the lowest-priority variable") {
  MonomialOrder o = MonomialOrder::grevlex({0, 1, 2, 3});
  // Same degree, first difference from the back decides: fewer of the
  // later variable wins.
  CHECK(o.greater(mono({1, 0, 1, 0}), mono({0, 1, 0, 1})));
  CHECK(o.greater(mono({0, 2, 0, 0}), mono({1, 0, 0, 1})));
  CHECK(o.compare(mono({1, 1, 0, 0}), mono({1, 1, 0, 0})) == Ordering::EQ);
}

TEST_CASE("block order puts any first-block content above the second block") {
  // Two variables in the first block, two in the second.
  MonomialOrder o = MonomialOrder::block_grevlex({0, 1, 2, 3}, 2);
  CHECK(o.greater(mono({1, 0, 0, 0}), mono({0, 0, 5, 5})));
  CHECK(o.greater(mono({0, 1, 2, 0}), mono({0, 0, 9, 9})));
  // Ties in the first block fall through to the second.
  CHECK(o.greater(mono({1, 0, 0, 2}), mono({1, 0, 1, 2})) ==
        MonomialOrder::grevlex({0, 1}).greater(mono({0, 2}), mono({1, 2})));
}

TEST_CASE("priority permutation changes the winner, not the axioms") {
  MonomialOrder fwd = MonomialOrder::grevlex({0, 1});
  MonomialOrder rev = MonomialOrder::grevlex({1, 0});
  const Monomial a = mono({1, 0}), b = mono({0, 1});
  CHECK(fwd.greater(a, b));
  CHECK(rev.greater(b, a));
}

TEST_CASE("order axioms hold on random monomials") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> nvars(2, 6);
  int checked = 0;
  for (int it = 0; it < 300; ++it) {
    const size_t n = static_cast<size_t>(nvars(rng));
    std::vector<int> prio(n);
    for (size_t k = 0; k < n; ++k) prio[k] = static_cast<int>(k);
    std::shuffle(prio.begin(), prio.end(), rng);
    MonomialOrder o = MonomialOrder::grevlex(prio);

    const Monomial a = random_monomial(rng, n, 4);
    const Monomial b = random_monomial(rng, n, 4);
    const Monomial c = random_monomial(rng, n, 4);

    // Trichotomy against equality.
    CHECK((o.compare(a, b) == Ordering::EQ) == (a == b));
    // Antisymmetry.
    if (o.greater(a, b)) CHECK_FALSE(o.greater(b, a));
    // Transitivity.
    if (o.greater(a, b) && o.greater(b, c)) CHECK(o.greater(a, c));
    // Multiplicative invariance.
    if (o.greater(a, b)) CHECK(o.greater(a * c, b * c));
    // Degree dominance.
    if (a.degree() > b.degree()) CHECK(o.greater(a, b));
    ++checked;
  }
  CHECK(checked == 300);
}

TEST_CASE("monomial arithmetic basics") {
  const Monomial m = mono({2, 1, 0}), d = mono({1, 1, 0});
  CHECK(d.divides(m));
  CHECK(m.quotient_by(d) == mono({1, 0, 0}));
  CHECK(Monomial::lcm(mono({2, 0, 1}), mono({0, 3, 1})) == mono({2, 3, 1}));
  CHECK(Monomial::gcd(mono({2, 0, 1}), mono({0, 3, 1})) == mono({0, 0, 1}));
  CHECK(mono({1, 0, 2}).coprime_with(mono({0, 3, 0})));
  CHECK_FALSE(mono({1, 0, 2}).coprime_with(mono({0, 3, 1})));
}
