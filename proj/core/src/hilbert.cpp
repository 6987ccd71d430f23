#include "toricgraph/hilbert.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "toricgraph/errors.hpp"

namespace toricgraph {

namespace {

// Drops generators divisible by another one; the recursion keeps lists
// small, so the quadratic scan is fine.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  });
  std::vector<Monomial> out;
  for (const Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& kept : out)
      if (kept.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

struct NumeratorWork {
  size_t num_vars;
  size_t nodes = 0;
  size_t max_nodes;

  // Numerator of R/<gens> over (1-x)^n; gens minimal.
  ZPoly run(const std::vector<Monomial>& gens) {
    if (++nodes > max_nodes)
      throw ResourceError("hilbert recursion cap " + std::to_string(max_nodes) +
                          " exceeded");
    if (gens.empty()) return ZPoly::one();
    if (gens.front().is_one()) return ZPoly();  // unit ideal, R/I = 0

    // Pairwise coprime generators split as a tensor product.
    bool coprime = true;
    for (size_t i = 0; i < gens.size() && coprime; ++i)
      for (size_t j = i + 1; j < gens.size() && coprime; ++j)
        if (!gens[i].coprime_with(gens[j])) coprime = false;
    if (coprime) {
      ZPoly acc = ZPoly::one();
      for (const Monomial& m : gens)
        acc = acc * (ZPoly::one() - ZPoly::monomial(m.degree()));
      return acc;
    }

    // Pivot on the most shared variable:  N(I) = N(I + <v>) + x * N(I : v).
    std::vector<int> count(num_vars, 0);
    for (const Monomial& m : gens)
      for (size_t v = 0; v < num_vars; ++v)
        if (m.exponent(static_cast<int>(v)) > 0) ++count[v];
    size_t pivot = 0;
    for (size_t v = 1; v < num_vars; ++v)
      if (count[v] > count[pivot]) pivot = v;

    std::vector<Monomial> plus;  // I + <pivot>
    plus.push_back(Monomial::variable(num_vars, static_cast<int>(pivot)));
    std::vector<Monomial> colon;  // I : pivot
    const Monomial pv = Monomial::variable(num_vars, static_cast<int>(pivot));
    for (const Monomial& m : gens) {
      if (m.exponent(static_cast<int>(pivot)) == 0) plus.push_back(m);
      colon.push_back(pv.divides(m) ? m.quotient_by(pv) : m);
    }
    return run(minimalize(std::move(plus))) +
           ZPoly::monomial(1) * run(minimalize(std::move(colon)));
  }
};

}  // namespace

ZPoly hilbert_numerator(const MonomialIdeal& ideal, const HilbertLimits& limits) {
  NumeratorWork work{ideal.context()->num_vars(), 0, limits.max_nodes};
  return work.run(ideal.min_gens());
}

HilbertData hilbert_series(const MonomialIdeal& ideal, const HilbertLimits& limits) {
  HilbertData data;
  data.num_vars = static_cast<int>(ideal.context()->num_vars());
  data.numerator = hilbert_numerator(ideal, limits);
  if (data.numerator.is_zero())
    throw ValidationError("unit ideal has no h-polynomial");
  const int mult = data.numerator.multiplicity_at_one();
  data.krull_dim = data.num_vars - mult;
  data.h = data.numerator.divide_by_one_minus_x(mult);
  if (data.h.eval(Integer(1)) == 0)
    throw IntegrityError("h-polynomial vanishes at 1 after deflation");
  return data;
}

}  // namespace toricgraph
