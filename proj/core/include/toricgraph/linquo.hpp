#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "toricgraph/betti.hpp"
#include "toricgraph/groebner.hpp"

namespace toricgraph {

// Witness that an ordering g_1, ..., g_m of the minimal generators has
// linear quotients: for every p, (g_1,...,g_{p-1}) : g_p is generated by the
// variables listed in colon_vars[p] (sorted, empty at p = 0).
struct LinearQuotientCertificate {
  ContextPtr ctx;
  std::vector<Monomial> order;
  std::vector<std::vector<int>> colon_vars;

  int max_colon_size() const;
};

struct LinearQuotientFailure {
  size_t position;      // first p where the colon is not variable-generated
  Monomial offending;   // a minimal colon generator of degree >= 2
};

using LinearQuotientOutcome =
    std::variant<LinearQuotientCertificate, LinearQuotientFailure>;

// Checks one candidate ordering (must enumerate the minimal generators).
LinearQuotientOutcome check_linear_quotients(const ContextPtr& ctx,
                                             const std::vector<Monomial>& ordered);

// Searches for an ordering with linear quotients: exhaustively (with prefix
// pruning) when the ideal has at most exhaustive_cap generators, greedily
// above that.  nullopt when the search fails; greedy failure does not prove
// absence.
std::optional<LinearQuotientCertificate> find_linear_quotients(
    const MonomialIdeal& ideal, size_t exhaustive_cap = 8);

// Betti numbers of R/I from a certificate: each generator of degree d with
// colon size n_p contributes binomial(n_p, i) to beta_{i+1, i+d}.
BettiTable betti_from_linear_quotients(const LinearQuotientCertificate& cert);

long long binomial_coefficient(int n, int k);

}  // namespace toricgraph
