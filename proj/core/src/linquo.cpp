#include "toricgraph/linquo.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "toricgraph/errors.hpp"

namespace toricgraph {

namespace {

// Minimal generators of (chosen) : m, i.e. the minimalized quotients
// lcm(g, m)/m.
std::vector<Monomial> colon_generators(const std::vector<Monomial>& chosen,
                                       const Monomial& m) {
  std::vector<Monomial> quots;
  quots.reserve(chosen.size());
  for (const Monomial& g : chosen) quots.push_back(Monomial::lcm(g, m).quotient_by(m));
  std::sort(quots.begin(), quots.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  });
  std::vector<Monomial> minimal;
  for (const Monomial& q : quots) {
    bool redundant = false;
    for (const Monomial& kept : minimal)
      if (kept.divides(q)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(q);
  }
  return minimal;
}

bool all_variables(const std::vector<Monomial>& gens) {
  return std::all_of(gens.begin(), gens.end(),
                     [](const Monomial& m) { return m.is_variable(); });
}

std::vector<int> variable_indices(const std::vector<Monomial>& vars) {
  std::vector<int> out;
  out.reserve(vars.size());
  for (const Monomial& v : vars)
    for (size_t i = 0; i < v.num_vars(); ++i)
      if (v.exponent(static_cast<int>(i)) > 0) out.push_back(static_cast<int>(i));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int LinearQuotientCertificate::max_colon_size() const {
  int best = 0;
  for (const auto& vars : colon_vars) best = std::max(best, static_cast<int>(vars.size()));
  return best;
}

LinearQuotientOutcome check_linear_quotients(const ContextPtr& ctx,
                                             const std::vector<Monomial>& ordered) {
  for (const Monomial& m : ordered)
    if (m.num_vars() != ctx->num_vars())
      throw ContextMismatchError("generator not over the given ring");

  LinearQuotientCertificate cert;
  cert.ctx = ctx;
  cert.order = ordered;
  cert.colon_vars.resize(ordered.size());
  std::vector<Monomial> chosen;
  for (size_t p = 0; p < ordered.size(); ++p) {
    std::vector<Monomial> colon = colon_generators(chosen, ordered[p]);
    for (const Monomial& q : colon)
      if (!q.is_variable()) return LinearQuotientFailure{p, q};
    cert.colon_vars[p] = variable_indices(colon);
    chosen.push_back(ordered[p]);
  }
  return cert;
}

std::optional<LinearQuotientCertificate> find_linear_quotients(
    const MonomialIdeal& ideal, size_t exhaustive_cap) {
  const std::vector<Monomial>& gens = ideal.min_gens();
  const size_t m = gens.size();

  auto admissible = [&](const std::vector<Monomial>& chosen, const Monomial& cand) {
    return all_variables(colon_generators(chosen, cand));
  };

  std::vector<Monomial> order;
  order.reserve(m);
  if (m <= exhaustive_cap) {
    std::vector<char> used(m, 0);
    auto dfs = [&](auto&& self) -> bool {
      if (order.size() == m) return true;
      for (size_t i = 0; i < m; ++i) {
        if (used[i] || !admissible(order, gens[i])) continue;
        used[i] = 1;
        order.push_back(gens[i]);
        if (self(self)) return true;
        order.pop_back();
        used[i] = 0;
      }
      return false;
    };
    if (!dfs(dfs)) return std::nullopt;
  } else {
    std::vector<char> used(m, 0);
    for (size_t step = 0; step < m; ++step) {
      bool placed = false;
      for (size_t i = 0; i < m && !placed; ++i) {
        if (used[i] || !admissible(order, gens[i])) continue;
        used[i] = 1;
        order.push_back(gens[i]);
        placed = true;
      }
      if (!placed) return std::nullopt;  // greedy dead end; not a disproof
    }
  }

  LinearQuotientOutcome outcome = check_linear_quotients(ideal.context(), order);
  if (!std::holds_alternative<LinearQuotientCertificate>(outcome))
    throw IntegrityError("search produced an order that fails verification");
  return std::get<LinearQuotientCertificate>(std::move(outcome));
}

long long binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (n < 0 || n > 62) throw ValidationError("binomial coefficient out of range");
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BettiTable betti_from_linear_quotients(const LinearQuotientCertificate& cert) {
  BettiTable t;
  t.set(0, 0, 1, BettiProvenance::Formula);
  for (size_t p = 0; p < cert.order.size(); ++p) {
    const int d = cert.order[p].degree();
    const int np = static_cast<int>(cert.colon_vars[p].size());
    for (int i = 0; i <= np; ++i)
      t.add(i + 1, i + d, binomial_coefficient(np, i), BettiProvenance::Formula);
  }
  return t;
}

}  // namespace toricgraph
