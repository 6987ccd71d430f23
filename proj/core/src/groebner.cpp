#include "toricgraph/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>
#include <unordered_set>
#include <utility>

#include "toricgraph/errors.hpp"

namespace toricgraph {

namespace {

struct PairEntry {
  int deg;      // degree of lcm(LM_i, LM_j); normal selection strategy
  size_t seq;   // FIFO tie-break
  int i, j;
};

struct PairLater {
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    return a.deg != b.deg ? a.deg > b.deg : a.seq > b.seq;
  }
};

uint64_t pair_key(int i, int j) {
  if (i > j) std::swap(i, j);
  return (static_cast<uint64_t>(static_cast<uint32_t>(i)) << 32) |
         static_cast<uint32_t>(j);
}

}  // namespace

GroebnerBasis::GroebnerBasis(ContextPtr ctx, std::vector<Polynomial> reduced)
    : ctx_(std::move(ctx)), gens_(std::move(reduced)) {
  const MonomialOrder& ord = ctx_->order();
  for (size_t i = 0; i < gens_.size(); ++i) {
    const Polynomial& g = gens_[i];
    if (g.is_zero()) throw ValidationError("zero generator in Groebner basis");
    if (!g.context()->same_variables(*ctx_))
      throw ContextMismatchError("Groebner basis generator from another ring");
    if (g.leading_coeff() != Rational(1))
      throw ValidationError("Groebner basis generators must be monic");
    if (i > 0 && !ord.less(gens_[i - 1].leading_monomial(), g.leading_monomial()))
      throw ValidationError("Groebner basis generators must ascend by leading monomial");
    for (size_t k = 0; k < gens_.size(); ++k)
      if (k != i && gens_[k].leading_monomial().divides(g.leading_monomial()))
        throw ValidationError("Groebner basis is not minimal");
  }
}

Polynomial GroebnerBasis::reduce(const Polynomial& f) const {
  return normal_form(f, std::span<const Polynomial>(gens_));
}

bool GroebnerBasis::contains(const Polynomial& f) const {
  return reduce(f).is_zero();
}

std::vector<Binomial> GroebnerBasis::binomial_generators() const {
  std::vector<Binomial> out;
  out.reserve(gens_.size());
  for (const Polynomial& g : gens_) {
    if (g.num_terms() != 2 || g.terms()[1].second != Rational(-1))
      throw ValidationError("generator is not a difference of monomials: " + g.str());
    out.push_back(Binomial{g.terms()[0].first, g.terms()[1].first});
  }
  return out;
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
  if (!ctx_->same_variables(*o.ctx_) || !(ctx_->order() == o.ctx_->order()))
    return false;
  return gens_ == o.gens_;
}

GroebnerBasis buchberger(const ContextPtr& ctx, std::vector<Polynomial> gens,
                         const BuchbergerLimits& limits) {
  std::vector<Polynomial> basis;
  for (Polynomial& f : gens) {
    if (f.is_zero()) continue;
    if (!f.context()->same_variables(*ctx) || !(f.context()->order() == ctx->order()))
      f = f.reordered(ctx);
    basis.push_back(f.monic());
  }

  std::priority_queue<PairEntry, std::vector<PairEntry>, PairLater> queue;
  std::unordered_set<uint64_t> treated;
  size_t seq = 0, processed = 0;

  auto push_pairs_with = [&](int j) {
    for (int i = 0; i < j; ++i) {
      const int deg = Monomial::lcm(basis[static_cast<size_t>(i)].leading_monomial(),
                                    basis[static_cast<size_t>(j)].leading_monomial())
                          .degree();
      queue.push(PairEntry{deg, seq++, i, j});
    }
    if (queue.size() > limits.max_pairs)
      throw ResourceError("s-pair queue cap " + std::to_string(limits.max_pairs) +
                          " exceeded (queue holds " + std::to_string(queue.size()) + ")");
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs_with(static_cast<int>(j));

  while (!queue.empty()) {
    const PairEntry p = queue.top();
    queue.pop();
    if (++processed > limits.max_pairs)
      throw ResourceError("s-pair cap " + std::to_string(limits.max_pairs) + " exceeded");
    treated.insert(pair_key(p.i, p.j));

    const Monomial& lmi = basis[static_cast<size_t>(p.i)].leading_monomial();
    const Monomial& lmj = basis[static_cast<size_t>(p.j)].leading_monomial();
    if (lmi.coprime_with(lmj)) continue;

    // Chain criterion: some basis element's lead divides the pair lcm and
    // both side pairs were already treated.
    const Monomial lcm = Monomial::lcm(lmi, lmj);
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (static_cast<int>(k) == p.i || static_cast<int>(k) == p.j) continue;
      if (basis[k].leading_monomial().divides(lcm) &&
          treated.count(pair_key(p.i, static_cast<int>(k))) &&
          treated.count(pair_key(p.j, static_cast<int>(k))))
        skip = true;
    }
    if (skip) continue;

    const Polynomial s = s_polynomial(basis[static_cast<size_t>(p.i)],
                                      basis[static_cast<size_t>(p.j)]);
    const Polynomial h = normal_form(s, std::span<const Polynomial>(basis));
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    if (basis.size() > limits.max_basis)
      throw ResourceError("basis size cap " + std::to_string(limits.max_basis) +
                          " exceeded");
    push_pairs_with(static_cast<int>(basis.size()) - 1);
  }

  // Minimalize: ascending by lead, keep those with lead not divisible by an
  // already kept lead (a proper divisor is strictly smaller in any order).
  std::vector<size_t> by_lead(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) by_lead[i] = i;
  const MonomialOrder& ord = ctx->order();
  std::sort(by_lead.begin(), by_lead.end(), [&](size_t a, size_t b) {
    const Ordering c = ord.compare(basis[a].leading_monomial(), basis[b].leading_monomial());
    if (c != Ordering::EQ) return c == Ordering::LT;
    return a < b;
  });
  std::vector<Polynomial> minimal;
  for (size_t idx : by_lead) {
    bool redundant = false;
    for (const Polynomial& kept : minimal)
      if (kept.leading_monomial().divides(basis[idx].leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(basis[idx]);
  }

  // Tail-reduce each against the others; leads are untouched by reduction.
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    reduced.push_back(
        normal_form(minimal[i], std::span<const Polynomial>(others)).monic());
  }
  return GroebnerBasis(ctx, std::move(reduced));
}

bool is_groebner_basis(std::span<const Polynomial> gens) {
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i].leading_monomial().coprime_with(gens[j].leading_monomial()))
        continue;
      if (!normal_form(s_polynomial(gens[i], gens[j]), gens).is_zero()) return false;
    }
  return true;
}

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!a.context()->same_variables(*b.context()))
    throw ContextMismatchError("ideal_equal: different variable sets");
  for (const Polynomial& g : b.generators())
    if (!a.contains(g.reordered(a.context()))) return false;
  for (const Polynomial& g : a.generators())
    if (!b.contains(g.reordered(b.context()))) return false;
  return true;
}

MonomialIdeal MonomialIdeal::from_generators(ContextPtr ctx, std::vector<Monomial> gens) {
  const MonomialOrder& ord = ctx->order();
  for (const Monomial& m : gens)
    if (m.num_vars() != ctx->num_vars())
      throw ContextMismatchError("monomial ideal generator from another ring");
  std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
    const Ordering c = ord.compare(a, b);
    if (c != Ordering::EQ) return c == Ordering::LT;
    return false;
  });
  std::vector<Monomial> minimal;
  for (const Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& kept : minimal)
      if (kept.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(m);
  }
  return MonomialIdeal(std::move(ctx), std::move(minimal));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::operator==(const MonomialIdeal& o) const {
  return ctx_->same_variables(*o.ctx_) && gens_ == o.gens_;
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> leads;
  leads.reserve(gb.size());
  for (const Polynomial& g : gb.generators()) leads.push_back(g.leading_monomial());
  return MonomialIdeal::from_generators(gb.context(), std::move(leads));
}

}  // namespace toricgraph
