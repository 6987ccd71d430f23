#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toricgraph/polynomial.hpp"

namespace toricgraph {

struct BuchbergerLimits {
  size_t max_pairs = 1'000'000;  // s-pairs processed
  size_t max_basis = 10'000;     // intermediate basis size
};

// Reduced Groebner basis: monic generators, no leading monomial divides
// another, every tail monomial irreducible, sorted ascending by leading
// monomial.  That form is unique for (ideal, order), so equality of bases
// is equality of ideals under the same order.
class GroebnerBasis {
 public:
  GroebnerBasis(ContextPtr ctx, std::vector<Polynomial> reduced);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  size_t size() const { return gens_.size(); }
  bool is_zero_ideal() const { return gens_.empty(); }

  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;

  // All generators as binomials (lead - trail); throws ValidationError if
  // some generator is not a monic binomial.
  std::vector<Binomial> binomial_generators() const;

  bool operator==(const GroebnerBasis& o) const;

 private:
  ContextPtr ctx_;
  std::vector<Polynomial> gens_;
};

GroebnerBasis buchberger(const ContextPtr& ctx, std::vector<Polynomial> gens,
                         const BuchbergerLimits& limits = {});

// S-polynomial certificate: every S-pair reduces to zero against the list.
bool is_groebner_basis(std::span<const Polynomial> gens);

// Same ideal?  The bases may use different orders on the same variables.
bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b);

// Monomial ideal via its minimal generators (sorted ascending).
class MonomialIdeal {
 public:
  static MonomialIdeal from_generators(ContextPtr ctx, std::vector<Monomial> gens);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Monomial>& min_gens() const { return gens_; }
  size_t num_gens() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }

  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal& o) const;

 private:
  MonomialIdeal(ContextPtr ctx, std::vector<Monomial> gens)
      : ctx_(std::move(ctx)), gens_(std::move(gens)) {}

  ContextPtr ctx_;
  std::vector<Monomial> gens_;
};

MonomialIdeal initial_ideal(const GroebnerBasis& gb);

}  // namespace toricgraph
