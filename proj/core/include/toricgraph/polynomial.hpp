#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toricgraph/monomial.hpp"
#include "toricgraph/rational.hpp"

namespace toricgraph {

// Immutable ring description: variable names plus a monomial order.
// Shared by pointer; polynomials from different contexts never mix.
class PolynomialContext {
 public:
  PolynomialContext(std::vector<std::string> names, MonomialOrder order);

  size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::string& variable_name(int v) const { return names_[static_cast<size_t>(v)]; }
  const MonomialOrder& order() const { return order_; }
  int var_index(const std::string& name) const;  // -1 when absent

  bool same_variables(const PolynomialContext& o) const { return names_ == o.names_; }

  std::string monomial_str(const Monomial& m) const;
  Monomial parse_monomial(const std::string& text) const;

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using ContextPtr = std::shared_ptr<const PolynomialContext>;

ContextPtr make_context(std::vector<std::string> names, MonomialOrder order);
// Grevlex with priority = declaration order.
ContextPtr make_grevlex_context(std::vector<std::string> names);
// Same variables, different order.
ContextPtr with_order(const ContextPtr& ctx, MonomialOrder order);

// Terms kept strictly descending in the context order; no zero coefficients.
// The invariant makes leading_monomial O(1).
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  static Polynomial zero(ContextPtr ctx);
  static Polynomial from_monomial(ContextPtr ctx, Monomial m, Rational c = Rational(1));
  static Polynomial from_terms(ContextPtr ctx, std::vector<Term> unsorted);

  const ContextPtr& context() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c = Rational(1)) const;
  Polynomial monic() const;

  bool is_homogeneous() const;
  bool is_binomial() const { return terms_.size() == 2; }

  bool operator==(const Polynomial& o) const;

  // Rebuild under a context with the same variables but possibly another
  // order (terms get re-sorted).
  Polynomial reordered(const ContextPtr& new_ctx) const;

  std::string str() const;

 private:
  Polynomial(ContextPtr ctx, std::vector<Term> sorted)
      : ctx_(std::move(ctx)), terms_(std::move(sorted)) {}

  ContextPtr ctx_;
  std::vector<Term> terms_;
};

// Difference of two distinct monomials, normalized so that lead > trail in
// the order it was built under.
struct Binomial {
  Monomial lead;
  Monomial trail;

  bool operator==(const Binomial& o) const {
    return lead == o.lead && trail == o.trail;
  }
  // Sign-insensitive identity: {lead, trail} as an unordered pair.
  bool same_up_to_sign(const Binomial& o) const {
    return (lead == o.lead && trail == o.trail) ||
           (lead == o.trail && trail == o.lead);
  }
};

Binomial make_binomial(const ContextPtr& ctx, const Monomial& a, const Monomial& b);
Polynomial binomial_to_polynomial(const ContextPtr& ctx, const Binomial& b);
std::string binomial_str(const ContextPtr& ctx, const Binomial& b);

// Full normal form: divisors tried in list order, the leading monomial of
// the running remainder is reduced first; irreducible leading terms move to
// the result.  No monomial of the result is divisible by any basis lead.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

void check_same_context(const Polynomial& a, const Polynomial& b, const char* op);

}  // namespace toricgraph
