#include "toricgraph/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "toricgraph/errors.hpp"

namespace toricgraph {

PolynomialContext::PolynomialContext(std::vector<std::string> names, MonomialOrder order)
    : names_(std::move(names)), order_(std::move(order)) {
  if (names_.empty()) throw ValidationError("context needs at least one variable");
  if (order_.num_vars() != names_.size())
    throw ValidationError("order size does not match variable count");
  for (const auto& n : names_) {
    if (n.empty()) throw ValidationError("empty variable name");
    for (char c : n)
      if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '^')
        throw ValidationError("variable name contains a reserved character: " + n);
  }
  for (size_t i = 0; i < names_.size(); ++i)
    for (size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw ValidationError("duplicate variable name: " + names_[i]);
}

int PolynomialContext::var_index(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

std::string PolynomialContext::monomial_str(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  // Print in priority order so the highest-ranked variables come first.
  for (int v : order_.priority()) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    if (!first) out << "*";
    out << names_[static_cast<size_t>(v)];
    if (e > 1) out << "^" << e;
    first = false;
  }
  return out.str();
}

Monomial PolynomialContext::parse_monomial(const std::string& text) const {
  std::vector<int> exps(names_.size(), 0);
  if (text == "1") return Monomial::from_exponents(std::move(exps));
  std::stringstream in(text);
  std::string factor;
  while (std::getline(in, factor, '*')) {
    std::string name = factor;
    int power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      name = factor.substr(0, caret);
      power = std::stoi(factor.substr(caret + 1));
    }
    const int v = var_index(name);
    if (v < 0) throw ValidationError("unknown variable in monomial: " + name);
    if (power < 0) throw ValidationError("negative exponent in monomial: " + factor);
    exps[static_cast<size_t>(v)] += power;
  }
  return Monomial::from_exponents(std::move(exps));
}

ContextPtr make_context(std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const PolynomialContext>(std::move(names), std::move(order));
}

ContextPtr make_grevlex_context(std::vector<std::string> names) {
  std::vector<int> priority(names.size());
  for (size_t i = 0; i < names.size(); ++i) priority[i] = static_cast<int>(i);
  return make_context(std::move(names), MonomialOrder::grevlex(std::move(priority)));
}

ContextPtr with_order(const ContextPtr& ctx, MonomialOrder order) {
  return make_context(ctx->variable_names(), std::move(order));
}

void check_same_context(const Polynomial& a, const Polynomial& b, const char* op) {
  if (a.context() == b.context()) return;
  if (a.context()->same_variables(*b.context()) &&
      a.context()->order() == b.context()->order())
    return;
  throw ContextMismatchError(std::string(op) + ": polynomial contexts differ");
}

Polynomial Polynomial::zero(ContextPtr ctx) { return Polynomial(std::move(ctx), {}); }

Polynomial Polynomial::from_monomial(ContextPtr ctx, Monomial m, Rational c) {
  if (m.num_vars() != ctx->num_vars())
    throw ContextMismatchError("monomial does not fit context");
  std::vector<Term> t;
  if (c != 0) t.emplace_back(std::move(m), std::move(c));
  return Polynomial(std::move(ctx), std::move(t));
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> unsorted) {
  const MonomialOrder& ord = ctx->order();
  for (const auto& [m, c] : unsorted)
    if (m.num_vars() != ctx->num_vars())
      throw ContextMismatchError("monomial does not fit context");
  std::sort(unsorted.begin(), unsorted.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.first, b.first); });
  std::vector<Term> merged;
  for (auto& t : unsorted) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  return Polynomial(std::move(ctx), std::move(merged));
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw ValidationError("leading monomial of zero");
  return terms_.front().first;
}

const Rational& Polynomial::leading_coeff() const {
  if (terms_.empty()) throw ValidationError("leading coefficient of zero");
  return terms_.front().second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_context(*this, o, "add");
  const MonomialOrder& ord = ctx_->order();
  std::vector<Term> r;
  r.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const Ordering c = ord.compare(terms_[i].first, o.terms_[j].first);
    if (c == Ordering::GT) {
      r.push_back(terms_[i++]);
    } else if (c == Ordering::LT) {
      r.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].second + o.terms_[j].second;
      if (s != 0) r.emplace_back(terms_[i].first, std::move(s));
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.push_back(o.terms_[j]);
  return Polynomial(ctx_, std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + o.scaled(Rational(-1));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return zero(ctx_);
  std::vector<Term> r = terms_;
  for (auto& t : r) t.second *= c;
  return Polynomial(ctx_, std::move(r));
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  if (c == 0) return zero(ctx_);
  std::vector<Term> r;
  r.reserve(terms_.size());
  // Multiplying by a fixed monomial preserves the term order.
  for (const auto& t : terms_) r.emplace_back(t.first * m, t.second * c);
  return Polynomial(ctx_, std::move(r));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(Rational(1) / terms_.front().second);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().first.degree();
  for (const auto& t : terms_)
    if (t.first.degree() != d) return false;
  return true;
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_same_context(*this, o, "equality");
  return terms_ == o.terms_;
}

Polynomial Polynomial::reordered(const ContextPtr& new_ctx) const {
  if (!ctx_->same_variables(*new_ctx))
    throw ContextMismatchError("reordered: variable sets differ");
  return from_terms(new_ctx, terms_);
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || m.is_one()) {
      out << mag.get_str();
      if (!m.is_one()) out << "*";
    }
    if (!m.is_one()) out << ctx_->monomial_str(m);
    first = false;
  }
  return out.str();
}

Binomial make_binomial(const ContextPtr& ctx, const Monomial& a, const Monomial& b) {
  if (a == b) throw ValidationError("binomial with equal monomials");
  const Ordering c = ctx->order().compare(a, b);
  if (c == Ordering::GT) return Binomial{a, b};
  return Binomial{b, a};
}

Polynomial binomial_to_polynomial(const ContextPtr& ctx, const Binomial& b) {
  return Polynomial::from_terms(
      ctx, {{b.lead, Rational(1)}, {b.trail, Rational(-1)}});
}

std::string binomial_str(const ContextPtr& ctx, const Binomial& b) {
  return ctx->monomial_str(b.lead) + " - " + ctx->monomial_str(b.trail);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  for (const auto& g : basis) {
    check_same_context(f, g, "normal_form");
    if (g.is_zero()) throw ValidationError("normal_form: zero divisor polynomial");
  }
  Polynomial p = f;
  std::vector<Polynomial::Term> done;  // irreducible terms, collected in order
  while (!p.is_zero()) {
    const Monomial& lm = p.leading_monomial();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(lm)) {
        const Monomial q = lm.quotient_by(g.leading_monomial());
        const Rational c = p.leading_coeff() / g.leading_coeff();
        p = p - g.times_monomial(q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      done.push_back(p.terms().front());
      // Every term left in p is strictly smaller than the parked one, so
      // dropping the lead keeps the invariant.
      std::vector<Polynomial::Term> rest(p.terms().begin() + 1, p.terms().end());
      p = Polynomial::from_terms(f.context(), std::move(rest));
    }
  }
  return Polynomial::from_terms(f.context(), std::move(done));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  check_same_context(f, g, "s_polynomial");
  if (f.is_zero() || g.is_zero()) throw ValidationError("s_polynomial of zero");
  const Monomial gamma = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  const Monomial uf = gamma.quotient_by(f.leading_monomial());
  const Monomial ug = gamma.quotient_by(g.leading_monomial());
  return f.times_monomial(uf, Rational(1) / f.leading_coeff()) -
         g.times_monomial(ug, Rational(1) / g.leading_coeff());
}

}  // namespace toricgraph
