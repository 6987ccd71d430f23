#include "toricgraph/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "toricgraph/errors.hpp"

namespace toricgraph {

Monomial Monomial::from_exponents(std::vector<int> exps) {
  Monomial m;
  m.deg_ = 0;
  for (int x : exps) {
    if (x < 0) throw ValidationError("monomial exponent must be >= 0");
    m.deg_ += x;
  }
  m.e_ = std::move(exps);
  return m;
}

Monomial Monomial::variable(size_t num_vars, int var, int power) {
  if (var < 0 || static_cast<size_t>(var) >= num_vars)
    throw ValidationError("variable index out of range");
  if (power < 0) throw ValidationError("monomial exponent must be >= 0");
  Monomial m(num_vars);
  m.e_[static_cast<size_t>(var)] = power;
  m.deg_ = power;
  return m;
}

bool Monomial::is_variable() const {
  return deg_ == 1;  // one exponent equal to 1, the rest zero
}

int Monomial::support_size() const {
  int s = 0;
  for (int x : e_)
    if (x > 0) ++s;
  return s;
}

namespace {
void check_same_size(const Monomial& a, const Monomial& b, const char* op) {
  if (a.num_vars() != b.num_vars())
    throw ContextMismatchError(std::string(op) + ": variable counts differ");
}
}  // namespace

Monomial Monomial::operator*(const Monomial& o) const {
  check_same_size(*this, o, "monomial product");
  Monomial r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  r.deg_ += o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  check_same_size(*this, o, "divides");
  if (deg_ > o.deg_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_by(const Monomial& d) const {
  check_same_size(*this, d, "quotient");
  Monomial r = *this;
  for (size_t i = 0; i < e_.size(); ++i) {
    r.e_[i] -= d.e_[i];
    if (r.e_[i] < 0) throw ValidationError("quotient_by: not divisible");
  }
  r.deg_ -= d.deg_;
  return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
  check_same_size(*this, o, "coprime");
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0 && o.e_[i] > 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  check_same_size(a, b, "lcm");
  std::vector<int> e(a.e_.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
  return from_exponents(std::move(e));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  check_same_size(a, b, "gcd");
  std::vector<int> e(a.e_.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.e_[i], b.e_[i]);
  return from_exponents(std::move(e));
}

MonomialOrder::MonomialOrder(std::vector<int> priority, int split)
    : priority_(std::move(priority)), split_(split) {
  const size_t n = priority_.size();
  std::vector<char> seen(n, 0);
  for (int v : priority_) {
    if (v < 0 || static_cast<size_t>(v) >= n || seen[static_cast<size_t>(v)])
      throw ValidationError("order priority is not a permutation");
    seen[static_cast<size_t>(v)] = 1;
  }
  if (split_ < 0 || static_cast<size_t>(split_) > n)
    throw ValidationError("order block size out of range");
}

MonomialOrder MonomialOrder::grevlex(std::vector<int> priority) {
  return MonomialOrder(std::move(priority), 0);
}

MonomialOrder MonomialOrder::block_grevlex(std::vector<int> priority, int first_block_size) {
  return MonomialOrder(std::move(priority), first_block_size);
}

Ordering MonomialOrder::compare_range(const Monomial& a, const Monomial& b,
                                      int lo, int hi) const {
  long dega = 0, degb = 0;
  for (int r = lo; r < hi; ++r) {
    dega += a.exponent(priority_[static_cast<size_t>(r)]);
    degb += b.exponent(priority_[static_cast<size_t>(r)]);
  }
  if (dega != degb) return dega > degb ? Ordering::GT : Ordering::LT;
  // Degree tie: scan from the lowest-priority variable upward; at the first
  // difference the smaller exponent wins.
  for (int r = hi - 1; r >= lo; --r) {
    const int v = priority_[static_cast<size_t>(r)];
    const int d = a.exponent(v) - b.exponent(v);
    if (d != 0) return d < 0 ? Ordering::GT : Ordering::LT;
  }
  return Ordering::EQ;
}

Ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.num_vars() != priority_.size() || b.num_vars() != priority_.size())
    throw ContextMismatchError("order compare: variable counts differ");
  const int n = static_cast<int>(priority_.size());
  if (split_ > 0) {
    Ordering first = compare_range(a, b, 0, split_);
    if (first != Ordering::EQ) return first;
    return compare_range(a, b, split_, n);
  }
  return compare_range(a, b, 0, n);
}

std::string MonomialOrder::describe() const {
  std::ostringstream out;
  out << (split_ > 0 ? "block-grevlex/" : "grevlex/");
  out << split_ << ":";
  for (size_t i = 0; i < priority_.size(); ++i) {
    if (i) out << ",";
    out << priority_[i];
  }
  return out.str();
}

}  // namespace toricgraph
