#include "toricgraph/zpoly.hpp"

#include <sstream>

#include "toricgraph/errors.hpp"

namespace toricgraph {

namespace {
const Integer kZero(0);
}

ZPoly ZPoly::monomial(int degree, Integer coeff) {
  if (coeff == 0) return ZPoly();
  std::vector<Integer> c(static_cast<size_t>(degree) + 1, Integer(0));
  c.back() = std::move(coeff);
  return ZPoly(std::move(c));
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& ZPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(k)];
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
  std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return ZPoly();
  std::vector<Integer> r(c_.size() + o.c_.size() - 1, Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return ZPoly(std::move(r));
}

Integer ZPoly::eval(const Integer& x) const {
  Integer acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

int ZPoly::multiplicity_at_one() const {
  if (is_zero()) throw ValidationError("multiplicity_at_one: zero polynomial");
  ZPoly p = *this;
  int mult = 0;
  while (p.eval(Integer(1)) == 0) {
    p = p.divide_by_one_minus_x(1);
    ++mult;
  }
  return mult;
}

ZPoly ZPoly::divide_by_one_minus_x(int k) const {
  ZPoly p = *this;
  for (int round = 0; round < k; ++round) {
    if (p.is_zero()) break;
    // p(x) = (1-x) q(x) with q_i = sum_{j<=i} p_j; remainder is p(1).
    if (p.eval(Integer(1)) != 0)
      throw ValidationError("divide_by_one_minus_x: not divisible");
    std::vector<Integer> q(p.c_.size() - 1, Integer(0));
    Integer run(0);
    for (size_t i = 0; i + 1 < p.c_.size(); ++i) {
      run += p.c_[i];
      q[i] = run;
    }
    p = ZPoly(std::move(q));
  }
  return p;
}

std::string ZPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Integer a = c_[i];
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    Integer mag = abs(a);
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) {
      out << "x";
      if (i >= 2) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

}  // namespace toricgraph
