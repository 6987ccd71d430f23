#pragma once

#include <string>
#include <vector>

#include "toricgraph/rational.hpp"

namespace toricgraph {

// Dense univariate polynomial over the integers, coefficient of x^k at
// index k.  Normalized: no trailing zero coefficients (zero poly is empty).
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
  static ZPoly one() { return ZPoly({Integer(1)}); }
  static ZPoly monomial(int degree, Integer coeff = Integer(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Integer& coeff(int k) const;
  const std::vector<Integer>& coeffs() const { return c_; }

  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;
  bool operator==(const ZPoly& o) const { return c_ == o.c_; }

  Integer eval(const Integer& x) const;

  // Multiplicity of x = 1 as a root.
  int multiplicity_at_one() const;

  // Exact quotient by (1 - x)^k; requires divisibility.
  ZPoly divide_by_one_minus_x(int k) const;

  std::string str() const;  // human form, e.g. "1 - 3x^2 + 2x^3"

 private:
  void trim();
  std::vector<Integer> c_;
};

}  // namespace toricgraph
