#pragma once

#include <cstddef>
#include <vector>

#include "toricgraph/rational.hpp"

namespace toricgraph {

// Dense matrix stored row-major; rows may be ragged only if empty.
template <typename T>
struct DenseMatrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<T> a;  // rows * cols

  DenseMatrix() = default;
  DenseMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  T& at(size_t r, size_t c) { return a[r * cols + c]; }
  const T& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

// Exact rank over the rationals (Gaussian elimination, first-nonzero pivot).
size_t rank_rational(DenseMatrix<Rational> m);

// Rank over F_p, p = Fp::P.  Coincides with the rational rank unless p
// divides a pivot minor, so a standalone result is probabilistic.
size_t rank_mod_p(DenseMatrix<Fp> m);

}  // namespace toricgraph
