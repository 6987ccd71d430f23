#include "toricgraph/rank.hpp"

namespace toricgraph {

size_t rank_rational(DenseMatrix<Rational> m) {
  size_t rank = 0;
  for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      for (size_t c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    const Rational inv = 1 / m.at(rank, col);
    for (size_t c = col; c < m.cols; ++c) m.at(rank, c) *= inv;
    for (size_t r = rank + 1; r < m.rows; ++r) {
      if (m.at(r, col) == 0) continue;
      const Rational f = m.at(r, col);
      for (size_t c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

size_t rank_mod_p(DenseMatrix<Fp> m) {
  size_t rank = 0;
  for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      for (size_t c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    const Fp inv = m.at(rank, col).inverse();
    for (size_t c = col; c < m.cols; ++c) m.at(rank, c) = m.at(rank, c) * inv;
    for (size_t r = rank + 1; r < m.rows; ++r) {
      if (m.at(r, col).is_zero()) continue;
      const Fp f = m.at(r, col);
      for (size_t c = col; c < m.cols; ++c)
        m.at(r, c) = m.at(r, c) - f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace toricgraph
