#include "eqsym/linalg.hpp"

namespace eqsym {

ExtPolynomial SpanBuilder::reduce(ExtPolynomial p) const {
  if (p.vars() != n_) throw DimensionMismatch("row has the wrong variable count");
  while (!p.is_zero()) {
    const auto lead = *p.leading_term();
    auto it = pivots_.find(lead.first.mask());
    if (it == pivots_.end()) break;
    p -= lead.second * it->second;
  }
  return p;
}

bool SpanBuilder::insert(ExtPolynomial p) {
  p = reduce(std::move(p));
  if (p.is_zero()) return false;
  const auto lead = *p.leading_term();
  p *= Rational(1) / lead.second;
  pivots_.emplace(lead.first.mask(), std::move(p));
  return true;
}

bool SpanBuilder::contains(ExtPolynomial p) const { return reduce(std::move(p)).is_zero(); }

int row_reduce(RatMatrix& m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    const Rational inv = Rational(1) / m.at(rank, col);
    for (int c = col; c < m.cols; ++c) m.at(rank, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      const Rational factor = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= factor * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> nullspace(RatMatrix m) {
  const int rank = row_reduce(m);
  std::vector<int> pivot_col_of_row(static_cast<std::size_t>(rank), -1);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
  for (int r = 0, col = 0; r < rank; ++r) {
    while (col < m.cols && m.at(r, col) == 0) ++col;
    pivot_col_of_row[static_cast<std::size_t>(r)] = col;
    is_pivot[static_cast<std::size_t>(col)] = true;
  }
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(m.cols), Rational(0));
    v[static_cast<std::size_t>(free)] = 1;
    for (int r = 0; r < rank; ++r) {
      const int pc = pivot_col_of_row[static_cast<std::size_t>(r)];
      v[static_cast<std::size_t>(pc)] = -m.at(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace eqsym
