#include "lineconf/exactlin.hpp"

#include <utility>

#include "elimination_common.hpp"

namespace lineconf::detail {

Echelon eliminateSerial(IntMatrix m, bool reduce) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    const std::size_t p = selectPivot(m, r, c);
    if (p == m.rows) continue;
    swapRows(m, p, r);
    normalisePivotRow(m, r, c);
    for (std::size_t i = reduce ? 0 : r + 1; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      eliminateRow(m, i, r, c, i < r ? 0 : c);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace lineconf::detail

namespace lineconf::reference {

RrefResult rref(const QMatrix& input) {
  QMatrix m = input;
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = QMatrix(r, m.cols());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.reduced(i, j) = m(i, j);
  }
  return out;
}

}  // namespace lineconf::reference
