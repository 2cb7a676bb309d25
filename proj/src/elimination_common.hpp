#pragma once

// Row operations shared by the parallel and serial elimination kernels.

#include <cstddef>
#include <utility>

#include "lineconf/exactlin.hpp"

namespace lineconf::detail {

inline void makePrimitive(IntMatrix& m, std::size_t row, std::size_t from) {
  Integer content = 0;
  for (std::size_t j = from; j < m.cols; ++j) {
    const Integer& v = m.at(row, j);
    if (v != 0) {
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
      if (content == 1) return;
    }
  }
  if (content <= 1) return;
  for (std::size_t j = from; j < m.cols; ++j) {
    Integer& v = m.at(row, j);
    if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  }
}

inline void swapRows(IntMatrix& m, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r1, j), m.at(r2, j));
}

// row_i <- (p/g) row_i - (q/g) row_r, followed by removal of the row content.
// Row r vanishes left of column c; row i may not (rows above the pivot in
// the reducing pass), so scaling starts at `from`.
inline void eliminateRow(IntMatrix& m, std::size_t i, std::size_t r, std::size_t c, std::size_t from) {
  const Integer& pivot = m.at(r, c);
  Integer g;
  mpz_gcd(g.get_mpz_t(), pivot.get_mpz_t(), m.at(i, c).get_mpz_t());
  Integer fi, fr;
  mpz_divexact(fi.get_mpz_t(), pivot.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(fr.get_mpz_t(), m.at(i, c).get_mpz_t(), g.get_mpz_t());
  Integer tmp;
  for (std::size_t j = from; j < m.cols; ++j) {
    Integer& x = m.at(i, j);
    const Integer& y = m.at(r, j);
    if (x == 0 && y == 0) continue;
    mpz_mul(x.get_mpz_t(), x.get_mpz_t(), fi.get_mpz_t());
    if (y != 0) {
      mpz_mul(tmp.get_mpz_t(), y.get_mpz_t(), fr.get_mpz_t());
      mpz_sub(x.get_mpz_t(), x.get_mpz_t(), tmp.get_mpz_t());
    }
  }
  makePrimitive(m, i, from);
}

// Row in [r, rows) holding the smallest nonzero |entry| of column c, or
// m.rows when the column is zero there. Small pivots keep growth down.
inline std::size_t selectPivot(const IntMatrix& m, std::size_t r, std::size_t c) {
  std::size_t p = m.rows;
  for (std::size_t i = r; i < m.rows; ++i) {
    const Integer& v = m.at(i, c);
    if (v == 0) continue;
    if (p == m.rows || mpz_cmpabs(v.get_mpz_t(), m.at(p, c).get_mpz_t()) < 0) p = i;
  }
  return p;
}

inline void normalisePivotRow(IntMatrix& m, std::size_t r, std::size_t c) {
  makePrimitive(m, r, c);
  if (m.at(r, c) < 0) {
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
  }
}

}  // namespace lineconf::detail
