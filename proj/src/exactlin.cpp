#include "lineconf/exactlin.hpp"

#include <string>

#include "lineconf/errors.hpp"

namespace lineconf {

std::size_t monomialCount(int t) {
  if (t < 0) return 0;
  const auto n = static_cast<std::size_t>(t);
  return (n + 1) * (n + 2) / 2;
}

std::size_t monomialIndex(const Exponent& e) {
  // Monomials with a larger x-exponent come first: there are s(s+1)/2 of
  // them where s = t - i; inside the block y descends from s to 0.
  const auto s = static_cast<std::size_t>(e[1] + e[2]);
  return s * (s + 1) / 2 + static_cast<std::size_t>(e[2]);
}

MonomialBasis monomials(int t) {
  if (t < 0) throw UsageError("monomials: negative degree " + std::to_string(t));
  MonomialBasis b;
  b.degree = t;
  b.exponents.reserve(monomialCount(t));
  for (int i = t; i >= 0; --i) {
    for (int j = t - i; j >= 0; --j) b.exponents.push_back({i, j, t - i - j});
  }
  return b;
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw UsageError("QMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void QMatrix::appendRow(std::span<const Rational> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw UsageError("QMatrix::appendRow: length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::vector<Rational> QMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw UsageError("QMatrix::apply: length mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j] != 0 && (*this)(i, j) != 0) acc += (*this)(i, j) * v[j];
    }
    out[i] = acc;
  }
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw UsageError("QMatrix product: shape mismatch");
  QMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

namespace detail {

IntMatrix clearDenominators(const QMatrix& m) {
  IntMatrix out;
  out.rows = m.rows();
  out.cols = m.cols();
  out.a.resize(out.rows * out.cols);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (const Rational& v : m.row(i)) {
      if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    Integer content = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& v = m(i, j);
      if (v == 0) continue;
      Integer& x = out.at(i, j);
      mpz_divexact(x.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
      x *= v.get_num();
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    }
    if (content > 1) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Integer& x = out.at(i, j);
        if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
      }
    }
  }
  return out;
}

RrefResult toRref(const Echelon& e) {
  RrefResult out;
  out.rank = e.pivots.size();
  out.pivots = e.pivots;
  out.reduced = QMatrix(out.rank, e.m.cols);
  for (std::size_t i = 0; i < out.rank; ++i) {
    const Integer& pivot = e.m.at(i, e.pivots[i]);
    for (std::size_t j = 0; j < e.m.cols; ++j) {
      const Integer& v = e.m.at(i, j);
      if (v == 0) continue;
      Rational& q = out.reduced(i, j);
      q = Rational(v, pivot);
      q.canonicalize();
    }
  }
  return out;
}

}  // namespace detail

RrefResult rref(const QMatrix& m) {
  return detail::toRref(detail::eliminateParallel(detail::clearDenominators(m), true));
}

std::size_t rank(const QMatrix& m) {
  return detail::eliminateParallel(detail::clearDenominators(m), false).pivots.size();
}

Subspace::Subspace(std::size_t ambientDim) : ambient_(ambientDim), basis_(0, ambientDim) {}

Subspace Subspace::span(const QMatrix& generators) {
  Subspace s(generators.cols());
  if (generators.rows() == 0) return s;
  RrefResult r = rref(generators);
  s.basis_ = std::move(r.reduced);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace nullspace(const QMatrix& m) {
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> isPivot(n, false);
  for (std::size_t c : r.pivots) isPivot[c] = true;

  QMatrix gens(0, n);
  std::vector<Rational> v(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (isPivot[f]) continue;
    std::fill(v.begin(), v.end(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, f);
    gens.appendRow(v);
  }
  return Subspace::span(gens);
}

bool member(const Subspace& s, std::span<const Rational> v) {
  if (v.size() != s.ambientDim()) {
    throw UsageError("member: vector length " + std::to_string(v.size()) +
                     " does not match ambient dimension " + std::to_string(s.ambientDim()));
  }
  std::vector<Rational> w(v.begin(), v.end());
  const QMatrix& b = s.basis();
  const auto piv = s.pivots();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    const Rational f = w[piv[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b(i, j) != 0) w[j] -= f * b(i, j);
    }
  }
  for (const Rational& x : w) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace lineconf
