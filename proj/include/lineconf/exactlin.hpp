#pragma once

// Exact linear algebra over Q and graded monomial indexing.
//
// Rational and Integer are GMP types; every matrix operation here is exact.
// Elimination runs fraction-free on an integer copy of the matrix (rows are
// cleared of denominators and kept primitive), and only the final
// normalisation to reduced row-echelon form divides.

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace lineconf {

using Integer = mpz_class;
using Rational = mpq_class;

using Exponent = std::array<int, 3>;

/// Number of monomials of degree t in three variables, C(t+2, 2).
std::size_t monomialCount(int t);

/// Position of x^i y^j z^k inside the graded-lex basis of degree i+j+k.
std::size_t monomialIndex(const Exponent& e);

/// The degree-t monomials of k[x,y,z] in graded-lex order
/// (x^t, x^{t-1}y, x^{t-1}z, x^{t-2}y^2, ...).
struct MonomialBasis {
  int degree = 0;
  std::vector<Exponent> exponents;

  std::size_t size() const { return exponents.size(); }
  std::size_t indexOf(const Exponent& e) const { return monomialIndex(e); }
};

MonomialBasis monomials(int t);

/// Dense row-major matrix of rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  void appendRow(std::span<const Rational> values);

  /// Matrix-vector product.
  std::vector<Rational> apply(std::span<const Rational> v) const;

  bool operator==(const QMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);

struct RrefResult {
  QMatrix reduced;                  // nonzero rows only, pivots normalised to 1
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Canonical reduced row-echelon form (parallel fraction-free kernel).
RrefResult rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// A linear subspace of Q^n stored by its RREF basis, so equality of
/// subspaces is equality of the stored matrices.
class Subspace {
 public:
  explicit Subspace(std::size_t ambientDim = 0);

  /// Row span of `generators` (any spanning set, need not be independent).
  static Subspace span(const QMatrix& generators);

  std::size_t ambientDim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const QMatrix& basis() const { return basis_; }
  std::span<const std::size_t> pivots() const { return pivots_; }

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }

 private:
  std::size_t ambient_;
  QMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Right nullspace {v : M v = 0}.
Subspace nullspace(const QMatrix& m);

/// True iff v lies in the span of s. Throws UsageError on a length mismatch.
bool member(const Subspace& s, std::span<const Rational> v);

namespace detail {

// Integer matrix used by the fraction-free kernels.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> a;

  Integer& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Scales every row by the lcm of its denominators and divides out its content.
IntMatrix clearDenominators(const QMatrix& m);

struct Echelon {
  IntMatrix m;                      // first pivots.size() rows are the pivot rows
  std::vector<std::size_t> pivots;
};

// Fraction-free elimination, rows updated in parallel for each pivot.
// With `reduce` the entries above each pivot are cleared as well.
Echelon eliminateParallel(IntMatrix m, bool reduce);

// Same result computed one row at a time; kept as the reference for tests
// and the benchmark.
Echelon eliminateSerial(IntMatrix m, bool reduce);

RrefResult toRref(const Echelon& e);

}  // namespace detail

namespace reference {

// Textbook Gauss-Jordan over Q with first-nonzero pivoting. Slow; independent
// of the fraction-free kernel and used to cross-check it.
RrefResult rref(const QMatrix& m);

}  // namespace reference

}  // namespace lineconf
