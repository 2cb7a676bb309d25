#pragma once

// The graded module D0 of syzygies on the Jacobian ideal of an arrangement,
// computed degree by degree as exact nullspaces, and its minimal free
// resolution 0 -> (+) R(-beta_j) -> (+) R(-alpha_i) -> D0 -> 0.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "lineconf/arrangement.hpp"
#include "lineconf/exactlin.hpp"
#include "lineconf/poly.hpp"

namespace lineconf {

/// theta = a d/dx + b d/dy + c d/dz with a, b, c forms of a common degree.
struct PolyVec {
  int degree = 0;
  std::array<Poly, 3> comps;

  static PolyVec euler();
  /// Reads a vector of length 3*C(t+2,2) laid out as (a | b | c).
  static PolyVec fromCoordinates(int degree, std::span<const Rational> v);
  std::vector<Rational> coordinates() const;

  /// theta(f) = a f_x + b f_y + c f_z.
  Poly apply(const Poly& f) const;
  /// theta applied to the partials: a g0 + b g1 + c g2.
  Poly pair(const std::array<Poly, 3>& g) const;

  PolyVec operator*(const Poly& f) const;
  PolyVec operator-(const PolyVec& o) const;
  bool operator==(const PolyVec&) const = default;
};

struct JacobianData {
  Poly q;
  std::array<Poly, 3> partials;
};

/// Q and its partials, the partials built by the product rule.
JacobianData jacobian(const Arrangement& a);

struct GradedPiece {
  int degree = 0;
  Subspace space;  // inside (R_t)^3, ambient dimension 3 C(t+2,2)

  std::size_t dim() const { return space.dim(); }
  PolyVec element(std::size_t i) const;
};

/// Matrix of (a,b,c) -> a Q_x + b Q_y + c Q_z from (R_t)^3 to R_{t+d-1}.
QMatrix syzygyMatrix(const JacobianData& j, int t);

GradedPiece gradedPiece(const JacobianData& j, int t);
GradedPiece gradedPiece(const Arrangement& a, int t);

/// dim (D0)_t by a rank computation only.
std::size_t pieceDimension(const JacobianData& j, int t);

/// dim (D0)_t for 0 <= t <= maxDegree.
std::vector<std::size_t> hilbertTable(const Arrangement& a, int maxDegree);

struct Resolution {
  std::vector<int> alphas;  // generator degrees, ascending
  std::vector<int> betas;   // relation degrees, ascending
  int regularity = 0;
  std::vector<std::size_t> hilbert;  // dim (D0)_t for 0 <= t <= d

  bool isFree() const { return betas.empty(); }
};

/// Holds the graded pieces of D0 in degrees 0..d with their bases, and the
/// resolution derived from them. Every analysis of one arrangement reuses it.
class DerivationModule {
 public:
  /// Computes all pieces; the arrangement must have at least two lines.
  explicit DerivationModule(Arrangement a);

  const Arrangement& arrangement() const { return arr_; }
  int lineCount() const { return static_cast<int>(arr_.size()); }
  const JacobianData& jacobianData() const { return jac_; }
  std::int64_t jacobianDegree() const { return degJ_; }
  int maxMu() const { return maxMu_; }

  /// Graded piece of degree t, 0 <= t <= d.
  const GradedPiece& piece(int t) const;
  /// dim (D0)_t for any t >= 0; degrees above d come from the resolution.
  std::size_t dim(int t) const;

  const Resolution& resolution() const { return res_; }

 private:
  Arrangement arr_;
  JacobianData jac_;
  std::int64_t degJ_ = 0;
  int maxMu_ = 0;
  std::vector<GradedPiece> pieces_;
  Resolution res_;
};

/// Number of minimal generators in each degree 0..d: dim (D0)_t minus the
/// dimension of x,y,z times (D0)_{t-1}. Returned as an ascending multiset.
std::vector<int> generatorDegrees(const DerivationModule& m);

/// Relation degrees from the Hilbert function: sum t^beta = sum t^alpha -
/// H(t)(1-t)^3 truncated at the last tabulated degree. Throws
/// InvariantViolation if the right side has a negative coefficient.
std::vector<int> relationDegrees(std::span<const int> alphas, std::span<const std::size_t> hilbert);

/// max(max alpha, max beta - 1), the beta term omitted when there are none.
int resolutionRegularity(std::span<const int> alphas, std::span<const int> betas);

/// dim of the module with the given resolution in degree t.
std::int64_t predictedDimension(std::span<const int> alphas, std::span<const int> betas, int t);

/// Requires an essential arrangement.
Resolution resolve(const Arrangement& a);

/// Re-checks every structural identity of the resolution of an essential
/// arrangement with d lines. Throws InvariantViolation naming the failure.
void validateResolution(const Resolution& r, int d, std::int64_t degJ, int maxMu);

struct FreenessReport {
  bool isFree = false;
  std::optional<std::pair<int, int>> exponents;
  bool teraoFactorCheck = false;  // pi(A,t) = (1+t) prod (1 + alpha_i t)
};

FreenessReport freeness(const DerivationModule& m);
FreenessReport freeness(const Arrangement& a);

int regularity(const Arrangement& a);

/// psi = l theta' - (theta'(l)/d) E, mapping (D0(A-H))_t into (D0(A))_{t+1}.
/// Throws PreconditionError if theta' does not annihilate the partials of
/// the deleted arrangement.
PolyVec embedDeletion(const Arrangement& a, std::size_t pivot, const PolyVec& thetaPrime);

struct DeletionReport {
  std::size_t restrictionCount = 0;
  std::int64_t degJ = 0;
  std::int64_t degJDeleted = 0;
  // degJ(A) - degJ(A-H) == 2d - 2 - |A''|
  bool jacobianIdentity = false;
  struct Row {
    int t;
    std::size_t dim;           // dim (D0(A))_t
    std::size_t dimDeleted;    // dim (D0(A-H))_{t-1}
    std::int64_t expected;     // t + 2 - |A''|
  };
  std::vector<Row> rows;  // t = d-2, d-1, d
  bool hilbertIdentity = false;
};

/// Checks the deletion-restriction identities for (A, H); d >= 4. Throws
/// InvariantViolation if either fails.
DeletionReport deletionCheck(const DerivationModule& m, std::size_t pivot);
DeletionReport deletionCheck(const Arrangement& a, std::size_t pivot);

}  // namespace lineconf
