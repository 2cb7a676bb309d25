#pragma once

// Numerical candidates for the minimal free resolution of D0 over a fixed
// lattice whose Poincare polynomial factors, and the filters that cut them
// down.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lineconf/arrangement.hpp"

namespace lineconf {

struct LatticeSummary {
  int d = 0;
  int a = 0;  // pi = (1+t)(1+at)(1+(d-1-a)t), a <= d-1-a
  int M = 0;  // max mu over singular points
  std::int64_t degJ = 0;

  /// Throws UsageError unless 1 <= a <= (d-1)/2, d >= 4 and M >= 1.
  static LatticeSummary make(int d, int a, int M);
};

/// Summary of a realized arrangement. PreconditionError if pi does not factor
/// over the integers or the arrangement is not essential.
LatticeSummary summarize(const Arrangement& arr);

struct ResolutionCandidate {
  std::vector<int> alphas;  // ascending
  std::vector<int> betas;   // ascending

  std::size_t m() const { return alphas.size(); }
  int regularity() const;
  bool isFree() const { return betas.empty(); }
  std::string toString() const;

  auto operator<=>(const ResolutionCandidate&) const = default;
};

struct ChainSpec {
  int baseRegularity = 1;
  std::vector<int> steps;  // |A''| for each successive addition

  /// Parses "BASE;S1,S2,...". Throws UsageError on malformed text.
  static ChainSpec parse(const std::string& text);
};

/// Every candidate satisfying the six numerical constraints, sorted by
/// (m, alphas, betas). Empty for infeasible parameters.
std::vector<ResolutionCandidate> enumerate(int d, int a, int M);

/// Re-checks the six constraints from scratch.
bool satisfiesConstraints(const ResolutionCandidate& c, int d, int a, int M);

/// Requires d odd and a = (d-1)/2; UsageError otherwise.
std::vector<ResolutionCandidate> filterBalancedStability(const std::vector<ResolutionCandidate>& cands, int d,
                                                         int a);

/// Drops candidates with exactly two generators of some degree q and at least
/// two relations of degree q+1.
std::vector<ResolutionCandidate> filterSecondSyzygy(const std::vector<ResolutionCandidate>& cands);

int chainBound(const ChainSpec& chain);

/// Requires bound >= 1.
std::vector<ResolutionCandidate> filterRegularity(const std::vector<ResolutionCandidate>& cands, int bound);

struct TeraoVerdict {
  std::vector<ResolutionCandidate> survivors;
  bool forcedFree = false;
  std::vector<std::pair<std::string, std::size_t>> trace;  // stage name, survivors after it
};

TeraoVerdict verdict(const LatticeSummary& s, const std::optional<ChainSpec>& chain);

}  // namespace lineconf
