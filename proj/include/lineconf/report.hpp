#pragma once

// Reports assembled from the library analyses, with a JSON form that
// round-trips exactly and a plain-text rendering.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lineconf/arrangement.hpp"
#include "lineconf/bundle.hpp"
#include "lineconf/terao.hpp"

namespace lineconf {

struct Report {
  struct SingularEntry {
    std::string point;
    std::vector<std::size_t> incident;
    int mu = 0;
    bool operator==(const SingularEntry&) const = default;
  };
  struct PoincareSection {
    int b1 = 0;
    std::int64_t b2 = 0;
    std::optional<std::pair<int, int>> factors;
    bool operator==(const PoincareSection&) const = default;
  };
  struct ChernSection {
    std::int64_t c1 = 0, c2 = 0;
    int k = 0;
    std::int64_t c1n = 0, c2n = 0;
    bool operator==(const ChernSection&) const = default;
  };
  struct ResolutionSection {
    std::vector<int> alphas, betas;
    int regularity = 0;
    bool operator==(const ResolutionSection&) const = default;
  };
  struct FreenessSection {
    bool isFree = false;
    std::optional<std::pair<int, int>> exponents;
    bool operator==(const FreenessSection&) const = default;
  };
  struct StabilitySection {
    std::string verdict;
    bool bogomolov = false;
    std::optional<int> witnessDegree;
    bool operator==(const StabilitySection&) const = default;
  };
  struct JumpEntry {
    std::string line;
    int a1 = 0, a2 = 0;
    bool isJump = false;
    bool threshold = false;
    bool operator==(const JumpEntry&) const = default;
  };
  struct FitSection {
    int degree = 0;
    std::size_t points = 0;
    std::size_t solutionDim = 0;
    std::size_t rank = 0;
    std::vector<std::string> candidates;
    std::optional<std::string> curve;
    std::optional<std::string> skipped;  // why no fit was attempted
    bool operator==(const FitSection&) const = default;
  };
  struct TripleSection {
    std::size_t line = 0;
    std::string pivot;
    std::vector<std::string> deleted;
    std::vector<std::pair<std::string, int>> restriction;  // point, multiplicity
    std::size_t restrictionCount = 0;
    std::int64_t degJ = 0, degJDeleted = 0;
    bool jacobianIdentity = false;
    std::vector<std::vector<std::int64_t>> hilbertRows;  // t, dim, dim deleted, expected
    bool hilbertIdentity = false;
    std::optional<int> regularityBound;  // max(reg D' + 1, |A''| - 1) when A' is essential
    int regularity = 0;
    std::string stabilityClause;
    bool operator==(const TripleSection&) const = default;
  };
  struct TeraoSection {
    int d = 0, a = 0, M = 0;
    std::vector<ResolutionCandidate> candidates;  // survivors
    std::vector<std::pair<std::string, std::size_t>> trace;
    bool forcedFree = false;
    std::optional<int> chainBound;
    std::optional<ResolutionCandidate> realized;
    std::optional<bool> realizedPresent;  // realized resolution among the enumerated candidates
    bool operator==(const TeraoSection&) const = default;
  };

  std::optional<int> d;
  std::vector<std::string> lines;
  std::vector<SingularEntry> singularPoints;
  std::optional<PoincareSection> poincare;
  std::optional<std::int64_t> degJacobian;
  std::optional<ChernSection> chern;
  std::optional<ResolutionSection> resolution;
  std::optional<FreenessSection> freeness;
  std::optional<StabilitySection> stability;
  std::optional<std::vector<JumpEntry>> jump;
  std::optional<FitSection> fit;
  std::optional<TripleSection> triple;
  std::optional<TeraoSection> terao;

  bool operator==(const Report&) const = default;
};

/// Lattice, Poincare polynomial, deg J, Chern data, resolution (re-validated),
/// freeness and stability. InvalidInput for a pencil.
Report analyzeReport(const Arrangement& a);

/// Deletion-restriction data for the pivot line. UsageError on a bad index,
/// PreconditionError below four lines.
Report tripleReport(const Arrangement& a, std::size_t pivot);

/// Jump scan over the candidate lines of the given height; with `fit`, a
/// dual-curve fit of degree c2n through the jump points when c1n = 0.
/// PreconditionError when the bundle is unstable.
Report jumpReport(const Arrangement& a, int height, bool fit);

/// Terao pipeline; with an arrangement, also checks that its resolution is
/// among the enumerated candidates.
Report teraoReport(const LatticeSummary& s, const std::optional<ChainSpec>& chain,
                   const std::optional<Arrangement>& realized);

std::string toJson(const Report& r);
/// Throws InvalidInput on a malformed document.
Report reportFromJson(const std::string& text);

std::string renderText(const Report& r);

}  // namespace lineconf
