#include "lineconf/terao.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "lineconf/errors.hpp"

namespace lineconf {
namespace {

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

std::int64_t binomSum(const std::vector<int>& v) {
  std::int64_t s = 0;
  for (int x : v) s += choose2(x - 1);
  return s;
}

// Value the relation side must reach in (3):
// sum C(beta-1,2) = a(d-1-a) - 1 - C(d-2,2) + sum C(alpha-1,2).
std::int64_t betaBinomTarget(int d, int a, const std::vector<int>& alphas) {
  return static_cast<std::int64_t>(a) * (d - 1 - a) - 1 - choose2(d - 2) + binomSum(alphas);
}

void betaSearch(int d, std::size_t count, int lo, std::int64_t sum, std::int64_t binom, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (count == 0) {
    if (sum == 0 && binom == 0) out.push_back(cur);
    return;
  }
  const auto n = static_cast<std::int64_t>(count);
  for (int b = lo; b <= d - 1; ++b) {
    // remaining entries are >= b and <= d-1
    if (n * b > sum) break;
    if (n * (d - 1) < sum) continue;
    if (n * choose2(b - 1) > binom) break;
    cur.push_back(b);
    betaSearch(d, count - 1, b, sum - b, binom - choose2(b - 1), cur, out);
    cur.pop_back();
  }
}

void alphaSearch(int d, int a, int M, std::size_t m, int lo, std::vector<int>& cur,
                 std::vector<ResolutionCandidate>& out) {
  if (cur.size() == m) {
    if (cur.back() < M) return;  // ascending, so the last entry is the max
    const int sumAlpha = std::accumulate(cur.begin(), cur.end(), 0);
    const std::int64_t sumBeta = sumAlpha - (d - 1);
    const std::int64_t target = betaBinomTarget(d, a, cur);
    if (m == 2) {
      if (sumBeta == 0 && target == 0) out.push_back({cur, {}});
      return;
    }
    if (sumBeta <= 0 || target < 0) return;
    std::vector<std::vector<int>> betas;
    std::vector<int> tmp;
    // beta_1 >= alpha_2 + 1
    betaSearch(d, m - 2, std::max(3, cur[1] + 1), sumBeta, target, tmp, betas);
    for (auto& b : betas) out.push_back({cur, std::move(b)});
    return;
  }
  for (int x = lo; x <= d - 2; ++x) {
    cur.push_back(x);
    alphaSearch(d, a, M, m, x, cur, out);
    cur.pop_back();
  }
}

std::size_t countOf(const std::vector<int>& v, int x) {
  return static_cast<std::size_t>(std::count(v.begin(), v.end(), x));
}

void appendList(std::ostringstream& os, const std::vector<int>& v) {
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
}

}  // namespace

LatticeSummary LatticeSummary::make(int d, int a, int M) {
  if (d < 4) throw UsageError("lattice summary needs d >= 4");
  if (a < 1 || 2 * a > d - 1) throw UsageError("lattice summary needs 1 <= a <= (d-1)/2");
  if (M < 1) throw UsageError("lattice summary needs M >= 1");
  return {d, a, M, static_cast<std::int64_t>(d - 1) * (d - 1) - static_cast<std::int64_t>(a) * (d - 1 - a)};
}

LatticeSummary summarize(const Arrangement& arr) {
  const PoincareData p = poincare(arr);
  if (!p.factorRoots) throw PreconditionError("Poincare polynomial does not factor over the integers");
  const int d = static_cast<int>(arr.size());
  if (d < 4 || p.factorRoots->first < 1) {
    throw PreconditionError("Terao analysis needs d >= 4 and a non-pencil lattice");
  }
  LatticeSummary s = LatticeSummary::make(d, p.factorRoots->first, maxMu(arr));
  if (s.degJ != jacobianDegree(arr)) throw InvariantViolation("deg J disagrees with the factored Poincare polynomial");
  return s;
}

int ResolutionCandidate::regularity() const {
  int r = alphas.empty() ? 0 : alphas.back();
  if (!betas.empty()) r = std::max(r, betas.back() - 1);
  return r;
}

std::string ResolutionCandidate::toString() const {
  std::ostringstream os;
  os << "alpha=";
  appendList(os, alphas);
  os << " beta=";
  appendList(os, betas);
  return os.str();
}

ChainSpec ChainSpec::parse(const std::string& text) {
  const auto readInt = [&](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw UsageError("malformed chain \"" + text + "\"; expected BASE;S1,S2,...");
    }
    return v;
  };
  const auto semi = text.find(';');
  ChainSpec c;
  c.baseRegularity = readInt(std::string_view(text).substr(0, semi));
  if (semi != std::string::npos) {
    std::string_view rest = std::string_view(text).substr(semi + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      c.steps.push_back(readInt(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  if (c.baseRegularity < 1) throw UsageError("chain base regularity must be at least 1");
  for (int s : c.steps) {
    if (s < 1) throw UsageError("chain step counts must be at least 1");
  }
  return c;
}

std::vector<ResolutionCandidate> enumerate(int d, int a, int M) {
  if (d < 4 || a < 1 || 2 * a > d - 1 || M < 1) {
    throw UsageError("enumerate needs d >= 4, 1 <= a <= (d-1)/2, M >= 1");
  }
  const int maxM = d - 1;
  std::vector<std::vector<ResolutionCandidate>> perM(static_cast<std::size_t>(maxM + 1));
#pragma omp parallel for schedule(dynamic, 1)
  for (int m = 2; m <= maxM; ++m) {
    std::vector<int> cur;
    alphaSearch(d, a, M, static_cast<std::size_t>(m), 2, cur, perM[static_cast<std::size_t>(m)]);
  }
  std::vector<ResolutionCandidate> out;
  for (auto& v : perM) {
    std::sort(v.begin(), v.end());
    out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  }
  return out;
}

bool satisfiesConstraints(const ResolutionCandidate& c, int d, int a, int M) {
  const std::size_t m = c.alphas.size();
  if (m < 2 || m > static_cast<std::size_t>(d - 1) || c.betas.size() != m - 2) return false;
  if (!std::is_sorted(c.alphas.begin(), c.alphas.end()) || !std::is_sorted(c.betas.begin(), c.betas.end())) {
    return false;
  }
  const std::int64_t sa = std::accumulate(c.alphas.begin(), c.alphas.end(), std::int64_t{0});
  const std::int64_t sb = std::accumulate(c.betas.begin(), c.betas.end(), std::int64_t{0});
  if (sa - sb != d - 1) return false;
  if (choose2(d - 2) - binomSum(c.alphas) + binomSum(c.betas) + 1 != static_cast<std::int64_t>(a) * (d - 1 - a)) {
    return false;
  }
  for (int x : c.alphas) {
    if (x < 2 || x > d - 2) return false;
  }
  for (int x : c.betas) {
    if (x < 3 || x > d - 1) return false;
  }
  if (!c.betas.empty() && c.betas.front() < c.alphas[1] + 1) return false;
  return std::any_of(c.alphas.begin(), c.alphas.end(), [&](int x) { return x >= M; });
}

std::vector<ResolutionCandidate> filterBalancedStability(const std::vector<ResolutionCandidate>& cands, int d,
                                                         int a) {
  if (d % 2 == 0 || 2 * a != d - 1) {
    throw UsageError("balanced-stability filter needs d odd and a = (d-1)/2");
  }
  const int h = (d - 1) / 2;
  std::vector<ResolutionCandidate> out;
  for (const auto& c : cands) {
    if (c.isFree() || (c.alphas.front() < h && c.alphas.back() > h)) out.push_back(c);
  }
  return out;
}

std::vector<ResolutionCandidate> filterSecondSyzygy(const std::vector<ResolutionCandidate>& cands) {
  std::vector<ResolutionCandidate> out;
  for (const auto& c : cands) {
    bool excluded = false;
    for (int q : c.alphas) {
      if (countOf(c.alphas, q) == 2 && countOf(c.betas, q + 1) >= 2) {
        excluded = true;
        break;
      }
    }
    if (!excluded) out.push_back(c);
  }
  return out;
}

int chainBound(const ChainSpec& chain) {
  int r = chain.baseRegularity;
  for (int s : chain.steps) r = std::max(r + 1, s - 1);
  return r;
}

std::vector<ResolutionCandidate> filterRegularity(const std::vector<ResolutionCandidate>& cands, int bound) {
  if (bound < 1) throw UsageError("regularity bound must be at least 1");
  std::vector<ResolutionCandidate> out;
  for (const auto& c : cands) {
    if (c.regularity() <= bound) out.push_back(c);
  }
  return out;
}

TeraoVerdict verdict(const LatticeSummary& s, const std::optional<ChainSpec>& chain) {
  TeraoVerdict v;
  v.survivors = enumerate(s.d, s.a, s.M);
  v.trace.emplace_back("enumerate", v.survivors.size());
  if (s.d % 2 == 1 && 2 * s.a == s.d - 1) {
    v.survivors = filterBalancedStability(v.survivors, s.d, s.a);
    v.trace.emplace_back("balanced-stability", v.survivors.size());
  }
  v.survivors = filterSecondSyzygy(v.survivors);
  v.trace.emplace_back("second-syzygy", v.survivors.size());
  if (chain) {
    v.survivors = filterRegularity(v.survivors, chainBound(*chain));
    v.trace.emplace_back("regularity", v.survivors.size());
  }
  v.forcedFree = v.survivors.size() == 1 && v.survivors.front().isFree();
  return v;
}

}  // namespace lineconf
