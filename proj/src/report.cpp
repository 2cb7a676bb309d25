#include "lineconf/report.hpp"

#include <sstream>

#include <json.hpp>

#include "lineconf/derivations.hpp"
#include "lineconf/errors.hpp"

namespace lineconf {
namespace {

using nlohmann::json;

void requireEssential(const Arrangement& a) {
  if (a.size() < 3 || !a.isEssential()) {
    throw InvalidInput("all lines pass through one point; an essential arrangement is required");
  }
}

void fillLattice(Report& r, const Arrangement& a) {
  r.d = static_cast<int>(a.size());
  for (const Line& l : a.lines()) r.lines.push_back(l.toString());
  for (const SingularPoint& p : singularPoints(a)) r.singularPoints.push_back({p.point.toString(), p.incident, p.mu()});
}

Report::ResolutionSection toSection(const Resolution& res) { return {res.alphas, res.betas, res.regularity}; }

Report::StabilitySection toSection(const StabilityReport& s) {
  return {verdictName(s.verdict), s.bogomolovPasses, s.witnessDegree};
}

bool clauseAgrees(StabilityClause c, const StabilityReport& s) {
  switch (c) {
    case StabilityClause::Stable1:
    case StabilityClause::Stable3:
      return s.verdict == Verdict::Stable;
    case StabilityClause::Semistable2:
      return s.semistable();
    case StabilityClause::None:
      return true;
  }
  return false;
}

template <class T>
json optionalJson(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json pairJson(const std::optional<std::pair<int, int>>& p) {
  return p ? json::array({p->first, p->second}) : json(nullptr);
}

std::optional<std::pair<int, int>> pairFrom(const json& j) {
  if (j.is_null()) return std::nullopt;
  return std::pair<int, int>(j.at(0).get<int>(), j.at(1).get<int>());
}

template <class T>
std::optional<T> optionalFrom(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json candidateJson(const ResolutionCandidate& c) { return {{"alphas", c.alphas}, {"betas", c.betas}}; }

ResolutionCandidate candidateFrom(const json& j) {
  return {j.at("alphas").get<std::vector<int>>(), j.at("betas").get<std::vector<int>>()};
}

std::string listText(const std::vector<int>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

}  // namespace

Report analyzeReport(const Arrangement& a) {
  requireEssential(a);
  Report r;
  fillLattice(r, a);
  const PoincareData p = poincare(a);
  r.poincare = Report::PoincareSection{p.b1, p.b2, p.factorRoots};

  const DerivationModule m(a);
  r.degJacobian = m.jacobianDegree();
  const ChernData c = chern(a);
  r.chern = Report::ChernSection{c.c1, c.c2, c.k, c.c1n, c.c2n};
  validateResolution(m.resolution(), m.lineCount(), m.jacobianDegree(), m.maxMu());
  r.resolution = toSection(m.resolution());
  const FreenessReport f = freeness(m);
  r.freeness = Report::FreenessSection{f.isFree, f.exponents};
  r.stability = toSection(stability(m));
  return r;
}

Report tripleReport(const Arrangement& a, std::size_t pivot) {
  if (pivot >= a.size()) {
    throw UsageError("line index " + std::to_string(pivot) + " out of range for " + std::to_string(a.size()) +
                     " lines");
  }
  requireEssential(a);
  if (a.size() < 4) throw PreconditionError("the triple analysis needs at least four lines");
  Report r;
  fillLattice(r, a);

  const DerivationModule m(a);
  validateResolution(m.resolution(), m.lineCount(), m.jacobianDegree(), m.maxMu());
  const TripleData t = triple(a, pivot);
  const DeletionReport del = deletionCheck(m, pivot);

  Report::TripleSection s;
  s.line = pivot;
  s.pivot = a[pivot].toString();
  for (const Line& l : t.deleted.lines()) s.deleted.push_back(l.toString());
  for (const SingularPoint& p : t.restriction) s.restriction.emplace_back(p.point.toString(), p.multiplicity());
  s.restrictionCount = t.restrictionCount;
  s.degJ = del.degJ;
  s.degJDeleted = del.degJDeleted;
  s.jacobianIdentity = del.jacobianIdentity;
  for (const auto& row : del.rows) {
    s.hilbertRows.push_back({row.t, static_cast<std::int64_t>(row.dim), static_cast<std::int64_t>(row.dimDeleted),
                             row.expected});
  }
  s.hilbertIdentity = del.hilbertIdentity;
  s.regularity = m.resolution().regularity;
  if (t.deleted.size() >= 3 && t.deleted.isEssential()) {
    const int bound = std::max(regularity(t.deleted) + 1, static_cast<int>(t.restrictionCount) - 1);
    if (s.regularity > bound) throw InvariantViolation("regularity exceeds the deletion bound");
    s.regularityBound = bound;
  }
  const StabilityClause clause = stabilitySufficient(a, pivot);
  const StabilityReport st = stability(m);
  if (!clauseAgrees(clause, st)) {
    throw InvariantViolation("stability clause " + clauseName(clause) + " contradicts verdict " + verdictName(st.verdict));
  }
  s.stabilityClause = clauseName(clause);
  r.triple = std::move(s);
  r.resolution = toSection(m.resolution());
  r.stability = toSection(st);
  return r;
}

Report jumpReport(const Arrangement& a, int height, bool fit) {
  requireEssential(a);
  Report r;
  fillLattice(r, a);
  const DerivationModule m(a);
  const StabilityReport st = stability(m);
  r.stability = toSection(st);
  if (!st.semistable()) throw PreconditionError("the bundle is unstable; jump lines are not defined here");
  const ChernData c = chern(a);
  r.chern = Report::ChernSection{c.c1, c.c2, c.k, c.c1n, c.c2n};

  const std::vector<JumpReport> scan = jumpScan(m, height);
  std::vector<Report::JumpEntry> entries;
  std::vector<Point> jumpPts, otherPts;
  for (const JumpReport& j : scan) {
    entries.push_back({j.line.toString(), j.splitting.a1, j.splitting.a2, j.isJump, j.thresholdFired});
    (j.isJump ? jumpPts : otherPts).push_back(dualPoint(j.line));
  }
  r.jump = std::move(entries);

  if (fit) {
    Report::FitSection f;
    f.degree = static_cast<int>(c.c2n);
    f.points = jumpPts.size();
    if (c.c1n != 0) {
      f.skipped = "c1n is odd; no curve degree predicted";
    } else if (c.c2n < 1) {
      f.skipped = "c2n is zero; the jump locus is empty";
    } else if (jumpPts.empty()) {
      f.skipped = "no jump lines among the candidates";
    } else {
      try {
        const CurveFit cf = fitDualCurve(jumpPts, f.degree, otherPts);
        f.solutionDim = cf.solutionDim;
        f.rank = cf.rank;
        for (const DualCurve& dc : cf.candidates) f.candidates.push_back(dc.toString());
        if (cf.curve) f.curve = cf.curve->toString();
      } catch (const NoCurveError& e) {
        f.skipped = e.what();
      }
    }
    r.fit = std::move(f);
  }
  return r;
}

Report teraoReport(const LatticeSummary& s, const std::optional<ChainSpec>& chain,
                   const std::optional<Arrangement>& realized) {
  Report r;
  Report::TeraoSection t;
  t.d = s.d;
  t.a = s.a;
  t.M = s.M;
  const TeraoVerdict v = verdict(s, chain);
  t.candidates = v.survivors;
  t.trace = v.trace;
  t.forcedFree = v.forcedFree;
  if (chain) t.chainBound = chainBound(*chain);
  if (realized) {
    fillLattice(r, *realized);
    r.degJacobian = s.degJ;
    const DerivationModule m(*realized);
    validateResolution(m.resolution(), m.lineCount(), m.jacobianDegree(), m.maxMu());
    r.resolution = toSection(m.resolution());
    const ResolutionCandidate c{m.resolution().alphas, m.resolution().betas};
    const auto all = enumerate(s.d, s.a, s.M);
    t.realized = c;
    t.realizedPresent = std::find(all.begin(), all.end(), c) != all.end();
  }
  r.terao = std::move(t);
  return r;
}

std::string toJson(const Report& r) {
  json j = json::object();
  if (r.d) j["d"] = *r.d;
  if (!r.lines.empty()) j["lines"] = r.lines;
  if (!r.singularPoints.empty()) {
    json pts = json::array();
    for (const auto& p : r.singularPoints) pts.push_back({{"point", p.point}, {"incident", p.incident}, {"mu", p.mu}});
    j["singular_points"] = pts;
  }
  if (r.poincare) j["poincare"] = {{"b1", r.poincare->b1}, {"b2", r.poincare->b2}, {"factors", pairJson(r.poincare->factors)}};
  if (r.degJacobian) j["deg_jacobian"] = *r.degJacobian;
  if (r.chern) {
    j["chern"] = {{"c1", r.chern->c1}, {"c2", r.chern->c2}, {"k", r.chern->k}, {"c1n", r.chern->c1n}, {"c2n", r.chern->c2n}};
  }
  if (r.resolution) {
    j["resolution"] = {{"alphas", r.resolution->alphas},
                       {"betas", r.resolution->betas},
                       {"regularity", r.resolution->regularity}};
  }
  if (r.freeness) j["freeness"] = {{"is_free", r.freeness->isFree}, {"exponents", pairJson(r.freeness->exponents)}};
  if (r.stability) {
    j["stability"] = {{"verdict", r.stability->verdict},
                      {"bogomolov", r.stability->bogomolov},
                      {"witness_degree", optionalJson(r.stability->witnessDegree)}};
  }
  if (r.jump) {
    json arr = json::array();
    for (const auto& e : *r.jump) {
      arr.push_back({{"line", e.line}, {"a1", e.a1}, {"a2", e.a2}, {"is_jump", e.isJump}, {"threshold", e.threshold}});
    }
    j["jump"] = arr;
  }
  if (r.fit) {
    j["fit"] = {{"degree", r.fit->degree},           {"points", r.fit->points},
                {"solution_dim", r.fit->solutionDim}, {"rank", r.fit->rank},
                {"candidates", r.fit->candidates},    {"curve", optionalJson(r.fit->curve)},
                {"skipped", optionalJson(r.fit->skipped)}};
  }
  if (r.triple) {
    const auto& t = *r.triple;
    json restr = json::array();
    for (const auto& [p, mult] : t.restriction) restr.push_back({{"point", p}, {"multiplicity", mult}});
    json rows = json::array();
    for (const auto& row : t.hilbertRows) rows.push_back({{"t", row[0]}, {"dim", row[1]}, {"dim_deleted", row[2]}, {"expected", row[3]}});
    j["triple"] = {{"line", t.line},
                   {"pivot", t.pivot},
                   {"deleted", t.deleted},
                   {"restriction", restr},
                   {"restriction_count", t.restrictionCount},
                   {"deg_jacobian", t.degJ},
                   {"deg_jacobian_deleted", t.degJDeleted},
                   {"jacobian_identity", t.jacobianIdentity},
                   {"hilbert_rows", rows},
                   {"hilbert_identity", t.hilbertIdentity},
                   {"regularity_bound", optionalJson(t.regularityBound)},
                   {"regularity", t.regularity},
                   {"stability_clause", t.stabilityClause}};
  }
  if (r.terao) {
    const auto& t = *r.terao;
    json cands = json::array();
    for (const auto& c : t.candidates) cands.push_back(candidateJson(c));
    json trace = json::array();
    for (const auto& [stage, n] : t.trace) trace.push_back({{"stage", stage}, {"count", n}});
    j["terao"] = {{"d", t.d},
                  {"a", t.a},
                  {"M", t.M},
                  {"candidates", cands},
                  {"trace", trace},
                  {"forced_free", t.forcedFree},
                  {"chain_bound", optionalJson(t.chainBound)},
                  {"realized", t.realized ? candidateJson(*t.realized) : json(nullptr)},
                  {"realized_present", optionalJson(t.realizedPresent)}};
  }
  return j.dump(2) + "\n";
}

Report reportFromJson(const std::string& text) {
  try {
    const json j = json::parse(text);
    Report r;
    r.d = optionalFrom<int>(j, "d");
    if (j.contains("lines")) r.lines = j.at("lines").get<std::vector<std::string>>();
    if (j.contains("singular_points")) {
      for (const auto& p : j.at("singular_points")) {
        r.singularPoints.push_back(
            {p.at("point").get<std::string>(), p.at("incident").get<std::vector<std::size_t>>(), p.at("mu").get<int>()});
      }
    }
    if (j.contains("poincare")) {
      const auto& p = j.at("poincare");
      r.poincare = Report::PoincareSection{p.at("b1").get<int>(), p.at("b2").get<std::int64_t>(), pairFrom(p.at("factors"))};
    }
    r.degJacobian = optionalFrom<std::int64_t>(j, "deg_jacobian");
    if (j.contains("chern")) {
      const auto& c = j.at("chern");
      r.chern = Report::ChernSection{c.at("c1").get<std::int64_t>(), c.at("c2").get<std::int64_t>(), c.at("k").get<int>(),
                                     c.at("c1n").get<std::int64_t>(), c.at("c2n").get<std::int64_t>()};
    }
    if (j.contains("resolution")) {
      const auto& s = j.at("resolution");
      r.resolution = Report::ResolutionSection{s.at("alphas").get<std::vector<int>>(), s.at("betas").get<std::vector<int>>(),
                                               s.at("regularity").get<int>()};
    }
    if (j.contains("freeness")) {
      const auto& f = j.at("freeness");
      r.freeness = Report::FreenessSection{f.at("is_free").get<bool>(), pairFrom(f.at("exponents"))};
    }
    if (j.contains("stability")) {
      const auto& s = j.at("stability");
      r.stability = Report::StabilitySection{s.at("verdict").get<std::string>(), s.at("bogomolov").get<bool>(),
                                             optionalFrom<int>(s, "witness_degree")};
    }
    if (j.contains("jump")) {
      std::vector<Report::JumpEntry> entries;
      for (const auto& e : j.at("jump")) {
        entries.push_back({e.at("line").get<std::string>(), e.at("a1").get<int>(), e.at("a2").get<int>(),
                           e.at("is_jump").get<bool>(), e.at("threshold").get<bool>()});
      }
      r.jump = std::move(entries);
    }
    if (j.contains("fit")) {
      const auto& f = j.at("fit");
      Report::FitSection s;
      s.degree = f.at("degree").get<int>();
      s.points = f.at("points").get<std::size_t>();
      s.solutionDim = f.at("solution_dim").get<std::size_t>();
      s.rank = f.at("rank").get<std::size_t>();
      s.candidates = f.at("candidates").get<std::vector<std::string>>();
      s.curve = optionalFrom<std::string>(f, "curve");
      s.skipped = optionalFrom<std::string>(f, "skipped");
      r.fit = std::move(s);
    }
    if (j.contains("triple")) {
      const auto& t = j.at("triple");
      Report::TripleSection s;
      s.line = t.at("line").get<std::size_t>();
      s.pivot = t.at("pivot").get<std::string>();
      s.deleted = t.at("deleted").get<std::vector<std::string>>();
      for (const auto& p : t.at("restriction")) {
        s.restriction.emplace_back(p.at("point").get<std::string>(), p.at("multiplicity").get<int>());
      }
      s.restrictionCount = t.at("restriction_count").get<std::size_t>();
      s.degJ = t.at("deg_jacobian").get<std::int64_t>();
      s.degJDeleted = t.at("deg_jacobian_deleted").get<std::int64_t>();
      s.jacobianIdentity = t.at("jacobian_identity").get<bool>();
      for (const auto& row : t.at("hilbert_rows")) {
        s.hilbertRows.push_back({row.at("t").get<std::int64_t>(), row.at("dim").get<std::int64_t>(),
                                 row.at("dim_deleted").get<std::int64_t>(), row.at("expected").get<std::int64_t>()});
      }
      s.hilbertIdentity = t.at("hilbert_identity").get<bool>();
      s.regularityBound = optionalFrom<int>(t, "regularity_bound");
      s.regularity = t.at("regularity").get<int>();
      s.stabilityClause = t.at("stability_clause").get<std::string>();
      r.triple = std::move(s);
    }
    if (j.contains("terao")) {
      const auto& t = j.at("terao");
      Report::TeraoSection s;
      s.d = t.at("d").get<int>();
      s.a = t.at("a").get<int>();
      s.M = t.at("M").get<int>();
      for (const auto& c : t.at("candidates")) s.candidates.push_back(candidateFrom(c));
      for (const auto& e : t.at("trace")) s.trace.emplace_back(e.at("stage").get<std::string>(), e.at("count").get<std::size_t>());
      s.forcedFree = t.at("forced_free").get<bool>();
      s.chainBound = optionalFrom<int>(t, "chain_bound");
      if (!t.at("realized").is_null()) s.realized = candidateFrom(t.at("realized"));
      s.realizedPresent = optionalFrom<bool>(t, "realized_present");
      r.terao = std::move(s);
    }
    return r;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
}

std::string renderText(const Report& r) {
  std::ostringstream os;
  if (r.d) {
    os << "lines (d = " << *r.d << "):";
    for (std::size_t i = 0; i < r.lines.size(); ++i) os << "\n  [" << i << "] " << r.lines[i];
    os << '\n';
  }
  if (!r.singularPoints.empty()) {
    os << "singular points: " << r.singularPoints.size() << '\n';
    for (const auto& p : r.singularPoints) {
      os << "  " << p.point << "  mu=" << p.mu << "  lines";
      for (std::size_t i : p.incident) os << ' ' << i;
      os << '\n';
    }
  }
  if (r.poincare) {
    os << "poincare: (1+t)(1 + " << r.poincare->b1 << "t + " << r.poincare->b2 << "t^2)";
    if (r.poincare->factors) {
      os << " = (1+t)(1+" << r.poincare->factors->first << "t)(1+" << r.poincare->factors->second << "t)";
    } else {
      os << ", no integer factorisation";
    }
    os << '\n';
  }
  if (r.degJacobian) os << "deg J: " << *r.degJacobian << '\n';
  if (r.chern) {
    os << "chern: c1=" << r.chern->c1 << " c2=" << r.chern->c2 << " k=" << r.chern->k << " normalized (" << r.chern->c1n
       << ", " << r.chern->c2n << ")\n";
  }
  if (r.resolution) {
    os << "resolution: alpha=" << listText(r.resolution->alphas) << " beta=" << listText(r.resolution->betas)
       << " regularity=" << r.resolution->regularity << '\n';
  }
  if (r.freeness) {
    os << "free: " << (r.freeness->isFree ? "yes" : "no");
    if (r.freeness->exponents) os << ", exponents (" << r.freeness->exponents->first << ", " << r.freeness->exponents->second << ")";
    os << '\n';
  }
  if (r.stability) {
    os << "stability: " << r.stability->verdict;
    if (r.stability->witnessDegree) os << " (sections in degree " << *r.stability->witnessDegree << ")";
    os << ", bogomolov " << (r.stability->bogomolov ? "holds" : "fails") << '\n';
  }
  if (r.triple) {
    const auto& t = *r.triple;
    os << "deleting [" << t.line << "] " << t.pivot << ": |A''| = " << t.restrictionCount << '\n';
    for (const auto& [p, mult] : t.restriction) os << "  " << p << " multiplicity " << mult << '\n';
    os << "  deg J " << t.degJ << " - " << t.degJDeleted << " = " << (t.degJ - t.degJDeleted)
       << (t.jacobianIdentity ? " (identity holds)" : " (identity FAILS)") << '\n';
    for (const auto& row : t.hilbertRows) {
      os << "  t=" << row[0] << ": " << row[1] << " - " << row[2] << " = " << (row[1] - row[2]) << ", expected " << row[3]
         << '\n';
    }
    os << "  regularity " << t.regularity;
    if (t.regularityBound) os << ", deletion bound " << *t.regularityBound;
    os << "\n  stability clause: " << t.stabilityClause << '\n';
  }
  if (r.jump) {
    std::size_t n = 0;
    for (const auto& e : *r.jump) n += e.isJump ? 1 : 0;
    os << "jump lines: " << n << " of " << r.jump->size() << " candidates\n";
    for (const auto& e : *r.jump) {
      if (!e.isJump) continue;
      os << "  " << e.line << "  splitting (" << e.a1 << ", " << e.a2 << ")" << (e.threshold ? "  [threshold]" : "")
         << '\n';
    }
  }
  if (r.fit) {
    os << "dual curve fit, degree " << r.fit->degree << ": ";
    if (r.fit->skipped) {
      os << "skipped, " << *r.fit->skipped << '\n';
    } else {
      os << r.fit->points << " points, " << r.fit->rank << " conditions, solution space dimension "
         << r.fit->solutionDim << '\n';
      if (r.fit->curve) {
        os << "  curve: " << *r.fit->curve << '\n';
      } else {
        for (const auto& c : r.fit->candidates) os << "  candidate: " << c << '\n';
      }
    }
  }
  if (r.terao) {
    const auto& t = *r.terao;
    os << "terao: d=" << t.d << " a=" << t.a << " M=" << t.M << '\n' << "  trace:";
    for (std::size_t i = 0; i < t.trace.size(); ++i) os << (i ? " -> " : " ") << t.trace[i].first << ' ' << t.trace[i].second;
    os << '\n';
    if (t.chainBound) os << "  chain regularity bound " << *t.chainBound << " (chain supplied by caller, not certified)\n";
    for (const auto& c : t.candidates) os << "  survivor " << c.toString() << '\n';
    os << "  forced free: " << (t.forcedFree ? "yes" : "no") << '\n';
    if (t.realized) {
      os << "  realized " << t.realized->toString() << (*t.realizedPresent ? " is" : " is NOT")
         << " among the candidates\n";
    }
  }
  return os.str();
}

}  // namespace lineconf
