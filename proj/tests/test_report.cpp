#include <doctest.h>

#include <omp.h>

#include "lineconf/errors.hpp"
#include "lineconf/io.hpp"
#include "lineconf/report.hpp"
#include "fixtures.hpp"

using namespace lineconf;

TEST_CASE("arrangement files") {
  const Arrangement a = parseArrangement("# header\n1 0 0\n\n0\t1  0   # y\n  1 1 1\r\n+2 -3 5\n");
  REQUIRE(a.size() == 4);
  CHECK(a[1] == Line::make(0, 1, 0));
  CHECK(a[3] == Line::make(2, -3, 5));
  CHECK(parseArrangement(formatArrangement(a)).lines() == a.lines());
  CHECK_THROWS_AS(parseArrangement("1 0 0\n1 2\n"), InvalidInput);
  CHECK_THROWS_AS(parseArrangement("1 0 0\n1 2 x\n"), InvalidInput);
  CHECK_THROWS_AS(parseArrangement("1 0 0\n0 0 0\n"), InvalidInput);
  CHECK_THROWS_AS(parseArrangement("1 0 0\n-3 0 0\n"), InvalidInput);
  CHECK_THROWS_AS(parseArrangement("# nothing\n"), InvalidInput);
  CHECK_THROWS_AS(readArrangementFile("/nonexistent/file.txt"), UsageError);
  try {
    parseArrangement("1 0 0\n0 1 0\n1 2\n");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("row 3") != std::string::npos);
  }
}

TEST_CASE("analysis report contents") {
  const Report r = analyzeReport(fixtures::nonFano());
  CHECK(r.d == 7);
  CHECK(r.degJacobian == 27);
  REQUIRE(r.freeness);
  CHECK(r.freeness->isFree);
  CHECK(r.freeness->exponents == std::pair<int, int>(3, 3));
  REQUIRE(r.poincare);
  CHECK(r.poincare->factors == std::pair<int, int>(3, 3));
  CHECK(r.stability->verdict == "semistable-not-stable");
  CHECK_THROWS_AS(analyzeReport(fixtures::make({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}})), InvalidInput);
}

TEST_CASE("triple report") {
  const Report r = tripleReport(fixtures::arrII(), 5);
  REQUIRE(r.triple);
  CHECK(r.triple->restrictionCount == 4);
  CHECK(r.triple->degJ - r.triple->degJDeleted == 6);
  CHECK(r.triple->jacobianIdentity);
  CHECK(r.triple->hilbertIdentity);
  CHECK(r.triple->regularityBound >= r.triple->regularity);
  CHECK(r.triple->stabilityClause == "stable-3");
  CHECK(tripleReport(fixtures::arrV(), 3).triple->restrictionCount == 6);
  CHECK_THROWS_AS(tripleReport(fixtures::arrII(), 6), UsageError);
  CHECK_THROWS_AS(tripleReport(fixtures::triangle(), 0), PreconditionError);
}

TEST_CASE("jump report with a fit") {
  const Report r = jumpReport(fixtures::arrIII(), 2, true);
  REQUIRE(r.fit);
  REQUIRE(r.fit->curve);
  CHECK(*r.fit->curve == "x-y+z");
  const Report iv = jumpReport(fixtures::arrIV(), 1, true);
  CHECK(iv.fit->skipped);
  CHECK_THROWS_AS(jumpReport(fixtures::fiveThroughPoint(), 1, false), PreconditionError);
}

TEST_CASE("terao report cross-checks the realized resolution") {
  const Report r = teraoReport(summarize(fixtures::fiveThroughPoint()), std::nullopt, fixtures::fiveThroughPoint());
  REQUIRE(r.terao);
  CHECK_FALSE(r.terao->forcedFree);
  CHECK(r.terao->realizedPresent == true);
  CHECK(r.terao->realized == ResolutionCandidate{{2, 5, 5}, {6}});
}

TEST_CASE("JSON reports round-trip") {
  const std::vector<Report> reports = {
      analyzeReport(fixtures::arrV()),
      analyzeReport(fixtures::fiveThroughPoint()),
      tripleReport(fixtures::arrIII(), 6),
      jumpReport(fixtures::arrV(), 1, true),
      teraoReport(LatticeSummary::make(7, 3, 2), ChainSpec{2, {4, 3}}, std::nullopt),
      teraoReport(summarize(fixtures::nonFano()), std::nullopt, fixtures::nonFano()),
  };
  for (const Report& r : reports) {
    const std::string text = toJson(r);
    const Report back = reportFromJson(text);
    CHECK(back == r);
    CHECK(toJson(back) == text);
  }
  CHECK_THROWS_AS(reportFromJson("{\"d\": \"seven\"}"), InvalidInput);
  CHECK_THROWS_AS(reportFromJson("not json"), InvalidInput);
}

TEST_CASE("JSON key names") {
  const std::string j = toJson(analyzeReport(fixtures::arrII()));
  for (const char* key : {"\"d\"", "\"lines\"", "\"singular_points\"", "\"poincare\"", "\"deg_jacobian\"", "\"chern\"",
                          "\"c1n\"", "\"c2n\"", "\"resolution\"", "\"alphas\"", "\"betas\"", "\"regularity\"",
                          "\"freeness\"", "\"is_free\"", "\"exponents\"", "\"stability\"", "\"verdict\"",
                          "\"bogomolov\""}) {
    CHECK(j.find(key) != std::string::npos);
  }
  const std::string t = toJson(teraoReport(LatticeSummary::make(7, 3, 2), std::nullopt, std::nullopt));
  CHECK(t.find("\"forced_free\"") != std::string::npos);
  CHECK(t.find("\"trace\"") != std::string::npos);
  CHECK(t.find("\"candidates\"") != std::string::npos);
}

TEST_CASE("reports do not depend on the thread count") {
  const int saved = omp_get_max_threads();
  std::vector<std::string> outputs;
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    std::string all = toJson(analyzeReport(fixtures::arrV()));
    all += toJson(jumpReport(fixtures::arrV(), 1, true));
    all += toJson(teraoReport(LatticeSummary::make(9, 4, 2), std::nullopt, std::nullopt));
    outputs.push_back(std::move(all));
  }
  omp_set_num_threads(saved);
  CHECK(outputs[0] == outputs[1]);
  CHECK(outputs[0] == outputs[2]);
}

TEST_CASE("text rendering mentions the key facts") {
  const std::string t = renderText(analyzeReport(fixtures::arrI()));
  CHECK(t.find("free: yes, exponents (2, 2)") != std::string::npos);
  CHECK(t.find("normalized (0, 0)") != std::string::npos);
  const std::string v = renderText(teraoReport(LatticeSummary::make(7, 3, 2), ChainSpec{2, {4, 3}}, std::nullopt));
  CHECK(v.find("enumerate 19 -> balanced-stability 4 -> second-syzygy 2 -> regularity 1") != std::string::npos);
}
