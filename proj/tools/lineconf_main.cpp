// lineconf: analyses of line arrangements in the projective plane.
//
// Exit codes: 0 success, 1 usage, 2 invalid arrangement, 3 precondition not
// met, 4 internal invariant failure.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lineconf/errors.hpp"
#include "lineconf/io.hpp"
#include "lineconf/report.hpp"

namespace {

using namespace lineconf;

void emit(const Report& r, bool asJson) { std::cout << (asJson ? toJson(r) : renderText(r)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of line arrangements: derivation modules, bundles, jump lines"};
  app.require_subcommand(1);
  bool asJson = false;

  std::string file;
  std::size_t lineIndex = 0;
  int height = 2;
  bool fit = false;
  std::optional<int> d, a, M;
  std::string chainText;

  auto* analyze = app.add_subcommand("analyze", "Lattice, resolution, freeness, Chern data and stability");
  analyze->add_option("file", file, "Arrangement file")->required();
  analyze->add_flag("--json", asJson, "Emit the machine-readable report");

  auto* tripleCmd = app.add_subcommand("triple", "Deletion-restriction data for one line");
  tripleCmd->add_option("file", file, "Arrangement file")->required();
  tripleCmd->add_option("--line", lineIndex, "0-based index of the line to delete")->required();
  tripleCmd->add_flag("--json", asJson, "Emit the machine-readable report");

  auto* jump = app.add_subcommand("jump", "Scan candidate lines for jumps of the splitting type");
  jump->add_option("file", file, "Arrangement file")->required();
  jump->add_option("--height", height, "Coefficient bound for the candidate lines")->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  jump->add_flag("--fit", fit, "Fit a curve through the dual points of the jump lines");
  jump->add_flag("--json", asJson, "Emit the machine-readable report");

  auto* terao = app.add_subcommand("terao", "Numerical resolutions of a factored lattice and their filters");
  terao->add_option("file", file, "Arrangement file (alternative to --d --a --M)");
  auto* dOpt = terao->add_option("--d", d, "Number of lines");
  auto* aOpt = terao->add_option("--a", a, "Smaller root of the Poincare polynomial");
  auto* mOpt = terao->add_option("--M", M, "Largest Moebius value of a point");
  terao->add_option("--chain", chainText, "Regularity chain \"BASE;S1,S2,...\"");
  terao->add_flag("--json", asJson, "Emit the machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (analyze->parsed()) {
      emit(analyzeReport(readArrangementFile(file)), asJson);
    } else if (tripleCmd->parsed()) {
      emit(tripleReport(readArrangementFile(file), lineIndex), asJson);
    } else if (jump->parsed()) {
      emit(jumpReport(readArrangementFile(file), height, fit), asJson);
    } else if (terao->parsed()) {
      std::optional<ChainSpec> chain;
      if (!chainText.empty()) chain = ChainSpec::parse(chainText);
      const bool flags = dOpt->count() + aOpt->count() + mOpt->count() > 0;
      if (!file.empty() && flags) throw UsageError("give either a file or --d --a --M, not both");
      if (!file.empty()) {
        const Arrangement arr = readArrangementFile(file);
        if (arr.size() < 3 || !arr.isEssential()) throw InvalidInput("all lines pass through one point");
        emit(teraoReport(summarize(arr), chain, arr), asJson);
      } else {
        if (!d || !a || !M) throw UsageError("terao needs a file or all of --d, --a, --M");
        emit(teraoReport(LatticeSummary::make(*d, *a, *M), chain, std::nullopt), asJson);
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid arrangement: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition not met: " << e.what() << '\n';
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
