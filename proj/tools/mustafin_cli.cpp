#include <unistd.h>

#include <CLI11.hpp>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mustafin/config.hpp"
#include "mustafin/report.hpp"

using namespace mustafin;

namespace {

bool logEnabled() {
  const char* v = std::getenv("MUSTAFIN_LOG");
  return v != nullptr && *v != '\0';
}

void logLine(const std::string& s) {
  if (logEnabled()) std::cerr << "[mustafin] " << s << "\n";
}

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void onTimeout(int) {
  const char msg[] = "timeout exceeded\n";
  ssize_t n = write(2, msg, sizeof(msg) - 1);
  (void)n;
  _exit(1);
}

struct LabelCounts {
  int primary = 0, secondary = 0, mixed = 0, unresolved = 0;
};

LabelCounts tally(const Decomposition& dec) {
  LabelCounts c;
  for (auto& comp : dec.components) {
    switch (comp.label) {
      case Label::Primary: ++c.primary; break;
      case Label::Secondary: ++c.secondary; break;
      case Label::Mixed: ++c.mixed; break;
      case Label::TertiaryUnresolved: ++c.unresolved; break;
    }
  }
  return c;
}

Vertex diagVertex(std::vector<int> exps) {
  return Vertex::apartment(ApartmentVertex::normalized(std::move(exps)));
}

// Golden verification cases. Returns 0 on PASS, 1 on FAIL.
int runVerify(const std::string& name, const ClassifyOptions& opts) {
  if (name == "paper-example") {
    Configuration cfg = Configuration::make(
        3,
        {diagVertex({0, 0, 0}), diagVertex({1, 0, 0}), diagVertex({0, 0, 1})});
    logLine("building degeneration for the 3-vertex flag example");
    auto D = buildDegeneration(cfg, FlagType::make(3, {1, 2}));
    auto dec = classify(D, opts);
    auto c = tally(dec);
    bool secondaryAt101 = false;
    for (auto& comp : dec.components)
      if (comp.label == Label::Secondary && comp.secondaryVertex &&
          comp.secondaryVertex->diag &&
          comp.secondaryVertex->diag->a == std::vector<int>{1, 0, 1})
        secondaryAt101 = true;
    bool ok = dec.components.size() == 8 && c.primary == 3 &&
              c.secondary == 1 && c.mixed == 4 && c.unresolved == 0 &&
              secondaryAt101 && structuralChecks(D, dec).ok();
    std::cout << (ok ? "PASS" : "FAIL") << ": " << dec.components.size()
              << " components: " << c.primary << " primary, " << c.secondary
              << " secondary" << (secondaryAt101 ? "(L4)" : "") << ", "
              << c.mixed << " mixed\n";
    return ok ? 0 : 1;
  }
  if (name == "paper-example-2") {
    Configuration cfg = Configuration::make(
        3, {diagVertex({1, 0, 0}), diagVertex({0, 0, 1})});
    auto D = buildDegeneration(cfg, FlagType::make(3, {1, 2}));
    auto dec = classify(D, opts);
    auto c = tally(dec);
    auto bound = countBounds(D.flag, 2);
    bool ok = dec.components.size() == 6 && c.primary == 2 &&
              c.secondary == 0 && c.mixed == 4 && c.unresolved == 0 &&
              bound.upper && *bound.upper == 6 && structuralChecks(D, dec).ok();
    std::cout << (ok ? "PASS" : "FAIL") << ": " << dec.components.size()
              << " components: " << c.primary << " primary, " << c.secondary
              << " secondary, " << c.mixed << " mixed\n";
    return ok ? 0 : 1;
  }
  if (name == "d2-line") {
    Configuration cfg =
        Configuration::make(2, {diagVertex({0, 0}), diagVertex({1, 0})});
    auto D = buildDegeneration(cfg, FlagType::make(2, {1}));
    auto dec = classify(D, opts);
    auto c = tally(dec);
    auto bound = countBounds(D.flag, 2);
    bool ok = dec.components.size() == 2 && c.primary == 2 && bound.upper &&
              *bound.upper == 2 && genericFiberCheck(D, opts.seed).ok &&
              structuralChecks(D, dec).ok();
    std::cout << (ok ? "PASS" : "FAIL") << ": " << dec.components.size()
              << " components, bound " << (bound.upper ? *bound.upper : -1)
              << (ok ? " attained" : "") << "\n";
    return ok ? 0 : 1;
  }
  std::cerr << "unknown verify case: " << name
            << " (expected paper-example, paper-example-2, or d2-line)\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mustafin degenerations of flag varieties: exact pipeline"};
  app.require_subcommand(1);
  app.fallthrough();  // allow global flags after the subcommand name

  std::string configPath;
  std::string verifyCase;
  std::string order;
  bool jsonOut = false;
  long long seedFlag = -1;
  int radiusFlag = -1, maxCandFlag = -1, timeoutSecs = 0;

  app.add_option("--config", configPath, "configuration file path");
  app.add_option("--seed", seedFlag, "override random seed");
  app.add_option("--radius", radiusFlag, "secondary candidate radius");
  app.add_option("--max-candidates", maxCandFlag, "candidate list cap");
  app.add_option("--order", order, "monomial order: degrevlex or lex")
      ->check(CLI::IsMember({"degrevlex", "lex"}));
  app.add_flag("--json", jsonOut, "structured JSON output");
  app.add_option("--timeout-secs", timeoutSecs, "abort after N seconds");

  auto* cIdeal = app.add_subcommand("ideal", "print the flat degeneration ideal");
  auto* cFiber = app.add_subcommand("fiber", "print the special fiber ideal");
  auto* cComp = app.add_subcommand("components", "decompose the special fiber");
  auto* cClass = app.add_subcommand("classify", "decompose and label components");
  auto* cHull = app.add_subcommand("hull", "print both tropical hulls");
  auto* cBounds = app.add_subcommand("bounds", "component count bounds");
  auto* cCheck = app.add_subcommand("check", "structural checks on the classification");
  auto* cExp = app.add_subcommand("experiment", "n = 2 general position sampling");
  auto* cVerify = app.add_subcommand("verify", "run a golden verification case");
  cVerify->add_option("case", verifyCase, "paper-example | paper-example-2 | d2-line")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (timeoutSecs > 0) {
    std::signal(SIGALRM, onTimeout);
    alarm((unsigned)timeoutSecs);
  }

  try {
    ClassifyOptions defaults;
    if (cVerify->parsed()) {
      if (seedFlag >= 0) defaults.seed = (uint64_t)seedFlag;
      if (radiusFlag >= 0) defaults.candidateRadius = radiusFlag;
      if (maxCandFlag >= 1) defaults.maxCandidates = maxCandFlag;
      return runVerify(verifyCase, defaults);
    }

    if (configPath.empty()) {
      std::cerr << "--config is required for this command\n";
      return 2;
    }
    RunConfig rc = parseConfig(readFile(configPath));
    if (seedFlag >= 0) rc.seed = (uint64_t)seedFlag;
    if (radiusFlag >= 0) rc.radius = radiusFlag;
    if (maxCandFlag >= 1) rc.maxCandidates = maxCandFlag;
    if (!order.empty()) rc.order = order;
    ReportStyle style{jsonOut, rc.order};
    ClassifyOptions opts{rc.seed, rc.radius, rc.maxCandidates};

    if (cBounds->parsed()) {
      std::cout << reportBounds(rc.flagType(), (int)rc.vertices.size(), style);
      return 0;
    }
    if (cExp->parsed()) {
      logLine("running general position experiment");
      auto rows = generalPositionExperiment(rc.flagType(), rc.trials, rc.seed);
      std::cout << reportExperiment(rows, style);
      for (auto& r : rows)
        if (r.componentCount > r.bound || r.componentCount < 2) return 1;
      return 0;
    }

    Configuration cfg = rc.configuration();
    if (cHull->parsed()) {
      std::cout << reportHull(cfg, style);
      return 0;
    }

    logLine("building the degeneration ideal");
    auto D = buildDegeneration(cfg, rc.flagType());
    if (cIdeal->parsed()) {
      std::cout << reportIdeal(D, false, style);
      return 0;
    }
    if (cFiber->parsed()) {
      std::cout << reportIdeal(D, true, style);
      return 0;
    }

    logLine("classifying the special fiber components");
    auto dec = classify(D, opts);
    if (cComp->parsed() || cClass->parsed()) {
      std::cout << reportDecomposition(D, dec, style);
      return dec.validated ? 0 : 1;
    }
    if (cCheck->parsed()) {
      auto rep = structuralChecks(D, dec);
      std::cout << reportStructural(D, dec, rep, style);
      return rep.ok() ? 0 : 1;
    }
    std::cerr << "no command executed\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
}
