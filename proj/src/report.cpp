#include "mustafin/report.hpp"

#include <json.hpp>
#include <sstream>

#include "mustafin/poly_io.hpp"

namespace mustafin {

namespace {

using nlohmann::json;

MonomialOrder orderFor(const ReportStyle& style) {
  if (style.order == "lex") return MonomialOrder::lex();
  return MonomialOrder::degrevlex();
}

std::vector<std::string> basisStrings(const Ideal& I, const MonomialOrder& ord) {
  std::vector<std::string> out;
  for (auto& g : I.groebner(ord)) out.push_back(printPolynomial(g));
  if (out.empty()) out.push_back("0");
  return out;
}

std::string labelDetail(const ComponentReport& c) {
  switch (c.label) {
    case Label::Primary:
      return "primary L" + std::to_string(c.primaryVertex);
    case Label::Secondary:
      return "secondary " + (c.secondaryVertex ? c.secondaryVertex->str() : "?");
    case Label::Mixed:
      if (c.mixed)
        return "mixed [" + c.mixed->subFlag1.str() + ": " + c.mixed->vertex1 +
               " | " + c.mixed->subFlag2.str() + ": " + c.mixed->vertex2 + "]";
      return "mixed";
    case Label::TertiaryUnresolved:
      return "tertiary-unresolved";
  }
  return "?";
}

json componentJson(const ComponentReport& c, const MonomialOrder& ord) {
  json j;
  j["generators"] = basisStrings(c.prime, ord);
  j["projective_dimension"] = c.projectiveDim;
  j["label"] = labelName(c.label);
  if (c.label == Label::Primary) j["vertex"] = "L" + std::to_string(c.primaryVertex);
  if (c.label == Label::Secondary && c.secondaryVertex)
    j["vertex"] = c.secondaryVertex->str();
  if (c.mixed) {
    j["mixed_evidence"] = {{"flag1", c.mixed->subFlag1.str()},
                           {"vertex1", c.mixed->vertex1},
                           {"flag2", c.mixed->subFlag2.str()},
                           {"vertex2", c.mixed->vertex2}};
  }
  j["evidence"] = c.evidence;
  j["confidence"] =
      c.confidence == Confidence::Certified ? "certified" : "heuristic";
  return j;
}

}  // namespace

std::string reportIdeal(const DegenerationIdeal& D, bool fiberOnly,
                        const ReportStyle& style) {
  auto ord = orderFor(style);
  const Ideal& I = fiberOnly ? D.fiberIdeal : D.flatIdeal;
  auto gens = basisStrings(I, ord);
  if (style.json) {
    json j;
    j["kind"] = fiberOnly ? "fiber_ideal" : "flat_ideal";
    j["flag"] = D.flag.str();
    j["order"] = style.order;
    j["generators"] = gens;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << (fiberOnly ? "special fiber ideal" : "flat degeneration ideal")
      << " (" << style.order << " basis, " << gens.size() << " generators)\n";
  for (auto& g : gens) out << "  " << g << "\n";
  return out.str();
}

std::string reportHull(const Configuration& cfg, const ReportStyle& style) {
  if (!cfg.allDiagonal())
    throw std::invalid_argument(
        "hull computation requires all lattices in diagonal form");
  auto diag = cfg.diagonals();
  auto mins = tropicalHull(diag, HullVariant::Min);
  auto maxs = tropicalHull(diag, HullVariant::Max);
  auto names = [](const std::set<ApartmentVertex>& s) {
    std::vector<std::string> v;
    for (auto& a : s) v.push_back(a.str());
    return v;
  };
  if (style.json) {
    json j;
    j["min_hull"] = names(mins);
    j["max_hull"] = names(maxs);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "min-tropical hull:";
  for (auto& a : mins) out << " " << a.str();
  out << "\nmax-tropical hull:";
  for (auto& a : maxs) out << " " << a.str();
  out << "\n";
  return out.str();
}

std::string reportBounds(const FlagType& flag, int n, const ReportStyle& style) {
  CountBounds b = countBounds(flag, n);
  if (style.json) {
    json j;
    j["flag"] = flag.str();
    j["n"] = n;
    j["lower"] = b.lower;
    if (b.upper) j["upper"] = *b.upper;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "component count bounds for " << flag.str() << ", n = " << n
      << ": lower " << b.lower;
  if (b.upper)
    out << ", upper " << *b.upper;
  else
    out << ", no upper bound computed";
  out << "\n";
  return out.str();
}

std::string reportDecomposition(const DegenerationIdeal& D,
                                const Decomposition& dec,
                                const ReportStyle& style) {
  auto ord = orderFor(style);
  if (style.json) {
    json j;
    j["flag"] = D.flag.str();
    j["validated"] = dec.validated;
    j["components"] = json::array();
    for (auto& c : dec.components) j["components"].push_back(componentJson(c, ord));
    j["dual_graph_edges"] = json::array();
    for (auto& e : dec.dualGraphEdges)
      j["dual_graph_edges"].push_back({e.first, e.second});
    j["notes"] = dec.notes;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << dec.components.size() << " components ("
      << (dec.validated ? "validated" : "NOT validated") << ")\n";
  for (size_t i = 0; i < dec.components.size(); ++i) {
    auto& c = dec.components[i];
    out << "component " << i << ": " << labelDetail(c) << ", dim "
        << c.projectiveDim << ", "
        << (c.confidence == Confidence::Certified ? "certified" : "heuristic")
        << "\n";
    for (auto& g : basisStrings(c.prime, ord)) out << "    " << g << "\n";
    for (auto& e : c.evidence) out << "    # " << e << "\n";
  }
  out << "dual graph edges:";
  for (auto& e : dec.dualGraphEdges) out << " " << e.first << "-" << e.second;
  out << "\n";
  for (auto& n : dec.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string reportStructural(const DegenerationIdeal& D,
                             const Decomposition& dec,
                             const StructuralReport& rep,
                             const ReportStyle& style) {
  if (style.json) {
    json j;
    j["components"] = dec.components.size();
    j["dimensions_ok"] = rep.dimensionsOk;
    j["connected"] = rep.connected;
    j["count_within_bounds"] = rep.countWithinBounds;
    if (rep.reducedInTableCase) j["reduced"] = *rep.reducedInTableCase;
    j["failures"] = rep.failures;
    j["ok"] = rep.ok();
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "structural checks on " << dec.components.size() << " components of "
      << D.flag.str() << ":\n";
  out << "  equidimensional: " << (rep.dimensionsOk ? "ok" : "FAIL") << "\n";
  out << "  dual graph connected: " << (rep.connected ? "ok" : "FAIL") << "\n";
  out << "  count within bounds: " << (rep.countWithinBounds ? "ok" : "FAIL")
      << "\n";
  if (rep.reducedInTableCase)
    out << "  reduced (multiplicity-free case): "
        << (*rep.reducedInTableCase ? "ok" : "FAIL") << "\n";
  for (auto& f : rep.failures) out << "  failure: " << f << "\n";
  out << (rep.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string reportExperiment(const std::vector<ExperimentRow>& rows,
                             const ReportStyle& style) {
  if (style.json) {
    json j = json::array();
    for (auto& r : rows)
      j.push_back({{"seed", r.seed},
                   {"components", r.componentCount},
                   {"bound", r.bound}});
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "seed\tcomponents\tbound\n";
  for (auto& r : rows)
    out << r.seed << "\t" << r.componentCount << "\t" << r.bound << "\n";
  return out.str();
}

}  // namespace mustafin
