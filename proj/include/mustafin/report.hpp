#ifndef MUSTAFIN_REPORT_HPP
#define MUSTAFIN_REPORT_HPP

#include <string>

#include "mustafin/components.hpp"

namespace mustafin {

/// Output style shared by all reports: text (default) or a JSON document;
/// `order` selects the Gröbner basis used when printing ideals.
struct ReportStyle {
  bool json = false;
  std::string order = "degrevlex";
};

std::string reportIdeal(const DegenerationIdeal& D, bool fiberOnly,
                        const ReportStyle& style);
std::string reportHull(const Configuration& cfg, const ReportStyle& style);
std::string reportBounds(const FlagType& flag, int n, const ReportStyle& style);
std::string reportDecomposition(const DegenerationIdeal& D,
                                const Decomposition& dec,
                                const ReportStyle& style);
std::string reportStructural(const DegenerationIdeal& D,
                             const Decomposition& dec,
                             const StructuralReport& rep,
                             const ReportStyle& style);
std::string reportExperiment(const std::vector<ExperimentRow>& rows,
                             const ReportStyle& style);

}  // namespace mustafin

#endif
