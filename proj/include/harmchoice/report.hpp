#pragma once

// Machine- and human-readable reports. JSON field names are stable.

#include <optional>
#include <string>
#include <vector>

#include "harmchoice/census.hpp"
#include "harmchoice/core.hpp"
#include "harmchoice/degree.hpp"
#include "harmchoice/elicit.hpp"
#include "json.hpp"

namespace harmchoice {

using ReportJson = nlohmann::ordered_json;

/// Reversals are listed only up to this ground-set size (the scan is quadratic in menus).
inline constexpr std::size_t kMaxReversalListing = 12;

struct AnalysisReport {
  GroundSet ground;
  std::size_t menu_count = 0;
  bool warp = true;
  bool inconsistent = false;
  std::vector<Reversal> reversals;
  SpReport sp;
  std::vector<LinearOrder> elicited_orders;
  std::optional<StrictPartialOrder> partial_order;
  std::vector<std::string> warnings;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Full analysis: WARP, reversals, sp (cross-checked when n <= 8) and the
/// elicited preferences when sp >= 1.
AnalysisReport analyze(const Dataset& data, unsigned workers = 1);

ReportJson to_json(const AnalysisReport& report);
AnalysisReport analysis_report_from_json(const ReportJson& doc);
std::string to_text(const AnalysisReport& report);

ReportJson to_json(const Reversal& r, const GroundSet& ground);
ReportJson to_json(const LinearOrder& order, const GroundSet& ground);
ReportJson to_json(const SpReport& report, const GroundSet& ground);
std::string to_text(const SpReport& report, const GroundSet& ground);

ReportJson to_json(const CensusReport& report);
std::string to_text(const CensusReport& report);

std::string format_reversal(const Reversal& r, const GroundSet& ground);

}  // namespace harmchoice
