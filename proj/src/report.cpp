#include "harmchoice/report.hpp"

#include <iomanip>
#include <sstream>

#include "harmchoice/axioms.hpp"

namespace harmchoice {

namespace {

ReportJson labels_of(Menu menu, const GroundSet& ground) {
  ReportJson out = ReportJson::array();
  for (Alternative a : menu.members()) out.push_back(ground.label(a));
  return out;
}

Alternative alt_of(const ReportJson& j, const GroundSet& ground) {
  auto a = ground.find(j.get<std::string>());
  if (!a) throw Error(ErrorCode::ParseError, "unknown alternative " + j.dump());
  return *a;
}

Menu menu_of(const ReportJson& j, const GroundSet& ground) {
  std::vector<Alternative> members;
  for (const auto& label : j) members.push_back(alt_of(label, ground));
  return Menu::of(members);
}

LinearOrder order_of(const ReportJson& j, const GroundSet& ground) {
  std::vector<Alternative> ranking;
  for (const auto& label : j) ranking.push_back(alt_of(label, ground));
  return LinearOrder(std::move(ranking));
}

Reversal reversal_of(const ReportJson& j, const GroundSet& ground) {
  return {menu_of(j.at("menus").at(0), ground), menu_of(j.at("menus").at(1), ground),
          alt_of(j.at("picks").at(0), ground), alt_of(j.at("picks").at(1), ground)};
}

SpMethod method_of(const std::string& s) {
  if (s == "bruteforce") return SpMethod::BruteForce;
  if (s == "axiomatic") return SpMethod::Axiomatic;
  if (s == "both") return SpMethod::Both;
  throw Error(ErrorCode::ParseError, "unknown sp method '" + s + "'");
}

std::string join_labels(const std::vector<Alternative>& items, const GroundSet& ground,
                        const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += ground.label(items[i]);
  }
  return out;
}

}  // namespace

std::string format_reversal(const Reversal& r, const GroundSet& ground) {
  return "(" + format_menu(r.first, ground) + ", " + format_menu(r.second, ground) +
         ") picks " + ground.label(r.first_pick) + ", " + ground.label(r.second_pick);
}

ReportJson to_json(const Reversal& r, const GroundSet& ground) {
  return {{"menus", {labels_of(r.first, ground), labels_of(r.second, ground)}},
          {"picks", {ground.label(r.first_pick), ground.label(r.second_pick)}}};
}

ReportJson to_json(const LinearOrder& order, const GroundSet& ground) {
  ReportJson out = ReportJson::array();
  for (Alternative a : order.ranking()) out.push_back(ground.label(a));
  return out;
}

ReportJson to_json(const SpReport& report, const GroundSet& ground) {
  ReportJson out;
  out["value"] = report.sp;
  out["method"] = std::string(to_string(report.method));
  if (report.method != SpMethod::Axiomatic) {
    ReportJson orders = ReportJson::array();
    for (const auto& o : report.minimizing_orders) orders.push_back(to_json(o, ground));
    out["minimizing_orders"] = std::move(orders);
    out["minimizing_order_count"] = report.minimizing_order_count;
  }
  if (report.witness) {
    ReportJson items = ReportJson::array();
    for (Alternative a : report.witness->items) items.push_back(ground.label(a));
    ReportJson paired = ReportJson::array();
    for (const auto& r : report.witness->paired_reversals) paired.push_back(to_json(r, ground));
    out["witness"] = {{"items", std::move(items)}, {"paired_reversals", std::move(paired)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

namespace {

SpReport sp_report_of(const ReportJson& j, const GroundSet& ground) {
  SpReport r;
  r.sp = j.at("value").get<int>();
  r.method = method_of(j.at("method").get<std::string>());
  if (j.contains("minimizing_orders")) {
    for (const auto& o : j.at("minimizing_orders")) r.minimizing_orders.push_back(order_of(o, ground));
    r.minimizing_order_count = j.at("minimizing_order_count").get<std::uint64_t>();
  }
  if (j.contains("witness") && !j.at("witness").is_null()) {
    CnsWitness w;
    for (const auto& a : j.at("witness").at("items")) w.items.push_back(alt_of(a, ground));
    for (const auto& rv : j.at("witness").at("paired_reversals"))
      w.paired_reversals.push_back(reversal_of(rv, ground));
    r.witness = std::move(w);
  }
  return r;
}

}  // namespace

std::string to_text(const SpReport& report, const GroundSet& ground) {
  std::ostringstream out;
  out << "sp                  " << report.sp << "\n";
  out << "method              " << to_string(report.method) << "\n";
  if (report.witness) {
    out << "witness items       " << join_labels(report.witness->items, ground, ", ") << "\n";
    for (std::size_t h = 0; h < report.witness->items.size(); ++h)
      out << "  " << ground.label(report.witness->items[h]) << " paired by "
          << format_reversal(report.witness->paired_reversals[h], ground) << "\n";
  }
  if (report.method != SpMethod::Axiomatic) {
    out << "minimizing orders   " << report.minimizing_order_count;
    if (report.minimizing_orders.size() < report.minimizing_order_count)
      out << " (first " << report.minimizing_orders.size() << " shown)";
    out << "\n";
    for (const auto& o : report.minimizing_orders) out << "  " << format_order(o, ground) << "\n";
  }
  return out.str();
}

AnalysisReport analyze(const Dataset& data, unsigned workers) {
  const ChoiceFunction& c = data.choice;
  AnalysisReport report{data.ground, c.menu_count(), true, false, {}, {}, {}, std::nullopt,
                        data.warnings};
  const ReversalGraph graph = ReversalGraph::of(c);
  report.warp = graph.empty();
  report.inconsistent = graph.complete();
  if (c.size() <= kMaxReversalListing)
    report.reversals = find_reversals(c);
  else
    report.warnings.push_back("reversal listing skipped for more than " +
                              std::to_string(kMaxReversalListing) + " alternatives");
  report.sp = sp(c, workers);
  if (report.sp.sp >= 1 && report.sp.witness) {
    if (report.sp.sp == 1) report.elicited_orders = elicit_weakly_harmful(c);
    report.partial_order = elicit_partial(c, report.sp.witness->items);
    if (report.sp.sp > 1)
      report.elicited_orders = all_extensions(*report.partial_order, kMinimizingOrderCap).orders;
  }
  return report;
}

ReportJson to_json(const AnalysisReport& report) {
  const GroundSet& g = report.ground;
  ReportJson out;
  out["dataset"] = {{"n", g.size()}, {"menus", report.menu_count}, {"alternatives", g.labels()}};
  out["warp"] = report.warp;
  out["inconsistent"] = report.inconsistent;
  ReportJson revs = ReportJson::array();
  for (const auto& r : report.reversals) revs.push_back(to_json(r, g));
  out["reversals"] = std::move(revs);
  out["sp"] = to_json(report.sp, g);
  ReportJson orders = ReportJson::array();
  for (const auto& o : report.elicited_orders) orders.push_back(to_json(o, g));
  out["elicited_orders"] = std::move(orders);
  if (report.partial_order) {
    ReportJson pairs = ReportJson::array();
    for (auto [a, b] : report.partial_order->pairs()) pairs.push_back({g.label(a), g.label(b)});
    out["partial_order"] = std::move(pairs);
  } else {
    out["partial_order"] = nullptr;
  }
  out["warnings"] = report.warnings;
  return out;
}

AnalysisReport analysis_report_from_json(const ReportJson& doc) {
  try {
    GroundSet g(doc.at("dataset").at("alternatives").get<std::vector<std::string>>());
    AnalysisReport r{g, doc.at("dataset").at("menus").get<std::size_t>(),
                     doc.at("warp").get<bool>(), doc.at("inconsistent").get<bool>(),
                     {}, {}, {}, std::nullopt,
                     doc.at("warnings").get<std::vector<std::string>>()};
    for (const auto& rv : doc.at("reversals")) r.reversals.push_back(reversal_of(rv, g));
    r.sp = sp_report_of(doc.at("sp"), g);
    for (const auto& o : doc.at("elicited_orders")) r.elicited_orders.push_back(order_of(o, g));
    if (!doc.at("partial_order").is_null()) {
      StrictPartialOrder p(g.size());
      for (const auto& pair : doc.at("partial_order")) p.add(alt_of(pair.at(0), g), alt_of(pair.at(1), g));
      r.partial_order = std::move(p);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const AnalysisReport& report) {
  const GroundSet& g = report.ground;
  std::ostringstream out;
  out << "alternatives        " << g.size() << " (" << join_labels([&] {
    std::vector<Alternative> all(g.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Alternative>(i);
    return all;
  }(), g, ", ") << ")\n";
  out << "menus               " << report.menu_count << "\n";
  out << "WARP                " << (report.warp ? "holds" : "violated") << "\n";
  out << "inconsistent        " << (report.inconsistent ? "yes" : "no") << "\n";
  out << "reversals           " << report.reversals.size() << "\n";
  for (const auto& r : report.reversals) out << "  " << format_reversal(r, g) << "\n";
  out << to_text(report.sp, g);
  if (!report.elicited_orders.empty()) {
    out << "elicited orders     " << report.elicited_orders.size() << "\n";
    for (const auto& o : report.elicited_orders) out << "  " << format_order(o, g) << "\n";
  }
  if (report.partial_order) {
    out << "partial order      ";
    for (auto [a, b] : report.partial_order->pairs()) out << " " << g.label(a) << "<" << g.label(b);
    out << "   (a<b: a ranked above b)\n";
  }
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  return out.str();
}

ReportJson to_json(const CensusReport& report) {
  ReportJson out;
  out["n"] = report.n;
  out["mode"] = report.exact ? "exact" : "sampled";
  out["total"] = report.total;
  ReportJson by_sp = ReportJson::array();
  for (auto [s, count] : report.counts_by_sp) {
    ReportJson row{{"sp", s}, {"count", count}};
    if (!report.exact) {
      const Estimate& e = report.estimates_by_sp.at(s);
      row["fraction"] = e.fraction;
      row["half_width"] = e.half_width;
    }
    by_sp.push_back(std::move(row));
  }
  out["counts_by_sp"] = std::move(by_sp);
  out["strongly_harmful"] = report.strongly_harmful;
  out["strongly_harmful_fraction"] = report.strongly_harmful_fraction;
  if (!report.exact) {
    out["half_width"] = report.half_width;
    out["seed"] = *report.seed;
    out["samples"] = *report.samples;
  }
  return out;
}

std::string to_text(const CensusReport& report) {
  std::ostringstream out;
  out << "n                   " << report.n << "\n";
  out << "mode                " << (report.exact ? "exact" : "sampled") << "\n";
  out << "choice functions    " << report.total << "\n";
  if (!report.exact) out << "samples             " << *report.samples << " (seed " << *report.seed << ")\n";
  out << "sp    count" << (report.exact ? "" : "       fraction   +/-") << "\n";
  for (auto [s, count] : report.counts_by_sp) {
    out << std::setw(2) << s << "    " << std::setw(9) << count;
    if (!report.exact) {
      const Estimate& e = report.estimates_by_sp.at(s);
      out << "  " << std::fixed << std::setprecision(6) << e.fraction << "  " << e.half_width;
      out.unsetf(std::ios::fixed);
    }
    out << "\n";
  }
  out << "strongly harmful    " << report.strongly_harmful << " (fraction " << std::fixed
      << std::setprecision(6) << report.strongly_harmful_fraction;
  if (!report.exact) out << " +/- " << report.half_width;
  out << ")\n";
  return out.str();
}

}  // namespace harmchoice
