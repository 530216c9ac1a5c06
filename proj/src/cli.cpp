#include "harmchoice/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "harmchoice/axioms.hpp"
#include "harmchoice/census.hpp"
#include "harmchoice/distortion.hpp"
#include "harmchoice/elicit.hpp"
#include "harmchoice/io.hpp"
#include "harmchoice/report.hpp"

namespace harmchoice {

namespace {

enum class Format { Json, Text };

struct Options {
  Format format = Format::Json;
  unsigned workers = 0;
  std::string file;
  bool brute = false;
  bool axiomatic = false;
  std::string order;
  int index = 0;
  std::size_t n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string policy;
  int k = 0;
};

unsigned effective_workers(unsigned requested) {
  if (const char* env = std::getenv("HARMCHOICE_WORKERS"); env && *env) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw CLI::ValidationError("HARMCHOICE_WORKERS", "must be a non-negative integer");
    }
  }
  return requested;
}

void emit(std::ostream& out, const ReportJson& json) { out << json.dump(2) << "\n"; }

// Label list for a ground set given only by an order spec.
GroundSet ground_from_order_spec(const std::string& spec) {
  std::vector<std::string> labels;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(' ');
    const auto e = tok.find_last_not_of(' ');
    labels.push_back(b == std::string::npos ? "" : tok.substr(b, e - b + 1));
  }
  return GroundSet(std::move(labels));
}

// fixed:<i> | uniform:<j> | explicit:<menu>=<i>;<menu>=<i>;... with menu
// members joined by '+', e.g. explicit:a+b=1;a+b+c=0
IndexPolicy parse_policy(const std::string& spec, const GroundSet& ground) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("--policy", "expected fixed:<i>, uniform:<j> or explicit:<map>");
  const std::string kind = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  auto to_int = [](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw CLI::ValidationError("--policy", "'" + s + "' is not an integer");
    }
  };
  if (kind == "fixed") return FixedIndex{to_int(body)};
  if (kind == "uniform") return UniformIndexUpTo{to_int(body)};
  if (kind != "explicit") throw CLI::ValidationError("--policy", "unknown policy kind '" + kind + "'");
  ExplicitIndices map;
  std::stringstream ss(body);
  std::string entry;
  while (std::getline(ss, entry, ';')) {
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--policy", "entry '" + entry + "' lacks '='");
    std::vector<Alternative> members;
    std::stringstream ms(entry.substr(0, eq));
    std::string label;
    while (std::getline(ms, label, '+')) {
      auto a = ground.find(label);
      if (!a) throw Error(ErrorCode::InvalidMenu, "unknown alternative '" + label + "' in policy");
      members.push_back(*a);
    }
    map.entries.emplace_back(Menu::of(members), to_int(entry.substr(eq + 1)));
  }
  return map;
}

std::string policy_label(const IndexPolicy& policy) {
  if (const auto* f = std::get_if<FixedIndex>(&policy)) return "fixed:" + std::to_string(f->index);
  if (const auto* u = std::get_if<UniformIndexUpTo>(&policy)) return "uniform:" + std::to_string(u->cap);
  return "explicit";
}

void write_dataset(std::ostream& out, Format format, const GroundSet& ground,
                   const ChoiceFunction& choice, const ReportJson& extra = nullptr) {
  if (format == Format::Text) {
    out << dataset_to_text(ground, choice);
    return;
  }
  auto doc = ReportJson::parse(dataset_to_json(ground, choice));
  if (!extra.is_null()) doc["generator"] = extra;
  emit(out, doc);
}

int dispatch(const CLI::App& app, const Options& o, std::ostream& out) {
  const unsigned workers = effective_workers(o.workers);
  const bool json = o.format == Format::Json;
  const auto& cmd = app.get_subcommands().front()->get_name();

  if (cmd == "analyze") {
    const auto report = analyze(load_dataset(o.file), workers);
    if (json) emit(out, to_json(report)); else out << to_text(report);
  } else if (cmd == "warp") {
    const auto data = load_dataset(o.file);
    const bool holds = satisfies_warp(data.choice);
    if (json) emit(out, {{"warp", holds}});
    else out << "WARP " << (holds ? "holds" : "violated") << "\n";
  } else if (cmd == "reversals") {
    const auto data = load_dataset(o.file);
    const auto revs = find_reversals(data.choice);
    if (json) {
      ReportJson list = ReportJson::array();
      for (const auto& r : revs) list.push_back(to_json(r, data.ground));
      emit(out, {{"count", revs.size()}, {"reversals", std::move(list)}});
    } else {
      out << revs.size() << " reversal(s)\n";
      for (const auto& r : revs) out << "  " << format_reversal(r, data.ground) << "\n";
    }
  } else if (cmd == "sp") {
    const auto data = load_dataset(o.file);
    const SpReport report = o.brute       ? sp_bruteforce(data.choice, workers)
                            : o.axiomatic ? sp_axiomatic(data.choice)
                                          : sp(data.choice, workers);
    if (json) emit(out, to_json(report, data.ground)); else out << to_text(report, data.ground);
  } else if (cmd == "elicit") {
    const auto data = load_dataset(o.file);
    const SpReport s = sp_axiomatic(data.choice);
    ReportJson doc{{"sp", s.sp}};
    std::vector<LinearOrder> orders;
    std::optional<StrictPartialOrder> partial;
    std::uint64_t extension_count = 0;
    if (s.witness) {
      partial = elicit_partial(data.choice, s.witness->items);
      auto ext = all_extensions(*partial, kMinimizingOrderCap);
      extension_count = ext.total;
      orders = s.sp == 1 ? elicit_weakly_harmful(data.choice) : std::move(ext.orders);
    }
    if (json) {
      ReportJson items = ReportJson::array();
      if (s.witness)
        for (Alternative a : s.witness->items) items.push_back(data.ground.label(a));
      doc["witness"] = std::move(items);
      ReportJson list = ReportJson::array();
      for (const auto& ord : orders) list.push_back(to_json(ord, data.ground));
      doc["elicited_orders"] = std::move(list);
      ReportJson pairs = ReportJson::array();
      if (partial)
        for (auto [a, b] : partial->pairs()) pairs.push_back({data.ground.label(a), data.ground.label(b)});
      doc["partial_order"] = std::move(pairs);
      doc["extension_count"] = extension_count;
      emit(out, doc);
    } else {
      out << "sp " << s.sp << "\n";
      if (s.sp == 0) out << "choice is rationalizable; nothing to elicit\n";
      for (const auto& ord : orders) out << "  " << format_order(ord, data.ground) << "\n";
      if (partial) out << "linear extensions of the elicited partial order: " << extension_count << "\n";
    }
  } else if (cmd == "distort") {
    const GroundSet ground = ground_from_order_spec(o.order);
    const LinearOrder base = LinearOrder::identity(ground.size());
    const LinearOrder d = harmful_distortion(base, o.index);
    if (json) emit(out, {{"order", to_json(base, ground)}, {"index", o.index}, {"distortion", to_json(d, ground)}});
    else out << format_order(d, ground) << "\n";
  } else if (cmd == "census") {
    const auto report = enumerate_census(o.n, workers);
    if (json) emit(out, to_json(report)); else out << to_text(report);
  } else if (cmd == "sample-census") {
    const auto report = sample_census(o.n, o.samples, o.seed, workers);
    if (json) emit(out, to_json(report)); else out << to_text(report);
  } else if (cmd == "generate") {
    const GroundSet ground = ground_from_order_spec(o.order);
    const LinearOrder base = LinearOrder::identity(ground.size());
    const IndexPolicy policy = parse_policy(o.policy, ground);
    const auto generated = generate_harmful(base, policy, o.seed);
    write_dataset(out, o.format, ground, generated.choice,
                  {{"order", to_json(base, ground)}, {"policy", policy_label(policy)},
                   {"seed", o.seed}, {"cap", policy_cap(policy)}});
  } else if (cmd == "construct-inconsistent") {
    const Dataset data = construct_inconsistent(o.k);
    write_dataset(out, o.format, data.ground, data.choice);
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Degree-of-self-punishment analysis of finite choice data", "harmchoice"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--workers", o.workers,
                 "Worker threads, 0 = available parallelism (HARMCHOICE_WORKERS overrides)");

  auto file_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Dataset file (JSON or text; '-' for stdin)")->required();
    return sub;
  };
  file_cmd("analyze", "Full analysis report");
  file_cmd("warp", "Check the weak axiom of revealed preference");
  file_cmd("reversals", "List all reversals");
  auto* sp_cmd = file_cmd("sp", "Degree of self-punishment");
  auto* brute = sp_cmd->add_flag("--brute", o.brute, "Exhaustive search over orders only");
  sp_cmd->add_flag("--axiomatic", o.axiomatic, "Axiomatic characterization only")->excludes(brute);
  file_cmd("elicit", "Elicit the preferences explaining the choice");

  auto* distort = app.add_subcommand("distort", "Harmful distortion of an order");
  distort->add_option("--order", o.order, "Comma-separated best-to-worst labels")->required();
  distort->add_option("--index", o.index, "Distortion index")->required();

  auto* census = app.add_subcommand("census", "Exact sp distribution over all choices");
  census->add_option("--n", o.n, "Ground-set size (2..4)")->required();

  auto* sampled = app.add_subcommand("sample-census", "Sampled sp distribution");
  sampled->add_option("--n", o.n, "Ground-set size")->required();
  sampled->add_option("--samples", o.samples, "Number of sampled choices")->required();
  sampled->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();

  auto* generate = app.add_subcommand("generate", "Simulate a self-punishing decision maker");
  generate->add_option("--order", o.order, "Comma-separated best-to-worst labels")->required();
  generate->add_option("--policy", o.policy,
                       "fixed:<i> | uniform:<j> | explicit:<a+b=i;...>")->required();
  generate->add_option("--seed", o.seed, "Generator seed")->capture_default_str();

  auto* construct = app.add_subcommand("construct-inconsistent", "Inconsistent choice on 2k items");
  construct->add_option("--k", o.k, "Half the ground-set size (k >= 2)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    o.format = format == "text" ? Format::Text : Format::Json;
    return dispatch(app, o, out);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kExitDataError;
  }
}

}  // namespace harmchoice
