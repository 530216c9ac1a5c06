#include "harmchoice/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace harmchoice {

namespace {

using json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_labels(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string_view::npos) end = s.size();
    out.emplace_back(trim(s.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

Error parse_error(std::size_t row, const std::string& what) {
  return Error(ErrorCode::ParseError, "row " + std::to_string(row) + ": " + what);
}

Alternative lookup(const GroundSet& ground, const std::string& label, std::size_t row) {
  auto a = ground.find(label);
  if (!a) throw parse_error(row, "unknown alternative '" + label + "'");
  return *a;
}

Dataset finish(GroundSet ground, const std::vector<ChoiceRow>& rows) {
  auto validated = validate_choice(rows, ground);
  return {std::move(ground), std::move(validated.choice), std::move(validated.warnings)};
}

}  // namespace

Dataset parse_dataset_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "dataset must be a JSON object");
    if (doc.contains("version") && doc.at("version").get<int>() != kDatasetFormatVersion)
      throw Error(ErrorCode::ParseError,
                  "unsupported dataset version " + doc.at("version").dump());
    GroundSet ground(doc.at("alternatives").get<std::vector<std::string>>());
    std::vector<ChoiceRow> rows;
    std::size_t row = 0;
    for (const auto& entry : doc.at("choices")) {
      ++row;
      std::vector<Alternative> members;
      for (const auto& label : entry.at("menu"))
        members.push_back(lookup(ground, label.get<std::string>(), row));
      if (members.empty()) throw parse_error(row, "empty menu");
      const Alternative pick = lookup(ground, entry.at("choice").get<std::string>(), row);
      rows.push_back({Menu::of(members), pick, row});
    }
    return finish(std::move(ground), rows);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed dataset: ") + e.what());
  }
}

Dataset parse_dataset_text(std::string_view text) {
  struct RawRow {
    std::vector<std::string> menu;
    std::string pick;
    std::size_t line;
  };
  std::vector<std::string> declared;
  std::vector<std::string> seen;
  std::vector<RawRow> raw;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.rfind("alternatives:", 0) == 0) {
      declared = split_labels(line.substr(13));
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw parse_error(line_no, "expected 'menu -> choice'");
    RawRow r{split_labels(line.substr(0, arrow)), std::string(trim(line.substr(arrow + 2))), line_no};
    if (r.pick.empty()) throw parse_error(line_no, "missing choice");
    for (const auto& label : r.menu) {
      if (label.empty()) throw parse_error(line_no, "empty alternative label");
      if (std::find(seen.begin(), seen.end(), label) == seen.end()) seen.push_back(label);
    }
    raw.push_back(std::move(r));
  }

  GroundSet ground(declared.empty() ? seen : declared);
  std::vector<ChoiceRow> rows;
  for (const auto& r : raw) {
    std::vector<Alternative> members;
    for (const auto& label : r.menu) members.push_back(lookup(ground, label, r.line));
    rows.push_back({Menu::of(members), lookup(ground, r.pick, r.line), r.line});
  }
  return finish(std::move(ground), rows);
}

Dataset parse_dataset(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_dataset_json(text);
  return parse_dataset_text(text);
}

Dataset load_dataset(const std::string& path) {
  std::string content;
  if (path == "-") {
    content.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    content.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_dataset(content);
}

std::string dataset_to_json(const GroundSet& ground, const ChoiceFunction& choice) {
  json doc;
  doc["version"] = kDatasetFormatVersion;
  doc["alternatives"] = ground.labels();
  json rows = json::array();
  for (Menu menu : MenuOrder::of(choice.size()).menus()) {
    json labels = json::array();
    for (Alternative a : menu.members()) labels.push_back(ground.label(a));
    rows.push_back({{"menu", std::move(labels)}, {"choice", ground.label(choice(menu))}});
  }
  doc["choices"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string dataset_to_text(const GroundSet& ground, const ChoiceFunction& choice) {
  std::ostringstream out;
  out << "alternatives: ";
  for (std::size_t i = 0; i < ground.size(); ++i) out << (i ? ", " : "") << ground.label(static_cast<Alternative>(i));
  out << "\n";
  for (Menu menu : MenuOrder::of(choice.size()).menus()) {
    bool first = true;
    for (Alternative a : menu.members()) {
      out << (first ? "" : ", ") << ground.label(a);
      first = false;
    }
    out << " -> " << ground.label(choice(menu)) << "\n";
  }
  return out.str();
}

}  // namespace harmchoice
