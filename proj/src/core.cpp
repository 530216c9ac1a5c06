#include "harmchoice/core.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <numeric>

namespace harmchoice {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGroundSet: return "InvalidGroundSet";
    case ErrorCode::InvalidMenu: return "InvalidMenu";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::MissingMenu: return "MissingMenu";
    case ErrorCode::DuplicateMenu: return "DuplicateMenu";
    case ErrorCode::PickNotInMenu: return "PickNotInMenu";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidJ: return "InvalidJ";
    case ErrorCode::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::NotWeaklyHarmful: return "NotWeaklyHarmful";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NoCharacterizingJ: return "NoCharacterizingJ";
    case ErrorCode::CrossCheckMismatch: return "CrossCheckMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- GroundSet

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty())
    throw Error(ErrorCode::InvalidGroundSet, "ground set needs at least one alternative");
  std::vector<std::string_view> sorted(labels_.begin(), labels_.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].empty())
      throw Error(ErrorCode::InvalidGroundSet, "alternative labels must be non-empty");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw Error(ErrorCode::InvalidGroundSet,
                  "duplicate alternative label '" + std::string(sorted[i]) + "'");
  }
}

GroundSet GroundSet::letters(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (n <= 26)
      labels.emplace_back(1, static_cast<char>('a' + i));
    else
      labels.push_back("a" + std::to_string(i + 1));
  }
  return GroundSet(std::move(labels));
}

std::optional<Alternative> GroundSet::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Alternative>(i);
  return std::nullopt;
}

// --------------------------------------------------------------------- Menu

Menu Menu::from_mask(Mask mask) {
  if (mask == 0) throw Error(ErrorCode::InvalidMenu, "menus must be nonempty");
  return Menu(mask);
}

Menu Menu::of(std::initializer_list<Alternative> members) {
  return of(std::span<const Alternative>(members.begin(), members.size()));
}

Menu Menu::of(std::span<const Alternative> members) {
  Mask mask = 0;
  for (Alternative a : members) {
    if (a >= 32) throw Error(ErrorCode::InvalidMenu, "alternative index out of range");
    mask |= Mask{1} << a;
  }
  return from_mask(mask);
}

Menu Menu::full(std::size_t n) {
  if (n == 0 || n > 31) throw Error(ErrorCode::InvalidMenu, "bad ground-set size");
  return Menu((Mask{1} << n) - 1);
}

std::size_t Menu::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<Alternative> Menu::members() const {
  std::vector<Alternative> out;
  for (Mask m = mask_; m != 0; m &= m - 1)
    out.push_back(static_cast<Alternative>(std::countr_zero(m)));
  return out;
}

bool Menu::fits(std::size_t n) const noexcept {
  return n >= 32 || (mask_ >> n) == 0;
}

bool canonical_less(Menu lhs, Menu rhs) noexcept {
  const int ls = std::popcount(lhs.mask());
  const int rs = std::popcount(rhs.mask());
  if (ls != rs) return ls < rs;
  const Menu::Mask diff = lhs.mask() ^ rhs.mask();
  if (diff == 0) return false;
  // Equal sizes: the sorted lists first differ at the smallest element of
  // the symmetric difference, and whoever owns it sorts first.
  return (lhs.mask() & (diff & (~diff + 1))) != 0;
}

MenuOrder::MenuOrder(std::size_t n) : n_(n) {
  const Menu::Mask end = Menu::Mask{1} << n;
  menus_.reserve(end - 1);
  for (Menu::Mask m = 1; m < end; ++m) menus_.push_back(Menu::from_mask(m));
  std::sort(menus_.begin(), menus_.end(), canonical_less);
  rank_.assign(end, 0);
  for (std::size_t r = 0; r < menus_.size(); ++r)
    rank_[menus_[r].mask()] = static_cast<std::uint32_t>(r);
}

const MenuOrder& MenuOrder::of(std::size_t n) {
  ChoiceFunction::check_size(n);
  static std::array<std::once_flag, kMaxMenuAlternatives + 1> flags;
  static std::array<std::unique_ptr<MenuOrder>, kMaxMenuAlternatives + 1> cache;
  std::call_once(flags[n], [n] { cache[n].reset(new MenuOrder(n)); });
  return *cache[n];
}

// -------------------------------------------------------------- LinearOrder

LinearOrder::LinearOrder(std::vector<Alternative> ranking) : ranking_(std::move(ranking)) {
  if (ranking_.empty()) throw Error(ErrorCode::InvalidOrder, "empty order");
  position_.assign(ranking_.size(), static_cast<std::uint32_t>(ranking_.size()));
  for (std::size_t p = 0; p < ranking_.size(); ++p) {
    const Alternative a = ranking_[p];
    if (a >= ranking_.size() || position_[a] != ranking_.size())
      throw Error(ErrorCode::InvalidOrder, "ranking is not a permutation of 0..n-1");
    position_[a] = static_cast<std::uint32_t>(p);
  }
}

LinearOrder LinearOrder::identity(std::size_t n) {
  std::vector<Alternative> r(n);
  std::iota(r.begin(), r.end(), Alternative{0});
  return LinearOrder(std::move(r));
}

LinearOrder LinearOrder::reversed() const {
  return LinearOrder(std::vector<Alternative>(ranking_.rbegin(), ranking_.rend()));
}

Alternative max_of(Menu menu, const LinearOrder& order) {
  if (!menu.fits(order.size()))
    throw Error(ErrorCode::InvalidMenu, "menu is not over the order's ground set");
  for (Alternative a : order.ranking())
    if (menu.contains(a)) return a;
  throw Error(ErrorCode::InvalidMenu, "menu is empty");
}

// ----------------------------------------------------------- ChoiceFunction

void ChoiceFunction::check_size(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidGroundSet, "ground set is empty");
  if (n > kMaxMenuAlternatives)
    throw Error(ErrorCode::GroundSetTooLarge,
                "menu enumeration supports at most " +
                    std::to_string(kMaxMenuAlternatives) + " alternatives, got " +
                    std::to_string(n));
}

ChoiceFunction ChoiceFunction::from_picks(std::size_t n, std::vector<std::uint8_t> picks) {
  check_size(n);
  if (picks.size() != (std::size_t{1} << n))
    throw Error(ErrorCode::MissingMenu, "pick table must have 2^n entries");
  picks[0] = 0;
  for (Menu::Mask m = 1; m < picks.size(); ++m)
    if (picks[m] >= n || ((m >> picks[m]) & 1u) == 0)
      throw Error(ErrorCode::PickNotInMenu,
                  "pick " + std::to_string(picks[m]) + " is not in menu mask " +
                      std::to_string(m));
  return ChoiceFunction(n, std::move(picks));
}

ChoiceFunction ChoiceFunction::maximizing(const LinearOrder& order) {
  return tabulate(order.size(), [&](Menu m) { return max_of(m, order); });
}

// ---------------------------------------------------------------- validation

std::string format_menu(Menu menu, const GroundSet& ground) {
  std::string out = "{";
  bool first = true;
  for (Alternative a : menu.members()) {
    if (!first) out += ',';
    out += a < ground.size() ? ground.label(a) : "#" + std::to_string(a);
    first = false;
  }
  return out + "}";
}

std::string format_order(const LinearOrder& order, const GroundSet& ground) {
  std::string out;
  for (std::size_t p = 0; p < order.size(); ++p) {
    if (p) out += ',';
    out += ground.label(order.at(p));
  }
  return out;
}

LinearOrder parse_order(std::string_view spec, const GroundSet& ground) {
  std::vector<Alternative> ranking;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find(',', start);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view tok = spec.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    auto a = ground.find(tok);
    if (!a) throw Error(ErrorCode::InvalidOrder, "unknown alternative '" + std::string(tok) + "'");
    ranking.push_back(*a);
    start = end + 1;
  }
  if (ranking.size() != ground.size())
    throw Error(ErrorCode::InvalidOrder, "order must list every alternative exactly once");
  return LinearOrder(std::move(ranking));
}

ValidatedChoice validate_choice(std::span<const ChoiceRow> rows, const GroundSet& ground) {
  const std::size_t n = ground.size();
  ChoiceFunction::check_size(n);
  const std::size_t table = std::size_t{1} << n;
  constexpr std::uint8_t kUnset = 0xff;
  std::vector<std::uint8_t> picks(table, kUnset);
  std::vector<std::size_t> seen_at(table, 0);

  auto where = [](std::size_t line) {
    return line ? " (row " + std::to_string(line) + ")" : std::string{};
  };

  for (std::size_t r = 0; r < rows.size(); ++r) {
    const ChoiceRow& row = rows[r];
    const std::size_t line = row.line ? row.line : r + 1;
    if (!row.menu.fits(n))
      throw Error(ErrorCode::InvalidMenu, "menu refers to unknown alternatives" + where(line));
    if (!row.menu.contains(row.pick))
      throw Error(ErrorCode::PickNotInMenu,
                  "pick " + (row.pick < n ? ground.label(row.pick) : std::to_string(row.pick)) +
                      " is not a member of " + format_menu(row.menu, ground) + where(line));
    const Menu::Mask m = row.menu.mask();
    if (picks[m] != kUnset)
      throw Error(ErrorCode::DuplicateMenu,
                  "menu " + format_menu(row.menu, ground) + " appears at rows " +
                      std::to_string(seen_at[m]) + " and " + std::to_string(line));
    picks[m] = static_cast<std::uint8_t>(row.pick);
    seen_at[m] = line;
  }

  std::vector<std::string> warnings;
  std::vector<Menu> missing;
  for (Menu menu : MenuOrder::of(n).menus()) {
    const Menu::Mask m = menu.mask();
    if (picks[m] != kUnset) continue;
    if (menu.size() == 1) {
      picks[m] = static_cast<std::uint8_t>(std::countr_zero(m));
      warnings.push_back("singleton menu " + format_menu(menu, ground) + " added with its forced pick");
    } else {
      missing.push_back(menu);
    }
  }
  if (!missing.empty()) {
    std::string msg = std::to_string(missing.size()) + " menu(s) missing:";
    for (Menu menu : missing) msg += " " + format_menu(menu, ground);
    throw Error(ErrorCode::MissingMenu, msg);
  }
  picks[0] = 0;
  return {ChoiceFunction::from_picks(n, std::move(picks)), std::move(warnings)};
}

}  // namespace harmchoice
