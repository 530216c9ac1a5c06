#pragma once

// Ground sets, menus, linear orders and choice functions.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace harmchoice {

/// Dense index of an alternative, in ground-set label order.
using Alternative = std::uint32_t;

/// Operations that enumerate every menu accept at most this many alternatives.
inline constexpr std::size_t kMaxMenuAlternatives = 20;

/// Exhaustive search over all linear orders is capped here (8! = 40320).
inline constexpr std::size_t kMaxBruteForceAlternatives = 8;

enum class ErrorCode {
  InvalidGroundSet,
  InvalidMenu,
  InvalidOrder,
  MissingMenu,
  DuplicateMenu,
  PickNotInMenu,
  IndexOutOfRange,
  InvalidJ,
  GroundSetTooLarge,
  NotWeaklyHarmful,
  InvalidWitness,
  CycleDetected,
  NoCharacterizingJ,
  CrossCheckMismatch,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class GroundSet {
 public:
  /// Labels must be non-empty and pairwise distinct; at least one is required.
  explicit GroundSet(std::vector<std::string> labels);

  /// Ground set labelled a, b, c, ... (falls back to a1, a2, ... past 26).
  static GroundSet letters(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Alternative a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Alternative> find(std::string_view label) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A nonempty set of alternatives, stored as a bitmask over indices.
class Menu {
 public:
  using Mask = std::uint32_t;

  /// Throws InvalidMenu on the empty mask.
  static Menu from_mask(Mask mask);
  static Menu of(std::initializer_list<Alternative> members);
  static Menu of(std::span<const Alternative> members);
  static Menu full(std::size_t n);

  Mask mask() const noexcept { return mask_; }
  std::size_t size() const noexcept;
  bool contains(Alternative a) const noexcept {
    return a < 32 && ((mask_ >> a) & 1u) != 0;
  }
  bool is_subset_of(Menu other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }
  /// Members in increasing index order.
  std::vector<Alternative> members() const;
  /// True iff every member is below n.
  bool fits(std::size_t n) const noexcept;

  friend bool operator==(Menu, Menu) = default;

 private:
  explicit Menu(Mask mask) : mask_(mask) {}
  Mask mask_ = 1;
};

/// Size first, then lexicographic on the sorted member lists.
bool canonical_less(Menu lhs, Menu rhs) noexcept;

/// Canonical menu order over a ground set of size n, cached per n.
class MenuOrder {
 public:
  static const MenuOrder& of(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  /// All 2^n - 1 menus, canonically sorted.
  std::span<const Menu> menus() const noexcept { return menus_; }
  /// Canonical rank of a menu (0 for the first singleton).
  std::uint32_t rank(Menu menu) const { return rank_[menu.mask()]; }

 private:
  explicit MenuOrder(std::size_t n);
  std::size_t n_;
  std::vector<Menu> menus_;
  std::vector<std::uint32_t> rank_;
};

/// Strict total order, best first.
class LinearOrder {
 public:
  /// Throws InvalidOrder unless ranking is a permutation of 0..n-1.
  explicit LinearOrder(std::vector<Alternative> ranking);

  static LinearOrder identity(std::size_t n);

  std::size_t size() const noexcept { return ranking_.size(); }
  Alternative at(std::size_t position) const { return ranking_.at(position); }
  Alternative best() const { return ranking_.front(); }
  std::size_t position(Alternative a) const { return position_.at(a); }
  bool prefers(Alternative a, Alternative b) const {
    return position(a) < position(b);
  }
  const std::vector<Alternative>& ranking() const noexcept { return ranking_; }
  LinearOrder reversed() const;

  friend bool operator==(const LinearOrder& lhs, const LinearOrder& rhs) {
    return lhs.ranking_ == rhs.ranking_;
  }
  friend auto operator<=>(const LinearOrder& lhs, const LinearOrder& rhs) {
    return lhs.ranking_ <=> rhs.ranking_;
  }

 private:
  std::vector<Alternative> ranking_;
  std::vector<std::uint32_t> position_;
};

/// The member of menu ranked highest by order.
Alternative max_of(Menu menu, const LinearOrder& order);

/// Total choice function over all 2^n - 1 menus of an n-element ground set.
class ChoiceFunction {
 public:
  /// picks[mask] is the pick from menu `mask`; picks[0] is ignored.
  /// Throws PickNotInMenu / InvalidMenu on malformed tables.
  static ChoiceFunction from_picks(std::size_t n, std::vector<std::uint8_t> picks);

  /// Builds c(A) = pick(A) for every menu.
  template <class PickFn>
  static ChoiceFunction tabulate(std::size_t n, PickFn&& pick) {
    check_size(n);
    std::vector<std::uint8_t> picks(std::size_t{1} << n, 0);
    for (Menu::Mask m = 1; m < picks.size(); ++m)
      picks[m] = static_cast<std::uint8_t>(pick(Menu::from_mask(m)));
    return from_picks(n, std::move(picks));
  }

  /// The rational choice induced by an order.
  static ChoiceFunction maximizing(const LinearOrder& order);

  std::size_t size() const noexcept { return n_; }
  std::size_t menu_count() const noexcept { return picks_.size() - 1; }
  Alternative operator()(Menu menu) const { return picks_[menu.mask()]; }
  Alternative pick(Menu::Mask mask) const { return picks_[mask]; }
  std::span<const std::uint8_t> picks() const noexcept { return picks_; }

  friend bool operator==(const ChoiceFunction&, const ChoiceFunction&) = default;

  static void check_size(std::size_t n);

 private:
  ChoiceFunction(std::size_t n, std::vector<std::uint8_t> picks)
      : n_(n), picks_(std::move(picks)) {}
  std::size_t n_ = 0;
  std::vector<std::uint8_t> picks_;
};

/// Atomic WARP violation. first precedes second in canonical menu order.
struct Reversal {
  Menu first;
  Menu second;
  Alternative first_pick;
  Alternative second_pick;

  friend bool operator==(const Reversal&, const Reversal&) = default;
};

/// One observed row of a dataset. line is 0 when the row has no source location.
struct ChoiceRow {
  Menu menu;
  Alternative pick;
  std::size_t line = 0;
};

struct ValidatedChoice {
  ChoiceFunction choice;
  std::vector<std::string> warnings;
};

/// Checks totality and membership. Missing singleton rows are filled in and
/// reported as warnings; any other gap is a MissingMenu error.
ValidatedChoice validate_choice(std::span<const ChoiceRow> rows, const GroundSet& ground);

/// Curly-brace listing of a menu's labels, e.g. {x,y}.
std::string format_menu(Menu menu, const GroundSet& ground);
/// Comma-separated best-to-worst labels.
std::string format_order(const LinearOrder& order, const GroundSet& ground);
/// Parses a comma-separated best-to-worst label list.
LinearOrder parse_order(std::string_view spec, const GroundSet& ground);

/// Ground set plus a validated choice over it.
struct Dataset {
  GroundSet ground;
  ChoiceFunction choice;
  std::vector<std::string> warnings;
};

}  // namespace harmchoice
