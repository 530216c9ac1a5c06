#pragma once

// Recovering the latent preference behind a self-punishing choice.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "harmchoice/core.hpp"

namespace harmchoice {

/// Relation "a strictly before b" over n alternatives, as successor bitmasks.
/// Construction does not enforce the partial-order invariant; use is_valid().
class StrictPartialOrder {
 public:
  explicit StrictPartialOrder(std::size_t n);
  static StrictPartialOrder from_pairs(std::size_t n,
                                       std::span<const std::pair<Alternative, Alternative>> pairs);

  std::size_t size() const noexcept { return after_.size(); }
  void add(Alternative a, Alternative b);
  bool precedes(Alternative a, Alternative b) const { return ((after_.at(a) >> b) & 1u) != 0; }
  Menu::Mask successors(Alternative a) const { return after_.at(a); }
  /// Ordered pairs, sorted by (a, b).
  std::vector<std::pair<Alternative, Alternative>> pairs() const;

  StrictPartialOrder transitive_closure() const;
  /// Irreflexive, asymmetric and transitive.
  bool is_valid() const;

  friend bool operator==(const StrictPartialOrder&, const StrictPartialOrder&) = default;

 private:
  std::vector<Menu::Mask> after_;
};

/// For each item selected in every reversal: that item on top, then y above z
/// whenever y is chosen from a menu containing z but not the item.
/// Throws NotWeaklyHarmful unless such an item exists.
std::vector<LinearOrder> elicit_weakly_harmful(const ChoiceFunction& c);

/// Closure of: witness items in the given order, witness items above all
/// others, and y above z for non-witness y, z when y is chosen from a menu
/// containing z. Throws InvalidWitness unless the items satisfy constant
/// nonreciprocal selection of |witness| items.
StrictPartialOrder elicit_partial(const ChoiceFunction& c, std::span<const Alternative> witness);

/// A linear extension; among available minimal elements the lowest index
/// (ground-set label order) is taken first. Throws CycleDetected.
LinearOrder extend_linear(const StrictPartialOrder& p);

struct ExtensionList {
  /// Lexicographic order, at most `cap` entries.
  std::vector<LinearOrder> orders;
  std::uint64_t total = 0;
};

/// Linear extensions in lexicographic order up to cap, with the exact total.
/// Throws CycleDetected on cyclic input.
ExtensionList all_extensions(const StrictPartialOrder& p, std::size_t cap);

}  // namespace harmchoice
