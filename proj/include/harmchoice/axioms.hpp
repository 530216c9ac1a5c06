#pragma once

// WARP violations and the behavioral axioms built on them.
//
// Every axiom here depends on a choice only through its reversal graph: the
// unordered pairs {x, y} of alternatives that some reversal selects. An edge
// {x, y} exists iff x is chosen from some menu containing y and y is chosen
// from some menu containing x, so the graph is built in O(2^n * n) without
// listing reversals.

#include <optional>
#include <vector>

#include "harmchoice/core.hpp"

namespace harmchoice {

class ReversalGraph {
 public:
  static ReversalGraph of(const ChoiceFunction& c);

  std::size_t size() const noexcept { return adjacency_.size(); }
  Menu::Mask neighbours(Alternative a) const { return adjacency_.at(a); }
  bool co_selected(Alternative a, Alternative b) const {
    return ((adjacency_.at(a) >> b) & 1u) != 0;
  }
  bool empty() const noexcept;
  /// Every pair of distinct alternatives is co-selected.
  bool complete() const noexcept;
  std::size_t edge_count() const noexcept;
  /// True iff every reversal selects at least one member of `set`.
  bool covered_by(Menu::Mask set) const noexcept;

 private:
  std::vector<Menu::Mask> adjacency_;
};

/// All reversals in canonical order of (first, second). Quadratic in the menu count.
std::vector<Reversal> find_reversals(const ChoiceFunction& c);

/// The canonically first reversal whose picks are exactly {x, y}, if any.
std::optional<Reversal> first_reversal_between(const ChoiceFunction& c, Alternative x,
                                               Alternative y);

bool satisfies_warp(const ChoiceFunction& c);

/// Items selected in every reversal. Absent when WARP holds or no item qualifies.
std::optional<std::vector<Alternative>> constant_selection_witnesses(const ChoiceFunction& c);

/// Witness for constant nonreciprocal selection of j items: the items
/// (increasing index) and, per item, a reversal pairing it with an outside pick.
struct CnsWitness {
  std::vector<Alternative> items;
  std::vector<Reversal> paired_reversals;

  friend bool operator==(const CnsWitness&, const CnsWitness&) = default;
};

/// Condition (i): no set of fewer than j items is selected by every reversal.
bool cns_no_small_cover(const ReversalGraph& graph, int j);

/// Condition (ii) for one candidate set.
bool cns_candidate_ok(const ReversalGraph& graph, Menu::Mask items);

/// All j-sets satisfying condition (ii), in lexicographic order.
std::vector<Menu::Mask> cns_candidate_sets(const ReversalGraph& graph, int j);

/// First witness in lexicographic order, or nothing. Throws InvalidJ unless 1 <= j <= n-1.
std::optional<CnsWitness> check_cns(const ChoiceFunction& c, int j);
std::optional<CnsWitness> check_cns(const ChoiceFunction& c, const ReversalGraph& graph, int j);

/// Builds the witness for an explicit item set (assumed to satisfy condition (ii)).
CnsWitness make_cns_witness(const ChoiceFunction& c, const ReversalGraph& graph,
                            Menu::Mask items);

/// Every pair of distinct alternatives is co-selected by some reversal.
/// Vacuously true on a one-element ground set.
bool is_inconsistent(const ChoiceFunction& c);

}  // namespace harmchoice
