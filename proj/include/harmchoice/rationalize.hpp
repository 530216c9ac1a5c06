#pragma once

#include <cstdint>
#include <vector>

#include "harmchoice/core.hpp"

namespace harmchoice {

/// Assigns to every menu the index of a harmful distortion of `base`.
/// Distortions are re-derived on demand; only indices are stored.
struct SelfPunishmentRationalization {
  LinearOrder base;
  /// Indexed by menu mask; entry 0 is unused.
  std::vector<std::uint8_t> menu_index;

  int index(Menu menu) const { return menu_index.at(menu.mask()); }
  int max_index() const;
};

/// Index of each menu = number of alternatives ranked above c(A) in `order`
/// (over the whole ground set, not just A). Always a valid rationalization.
SelfPunishmentRationalization canonical_rationalization(const ChoiceFunction& c,
                                                        const LinearOrder& order);

/// True iff c(A) is the maximum of A under the assigned distortion, for every menu.
bool validate_rationalization(const ChoiceFunction& c, const SelfPunishmentRationalization& r);

/// Smallest feasible distortion index per menu (indexed by mask, entry 0 unused).
std::vector<std::uint8_t> minimal_menu_indices(const ChoiceFunction& c, const LinearOrder& order);

/// Max over menus of the smallest distortion index explaining the pick: the
/// best achievable max index with `order` as the base preference.
int min_max_index(const ChoiceFunction& c, const LinearOrder& order);

/// Same value, giving up as soon as it is known to exceed `bound`; returns bound + 1 then.
int min_max_index_bounded(const ChoiceFunction& c, const LinearOrder& order, int bound);

}  // namespace harmchoice
