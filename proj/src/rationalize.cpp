#include "harmchoice/rationalize.hpp"

#include <algorithm>
#include <bit>

#include "harmchoice/distortion.hpp"

namespace harmchoice {

namespace {

void check_same_ground(const ChoiceFunction& c, const LinearOrder& order) {
  if (c.size() != order.size())
    throw Error(ErrorCode::InvalidOrder, "order and choice are over different ground sets");
}

// Positions of every alternative under each distortion, flattened [i * n + a].
std::vector<std::uint8_t> family_positions(const LinearOrder& order) {
  const std::size_t n = order.size();
  const DistortionFamily family(order);
  std::vector<std::uint8_t> pos(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < n; ++p) pos[i * n + family[i].at(p)] = static_cast<std::uint8_t>(p);
  return pos;
}

// Smallest i with c(A) = max(A, order_i), by direct evaluation of each distortion.
int smallest_index(Menu::Mask menu, Alternative pick, std::size_t n,
                   const std::vector<std::uint8_t>& pos, int limit) {
  for (int i = 0; i <= limit; ++i) {
    const std::uint8_t* row = &pos[static_cast<std::size_t>(i) * n];
    const std::uint8_t pick_pos = row[pick];
    bool best = true;
    for (Menu::Mask m = menu; m != 0; m &= m - 1) {
      const auto a = static_cast<std::size_t>(std::countr_zero(m));
      if (row[a] < pick_pos) {
        best = false;
        break;
      }
    }
    if (best) return i;
  }
  return limit + 1;
}

}  // namespace

int SelfPunishmentRationalization::max_index() const {
  int best = 0;
  for (std::size_t m = 1; m < menu_index.size(); ++m) best = std::max<int>(best, menu_index[m]);
  return best;
}

SelfPunishmentRationalization canonical_rationalization(const ChoiceFunction& c,
                                                        const LinearOrder& order) {
  check_same_ground(c, order);
  std::vector<std::uint8_t> idx(std::size_t{1} << c.size(), 0);
  for (Menu::Mask m = 1; m < idx.size(); ++m)
    idx[m] = static_cast<std::uint8_t>(order.position(c.pick(m)));
  return {order, std::move(idx)};
}

bool validate_rationalization(const ChoiceFunction& c, const SelfPunishmentRationalization& r) {
  check_same_ground(c, r.base);
  const std::size_t n = c.size();
  if (r.menu_index.size() != (std::size_t{1} << n)) return false;
  const DistortionFamily family(r.base);
  for (Menu::Mask m = 1; m < r.menu_index.size(); ++m) {
    const std::size_t i = r.menu_index[m];
    if (i >= n) return false;
    if (max_of(Menu::from_mask(m), family[i]) != c.pick(m))
      return false;
  }
  return true;
}

std::vector<std::uint8_t> minimal_menu_indices(const ChoiceFunction& c, const LinearOrder& order) {
  check_same_ground(c, order);
  const std::size_t n = c.size();
  const auto pos = family_positions(order);
  std::vector<std::uint8_t> out(std::size_t{1} << n, 0);
  const int last = static_cast<int>(n) - 1;
  for (Menu::Mask m = 1; m < out.size(); ++m)
    out[m] = static_cast<std::uint8_t>(smallest_index(m, c.pick(m), n, pos, last));
  return out;
}

int min_max_index_bounded(const ChoiceFunction& c, const LinearOrder& order, int bound) {
  check_same_ground(c, order);
  const std::size_t n = c.size();
  const int last = static_cast<int>(n) - 1;
  bound = std::min(bound, last);
  const auto pos = family_positions(order);
  int worst = 0;
  const Menu::Mask end = Menu::Mask{1} << n;
  for (Menu::Mask m = 1; m < end; ++m) {
    const int i = smallest_index(m, c.pick(m), n, pos, bound);
    if (i > bound) return bound + 1;
    worst = std::max(worst, i);
  }
  return worst;
}

int min_max_index(const ChoiceFunction& c, const LinearOrder& order) {
  return min_max_index_bounded(c, order, static_cast<int>(c.size()) - 1);
}

}  // namespace harmchoice
