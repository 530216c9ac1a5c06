#include "harmchoice/elicit.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "harmchoice/axioms.hpp"

namespace harmchoice {

StrictPartialOrder::StrictPartialOrder(std::size_t n) : after_(n, 0) {
  ChoiceFunction::check_size(n);
}

StrictPartialOrder StrictPartialOrder::from_pairs(
    std::size_t n, std::span<const std::pair<Alternative, Alternative>> pairs) {
  StrictPartialOrder p(n);
  for (auto [a, b] : pairs) p.add(a, b);
  return p;
}

void StrictPartialOrder::add(Alternative a, Alternative b) {
  if (a >= size() || b >= size())
    throw Error(ErrorCode::IndexOutOfRange, "alternative outside the ground set");
  after_[a] |= Menu::Mask{1} << b;
}

std::vector<std::pair<Alternative, Alternative>> StrictPartialOrder::pairs() const {
  std::vector<std::pair<Alternative, Alternative>> out;
  for (Alternative a = 0; a < size(); ++a)
    for (Menu::Mask m = after_[a]; m != 0; m &= m - 1)
      out.emplace_back(a, static_cast<Alternative>(std::countr_zero(m)));
  return out;
}

StrictPartialOrder StrictPartialOrder::transitive_closure() const {
  StrictPartialOrder out = *this;
  const std::size_t n = size();
  // Warshall over bitmask rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if ((out.after_[a] >> k) & 1u) out.after_[a] |= out.after_[k];
  return out;
}

bool StrictPartialOrder::is_valid() const {
  for (Alternative a = 0; a < size(); ++a) {
    if (precedes(a, a)) return false;
    for (Menu::Mask m = after_[a]; m != 0; m &= m - 1) {
      const auto b = static_cast<Alternative>(std::countr_zero(m));
      if (precedes(b, a)) return false;
      if ((after_[b] & ~after_[a]) != 0) return false;
    }
  }
  return true;
}

std::vector<LinearOrder> elicit_weakly_harmful(const ChoiceFunction& c) {
  const auto witnesses = constant_selection_witnesses(c);
  if (!witnesses)
    throw Error(ErrorCode::NotWeaklyHarmful,
                "no alternative is selected in every reversal (or WARP holds)");
  const std::size_t n = c.size();
  const Menu::Mask end = Menu::Mask{1} << n;
  std::vector<LinearOrder> out;
  for (Alternative top : *witnesses) {
    StrictPartialOrder rel(n);
    for (Alternative y = 0; y < n; ++y)
      if (y != top) rel.add(top, y);
    for (Menu::Mask m = 1; m < end; ++m) {
      if ((m >> top) & 1u) continue;
      const Alternative y = c.pick(m);
      for (Menu::Mask z = m & ~(Menu::Mask{1} << y); z != 0; z &= z - 1)
        rel.add(y, static_cast<Alternative>(std::countr_zero(z)));
    }
    // The relation is a linear order: each alternative has a distinct number
    // of successors, which fixes its rank.
    std::vector<Alternative> ranking(n, static_cast<Alternative>(n));
    for (Alternative a = 0; a < n; ++a) {
      const auto below = static_cast<std::size_t>(std::popcount(rel.successors(a)));
      const std::size_t pos = n - 1 - below;
      if (below >= n || ranking[pos] != n || !rel.is_valid())
        throw Error(ErrorCode::CycleDetected,
                    "elicited relation for witness " + std::to_string(top) +
                        " is not a linear order");
      ranking[pos] = a;
    }
    out.emplace_back(std::move(ranking));
  }
  return out;
}

StrictPartialOrder elicit_partial(const ChoiceFunction& c, std::span<const Alternative> witness) {
  const std::size_t n = c.size();
  Menu::Mask items = 0;
  for (Alternative x : witness) {
    if (x >= n || ((items >> x) & 1u))
      throw Error(ErrorCode::InvalidWitness, "witness items must be distinct alternatives");
    items |= Menu::Mask{1} << x;
  }
  const int j = static_cast<int>(witness.size());
  if (j < 1 || static_cast<std::size_t>(j) >= n)
    throw Error(ErrorCode::InvalidWitness, "witness size must lie in 1..n-1");
  const ReversalGraph graph = ReversalGraph::of(c);
  if (!cns_no_small_cover(graph, j) || !cns_candidate_ok(graph, items))
    throw Error(ErrorCode::InvalidWitness,
                "items do not witness constant nonreciprocal selection of " +
                    std::to_string(j) + " items");

  StrictPartialOrder rel(n);
  for (std::size_t g = 0; g < witness.size(); ++g) {
    for (std::size_t h = g + 1; h < witness.size(); ++h) rel.add(witness[g], witness[h]);
    for (Alternative y = 0; y < n; ++y)
      if (!((items >> y) & 1u)) rel.add(witness[g], y);
  }
  const Menu::Mask end = Menu::Mask{1} << n;
  for (Menu::Mask m = 1; m < end; ++m) {
    const Alternative y = c.pick(m);
    if ((items >> y) & 1u) continue;
    for (Menu::Mask z = m & ~items & ~(Menu::Mask{1} << y); z != 0; z &= z - 1)
      rel.add(y, static_cast<Alternative>(std::countr_zero(z)));
  }
  StrictPartialOrder closed = rel.transitive_closure();
  if (!closed.is_valid())
    throw Error(ErrorCode::InvalidWitness, "elicited relation is cyclic");
  return closed;
}

namespace {

// predecessors[b]: mask of a with a before b.
std::vector<Menu::Mask> predecessor_masks(const StrictPartialOrder& p) {
  std::vector<Menu::Mask> pred(p.size(), 0);
  for (auto [a, b] : p.pairs()) pred[b] |= Menu::Mask{1} << a;
  return pred;
}

}  // namespace

LinearOrder extend_linear(const StrictPartialOrder& p) {
  const std::size_t n = p.size();
  const auto pred = predecessor_masks(p);
  Menu::Mask placed = 0;
  std::vector<Alternative> ranking;
  ranking.reserve(n);
  while (ranking.size() < n) {
    bool progressed = false;
    for (Alternative a = 0; a < n; ++a) {
      if (((placed >> a) & 1u) || (pred[a] & ~placed) != 0) continue;
      ranking.push_back(a);
      placed |= Menu::Mask{1} << a;
      progressed = true;
      break;
    }
    if (!progressed) throw Error(ErrorCode::CycleDetected, "relation contains a cycle");
  }
  return LinearOrder(std::move(ranking));
}

ExtensionList all_extensions(const StrictPartialOrder& p, std::size_t cap) {
  const std::size_t n = p.size();
  const auto pred = predecessor_masks(p);
  const Menu::Mask full = (Menu::Mask{1} << n) - 1;

  // ways[S]: number of ways to finish an extension once the set S is placed.
  std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
  ways[full] = 1;
  for (Menu::Mask s = full; s-- > 0;) {
    std::uint64_t w = 0;
    for (Alternative a = 0; a < n; ++a)
      if (!((s >> a) & 1u) && (pred[a] & ~s) == 0) w += ways[s | (Menu::Mask{1} << a)];
    ways[s] = w;
  }
  if (ways[0] == 0) throw Error(ErrorCode::CycleDetected, "relation contains a cycle");

  ExtensionList out;
  out.total = ways[0];
  std::vector<Alternative> prefix;
  auto walk = [&](auto&& self, Menu::Mask placed) -> void {
    if (out.orders.size() >= cap) return;
    if (placed == full) {
      out.orders.emplace_back(prefix);
      return;
    }
    for (Alternative a = 0; a < n; ++a) {
      if (((placed >> a) & 1u) || (pred[a] & ~placed) != 0) continue;
      prefix.push_back(a);
      self(self, placed | (Menu::Mask{1} << a));
      prefix.pop_back();
      if (out.orders.size() >= cap) return;
    }
  };
  walk(walk, 0);
  return out;
}

}  // namespace harmchoice
