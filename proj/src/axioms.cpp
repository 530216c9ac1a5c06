#include "harmchoice/axioms.hpp"

#include <bit>
#include <string>

namespace harmchoice {

namespace {

Menu::Mask all_of(std::size_t n) { return (Menu::Mask{1} << n) - 1; }

// Visits the j-subsets of {0..n-1} in lexicographic order of their sorted
// member lists; stops early when visit returns true.
template <class Visit>
bool for_each_subset_lex(std::size_t n, std::size_t j, Visit&& visit) {
  if (j > n) return false;
  std::vector<std::size_t> idx(j);
  for (std::size_t i = 0; i < j; ++i) idx[i] = i;
  while (true) {
    Menu::Mask m = 0;
    for (std::size_t i : idx) m |= Menu::Mask{1} << i;
    if (visit(m)) return true;
    std::size_t k = j;
    while (k > 0 && idx[k - 1] == n - j + (k - 1)) --k;
    if (k == 0) return false;
    ++idx[k - 1];
    for (std::size_t i = k; i < j; ++i) idx[i] = idx[i - 1] + 1;
  }
}

void check_j(std::size_t n, int j) {
  if (j < 1 || static_cast<std::size_t>(j) + 1 > n)
    throw Error(ErrorCode::InvalidJ,
                "j = " + std::to_string(j) + " outside 1.." + std::to_string(n - 1));
}

}  // namespace

ReversalGraph ReversalGraph::of(const ChoiceFunction& c) {
  const std::size_t n = c.size();
  // revealed[x]: union of the menus from which x is chosen.
  std::vector<Menu::Mask> revealed(n, 0);
  const Menu::Mask end = Menu::Mask{1} << n;
  for (Menu::Mask m = 1; m < end; ++m) revealed[c.pick(m)] |= m;

  ReversalGraph g;
  g.adjacency_.assign(n, 0);
  for (Alternative x = 0; x < n; ++x)
    for (Alternative y = x + 1; y < n; ++y)
      if (((revealed[x] >> y) & 1u) && ((revealed[y] >> x) & 1u)) {
        g.adjacency_[x] |= Menu::Mask{1} << y;
        g.adjacency_[y] |= Menu::Mask{1} << x;
      }
  return g;
}

bool ReversalGraph::empty() const noexcept {
  for (Menu::Mask a : adjacency_)
    if (a) return false;
  return true;
}

bool ReversalGraph::complete() const noexcept {
  const Menu::Mask full = all_of(adjacency_.size());
  for (std::size_t a = 0; a < adjacency_.size(); ++a)
    if (adjacency_[a] != (full & ~(Menu::Mask{1} << a))) return false;
  return true;
}

std::size_t ReversalGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (Menu::Mask a : adjacency_) twice += static_cast<std::size_t>(std::popcount(a));
  return twice / 2;
}

bool ReversalGraph::covered_by(Menu::Mask set) const noexcept {
  for (std::size_t a = 0; a < adjacency_.size(); ++a)
    if (!((set >> a) & 1u) && (adjacency_[a] & ~set) != 0) return false;
  return true;
}

std::vector<Reversal> find_reversals(const ChoiceFunction& c) {
  const auto menus = MenuOrder::of(c.size()).menus();
  std::vector<Reversal> out;
  for (std::size_t i = 0; i < menus.size(); ++i) {
    const Menu a = menus[i];
    const Alternative pa = c(a);
    for (std::size_t k = i + 1; k < menus.size(); ++k) {
      const Menu b = menus[k];
      const Alternative pb = c(b);
      if (pa != pb && b.contains(pa) && a.contains(pb)) out.push_back({a, b, pa, pb});
    }
  }
  return out;
}

std::optional<Reversal> first_reversal_between(const ChoiceFunction& c, Alternative x,
                                               Alternative y) {
  if (x == y || x >= c.size() || y >= c.size()) return std::nullopt;
  std::optional<Menu> ax, by;
  // The canonically least pair is formed by the least menu on each side.
  for (Menu m : MenuOrder::of(c.size()).menus()) {
    const Alternative p = c(m);
    if (!ax && p == x && m.contains(y)) ax = m;
    if (!by && p == y && m.contains(x)) by = m;
    if (ax && by) break;
  }
  if (!ax || !by) return std::nullopt;
  if (canonical_less(*ax, *by)) return Reversal{*ax, *by, x, y};
  return Reversal{*by, *ax, y, x};
}

bool satisfies_warp(const ChoiceFunction& c) { return ReversalGraph::of(c).empty(); }

std::optional<std::vector<Alternative>> constant_selection_witnesses(const ChoiceFunction& c) {
  const ReversalGraph g = ReversalGraph::of(c);
  if (g.empty()) return std::nullopt;
  std::vector<Alternative> out;
  for (Alternative x = 0; x < c.size(); ++x)
    if (g.covered_by(Menu::Mask{1} << x)) out.push_back(x);
  if (out.empty()) return std::nullopt;
  return out;
}

bool cns_no_small_cover(const ReversalGraph& graph, int j) {
  const std::size_t n = graph.size();
  const Menu::Mask end = Menu::Mask{1} << n;
  // D ranges over every subset with |D| < j, the empty set included.
  for (Menu::Mask d = 0; d < end; ++d)
    if (std::popcount(d) < j && graph.covered_by(d)) return false;
  return true;
}

bool cns_candidate_ok(const ReversalGraph& graph, Menu::Mask items) {
  if (!graph.covered_by(items)) return false;
  for (Menu::Mask m = items; m != 0; m &= m - 1) {
    const auto x = static_cast<Alternative>(std::countr_zero(m));
    if ((graph.neighbours(x) & ~items) == 0) return false;
  }
  return true;
}

std::vector<Menu::Mask> cns_candidate_sets(const ReversalGraph& graph, int j) {
  std::vector<Menu::Mask> out;
  if (j < 1) return out;
  for_each_subset_lex(graph.size(), static_cast<std::size_t>(j), [&](Menu::Mask s) {
    if (cns_candidate_ok(graph, s)) out.push_back(s);
    return false;
  });
  return out;
}

CnsWitness make_cns_witness(const ChoiceFunction& c, const ReversalGraph& graph,
                            Menu::Mask items) {
  const MenuOrder& order = MenuOrder::of(c.size());
  auto key = [&](const Reversal& r) {
    return std::pair{order.rank(r.first), order.rank(r.second)};
  };
  CnsWitness w;
  for (Menu::Mask m = items; m != 0; m &= m - 1) {
    const auto x = static_cast<Alternative>(std::countr_zero(m));
    std::optional<Reversal> best;
    for (Menu::Mask out = graph.neighbours(x) & ~items; out != 0; out &= out - 1) {
      const auto y = static_cast<Alternative>(std::countr_zero(out));
      auto r = first_reversal_between(c, x, y);
      if (r && (!best || key(*r) < key(*best))) best = r;
    }
    if (!best)
      throw Error(ErrorCode::InvalidWitness,
                  "item " + std::to_string(x) + " has no reversal with an outside pick");
    w.items.push_back(x);
    w.paired_reversals.push_back(*best);
  }
  return w;
}

std::optional<CnsWitness> check_cns(const ChoiceFunction& c, const ReversalGraph& graph, int j) {
  check_j(c.size(), j);
  if (!cns_no_small_cover(graph, j)) return std::nullopt;
  std::optional<Menu::Mask> found;
  for_each_subset_lex(c.size(), static_cast<std::size_t>(j), [&](Menu::Mask s) {
    if (!cns_candidate_ok(graph, s)) return false;
    found = s;
    return true;
  });
  if (!found) return std::nullopt;
  return make_cns_witness(c, graph, *found);
}

std::optional<CnsWitness> check_cns(const ChoiceFunction& c, int j) {
  check_j(c.size(), j);
  return check_cns(c, ReversalGraph::of(c), j);
}

bool is_inconsistent(const ChoiceFunction& c) { return ReversalGraph::of(c).complete(); }

}  // namespace harmchoice
