#pragma once

// Degree of self-punishment: the least, over base preferences, of the largest
// distortion index needed to explain every pick.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "harmchoice/axioms.hpp"
#include "harmchoice/core.hpp"

namespace harmchoice {

enum class SpMethod { BruteForce, Axiomatic, Both };

std::string_view to_string(SpMethod method);

/// Reports keep at most this many minimizing orders (the count stays exact).
inline constexpr std::size_t kMinimizingOrderCap = 100;

struct SpReport {
  int sp = 0;
  SpMethod method = SpMethod::Axiomatic;
  /// Brute force only: argmin orders in lexicographic order, truncated.
  std::vector<LinearOrder> minimizing_orders;
  std::uint64_t minimizing_order_count = 0;
  /// Axiomatic only, when sp >= 1.
  std::optional<CnsWitness> witness;

  friend bool operator==(const SpReport&, const SpReport&) = default;
};

/// Exhaustive minimum of min_max_index over all n! orders. Requires n <= 8.
SpReport sp_bruteforce(const ChoiceFunction& c, unsigned workers = 1);

/// Via the axioms: 0 under WARP, n-1 when inconsistent, otherwise the
/// unique j whose constant nonreciprocal selection holds.
SpReport sp_axiomatic(const ChoiceFunction& c);
SpReport sp_axiomatic(const ChoiceFunction& c, const ReversalGraph& graph);

/// Axiomatic always; also brute force when n <= 8, throwing
/// CrossCheckMismatch if the two disagree.
SpReport sp(const ChoiceFunction& c, unsigned workers = 1);

/// k-th permutation of 0..n-1 in lexicographic order.
std::vector<Alternative> nth_permutation(std::size_t n, std::uint64_t k);
std::uint64_t factorial(std::size_t n);

}  // namespace harmchoice
