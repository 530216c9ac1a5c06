#pragma once

// Surveys of the whole choice space, and generators of self-punishing choices.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "harmchoice/core.hpp"

namespace harmchoice {

/// Exhaustive enumeration is offered up to this ground-set size.
inline constexpr std::size_t kMaxCensusAlternatives = 4;

/// Seed used by randomized commands when none is given.
inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct Estimate {
  std::uint64_t hits = 0;
  double fraction = 0.0;
  /// 95% normal-approximation half-width.
  double half_width = 0.0;
};

struct CensusReport {
  std::size_t n = 0;
  bool exact = true;
  /// Number of choice functions on n items (product of menu sizes), decimal.
  std::string total;
  /// Exact mode: counts per sp value. Sampled mode: hits per sp value.
  std::map<int, std::uint64_t> counts_by_sp;
  /// Sampled mode only.
  std::map<int, Estimate> estimates_by_sp;
  std::uint64_t strongly_harmful = 0;
  /// strongly_harmful / total (exact) or / samples (sampled).
  double strongly_harmful_fraction = 0.0;
  double half_width = 0.0;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
};

/// Product over all menus of |A|, as a decimal string.
std::string count_choice_functions(std::size_t n);

/// Mixed-radix decoding: the choice with the given index, menus taken in
/// canonical order with the first menu as the least significant digit.
ChoiceFunction choice_at(std::size_t n, std::uint64_t index);

/// Exact sp distribution over every choice function. Requires 2 <= n <= 4.
CensusReport enumerate_census(std::size_t n, unsigned workers = 1);

/// Uniform sampling of choice functions (independent uniform pick per menu).
/// Results depend only on (n, samples, seed), never on the worker count.
CensusReport sample_census(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                           unsigned workers = 1);

struct FixedIndex {
  int index = 0;
};
struct UniformIndexUpTo {
  int cap = 0;
};
/// Non-singleton menus must all be listed; singletons default to index 0.
struct ExplicitIndices {
  std::vector<std::pair<Menu, int>> entries;
};
using IndexPolicy = std::variant<FixedIndex, UniformIndexUpTo, ExplicitIndices>;

/// Largest index a policy can assign.
int policy_cap(const IndexPolicy& policy);

struct GeneratedChoice {
  ChoiceFunction choice;
  /// Distortion index used per menu mask (entry 0 unused).
  std::vector<std::uint8_t> menu_index;
};

/// Simulates a decision maker who picks max(A, order_i(A)) with i(A) drawn
/// from the policy. Throws IndexOutOfRange if an index exceeds n-1.
GeneratedChoice generate_harmful(const LinearOrder& order, const IndexPolicy& policy,
                                 std::uint64_t seed = kDefaultSeed);

/// Inconsistent choice on 2k alternatives x*, x1..x(2k-1): c(X) = x*, the
/// (2k-1)-menu missing x(t) picks x(t-1), the x*-free (2k-2)-menu missing
/// x(t) picks x(t+1), indices wrapping cyclically over 1..2k-1; every other
/// menu picks its first member in label order. Requires 2 <= k <= 10.
Dataset construct_inconsistent(int k);

}  // namespace harmchoice
