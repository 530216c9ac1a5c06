#include "harmchoice/census.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>

#include "harmchoice/axioms.hpp"
#include "harmchoice/degree.hpp"
#include "harmchoice/distortion.hpp"
#include "harmchoice/parallel.hpp"

namespace harmchoice {

namespace {

constexpr std::uint64_t kChoicesPerChunk = 1024;
constexpr std::uint64_t kSamplesPerChunk = 4096;

// Unbiased draw from [0, bound) by rejection; independent of the standard
// library's distribution implementations so streams are portable.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

std::mt19937_64 chunk_rng(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

double half_width_95(std::uint64_t hits, std::uint64_t samples) {
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

struct Tally {
  std::vector<std::uint64_t> by_sp;
  std::uint64_t strongly = 0;
};

}  // namespace

std::string count_choice_functions(std::size_t n) {
  ChoiceFunction::check_size(n);
  boost::multiprecision::cpp_int total = 1;
  const Menu::Mask end = Menu::Mask{1} << n;
  for (Menu::Mask m = 1; m < end; ++m) total *= std::popcount(m);
  return total.str();
}

ChoiceFunction choice_at(std::size_t n, std::uint64_t index) {
  const auto menus = MenuOrder::of(n).menus();
  std::vector<std::uint8_t> picks(std::size_t{1} << n, 0);
  for (Menu menu : menus) {
    const auto members = menu.members();
    picks[menu.mask()] = static_cast<std::uint8_t>(members[index % members.size()]);
    index /= members.size();
  }
  return ChoiceFunction::from_picks(n, std::move(picks));
}

CensusReport enumerate_census(std::size_t n, unsigned workers) {
  if (n < 2) throw Error(ErrorCode::InvalidGroundSet, "census needs at least 2 alternatives");
  if (n > kMaxCensusAlternatives)
    throw Error(ErrorCode::GroundSetTooLarge,
                "exhaustive census supports at most " +
                    std::to_string(kMaxCensusAlternatives) + " alternatives");
  const std::uint64_t total = std::stoull(count_choice_functions(n));
  const auto menus = MenuOrder::of(n).menus();
  const std::size_t chunks = static_cast<std::size_t>((total + kChoicesPerChunk - 1) / kChoicesPerChunk);
  std::vector<Tally> tallies(chunks);

  for_each_chunk(chunks, workers, [&](std::size_t k) {
    Tally& t = tallies[k];
    t.by_sp.assign(n, 0);
    const std::uint64_t begin = k * kChoicesPerChunk;
    const std::uint64_t end = std::min(total, begin + kChoicesPerChunk);
    // Mixed-radix odometer over the canonical menu list.
    std::vector<std::size_t> digit(menus.size(), 0);
    std::vector<std::vector<Alternative>> members;
    members.reserve(menus.size());
    for (Menu m : menus) members.push_back(m.members());
    std::uint64_t rest = begin;
    for (std::size_t i = 0; i < menus.size(); ++i) {
      digit[i] = rest % members[i].size();
      rest /= members[i].size();
    }
    std::vector<std::uint8_t> picks(std::size_t{1} << n, 0);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      for (std::size_t i = 0; i < menus.size(); ++i)
        picks[menus[i].mask()] = static_cast<std::uint8_t>(members[i][digit[i]]);
      const ChoiceFunction c = ChoiceFunction::from_picks(n, picks);
      const ReversalGraph g = ReversalGraph::of(c);
      ++t.by_sp[static_cast<std::size_t>(sp_axiomatic(c, g).sp)];
      if (g.complete()) ++t.strongly;
      for (std::size_t i = 0; i < menus.size(); ++i) {
        if (++digit[i] < members[i].size()) break;
        digit[i] = 0;
      }
    }
  });

  CensusReport report;
  report.n = n;
  report.exact = true;
  report.total = std::to_string(total);
  for (int s = 0; s < static_cast<int>(n); ++s) report.counts_by_sp[s] = 0;
  for (const Tally& t : tallies) {
    for (std::size_t s = 0; s < n; ++s) report.counts_by_sp[static_cast<int>(s)] += t.by_sp[s];
    report.strongly_harmful += t.strongly;
  }
  report.strongly_harmful_fraction =
      static_cast<double>(report.strongly_harmful) / static_cast<double>(total);
  return report;
}

CensusReport sample_census(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                           unsigned workers) {
  if (n < 2) throw Error(ErrorCode::InvalidGroundSet, "census needs at least 2 alternatives");
  ChoiceFunction::check_size(n);
  if (samples == 0) throw Error(ErrorCode::IndexOutOfRange, "samples must be at least 1");
  const auto menus = MenuOrder::of(n).menus();
  const std::size_t chunks = static_cast<std::size_t>((samples + kSamplesPerChunk - 1) / kSamplesPerChunk);
  std::vector<Tally> tallies(chunks);

  for_each_chunk(chunks, workers, [&](std::size_t k) {
    Tally& t = tallies[k];
    t.by_sp.assign(n, 0);
    auto rng = chunk_rng(seed, k);
    const std::uint64_t count = std::min(kSamplesPerChunk, samples - k * kSamplesPerChunk);
    std::vector<std::uint8_t> picks(std::size_t{1} << n, 0);
    for (std::uint64_t s = 0; s < count; ++s) {
      for (Menu menu : menus) {
        const std::size_t size = menu.size();
        Menu::Mask m = menu.mask();
        if (size > 1)
          for (auto skip = uniform_below(rng, size); skip > 0; --skip) m &= m - 1;
        picks[menu.mask()] = static_cast<std::uint8_t>(std::countr_zero(m));
      }
      const ChoiceFunction c = ChoiceFunction::from_picks(n, picks);
      const ReversalGraph g = ReversalGraph::of(c);
      ++t.by_sp[static_cast<std::size_t>(sp_axiomatic(c, g).sp)];
      if (g.complete()) ++t.strongly;
    }
  });

  CensusReport report;
  report.n = n;
  report.exact = false;
  report.total = count_choice_functions(n);
  report.seed = seed;
  report.samples = samples;
  for (int s = 0; s < static_cast<int>(n); ++s) report.counts_by_sp[s] = 0;
  for (const Tally& t : tallies) {
    for (std::size_t s = 0; s < n; ++s) report.counts_by_sp[static_cast<int>(s)] += t.by_sp[s];
    report.strongly_harmful += t.strongly;
  }
  for (auto [s, hits] : report.counts_by_sp)
    report.estimates_by_sp[s] = {hits, static_cast<double>(hits) / static_cast<double>(samples),
                                 half_width_95(hits, samples)};
  report.strongly_harmful_fraction =
      static_cast<double>(report.strongly_harmful) / static_cast<double>(samples);
  report.half_width = half_width_95(report.strongly_harmful, samples);
  return report;
}

int policy_cap(const IndexPolicy& policy) {
  struct {
    int operator()(const FixedIndex& p) const { return p.index; }
    int operator()(const UniformIndexUpTo& p) const { return p.cap; }
    int operator()(const ExplicitIndices& p) const {
      int cap = 0;
      for (const auto& [menu, i] : p.entries) cap = std::max(cap, i);
      return cap;
    }
  } visitor;
  return std::visit(visitor, policy);
}

GeneratedChoice generate_harmful(const LinearOrder& order, const IndexPolicy& policy,
                                 std::uint64_t seed) {
  const std::size_t n = order.size();
  ChoiceFunction::check_size(n);
  const int last = static_cast<int>(n) - 1;
  auto check_index = [&](int i) {
    if (i < 0 || i > last)
      throw Error(ErrorCode::IndexOutOfRange,
                  "distortion index " + std::to_string(i) + " outside 0.." + std::to_string(last));
  };

  std::vector<std::uint8_t> index(std::size_t{1} << n, 0);
  if (const auto* fixed = std::get_if<FixedIndex>(&policy)) {
    check_index(fixed->index);
    std::fill(index.begin() + 1, index.end(), static_cast<std::uint8_t>(fixed->index));
  } else if (const auto* uniform = std::get_if<UniformIndexUpTo>(&policy)) {
    check_index(uniform->cap);
    std::mt19937_64 rng(seed);
    for (Menu menu : MenuOrder::of(n).menus())
      index[menu.mask()] = static_cast<std::uint8_t>(
          uniform_below(rng, static_cast<std::uint64_t>(uniform->cap) + 1));
  } else {
    const auto& entries = std::get<ExplicitIndices>(policy).entries;
    std::vector<bool> seen(index.size(), false);
    for (const auto& [menu, i] : entries) {
      if (!menu.fits(n)) throw Error(ErrorCode::InvalidMenu, "menu outside the ground set");
      check_index(i);
      if (seen[menu.mask()])
        throw Error(ErrorCode::DuplicateMenu, "menu listed twice in the index map");
      seen[menu.mask()] = true;
      index[menu.mask()] = static_cast<std::uint8_t>(i);
    }
    std::string missing;
    for (Menu menu : MenuOrder::of(n).menus())
      if (menu.size() > 1 && !seen[menu.mask()])
        missing += " mask " + std::to_string(menu.mask());
    if (!missing.empty())
      throw Error(ErrorCode::MissingMenu, "index map misses menus:" + missing);
  }

  const DistortionFamily family(order);
  auto choice = ChoiceFunction::tabulate(
      n, [&](Menu m) { return max_of(m, family[index[m.mask()]]); });
  return {std::move(choice), std::move(index)};
}

Dataset construct_inconsistent(int k) {
  if (k < 2) throw Error(ErrorCode::IndexOutOfRange, "k must be at least 2");
  if (2 * static_cast<std::size_t>(k) > kMaxMenuAlternatives)
    throw Error(ErrorCode::GroundSetTooLarge, "k must be at most 10");
  const auto n = static_cast<std::size_t>(2 * k);
  const auto top = static_cast<Alternative>(n - 1);  // x(2k-1)
  std::vector<std::string> labels{"x*"};
  for (std::size_t j = 1; j < n; ++j) labels.push_back("x" + std::to_string(j));

  auto wrap = [&](Alternative j) -> Alternative {
    if (j == 0) return top;
    if (j > top) return 1;
    return j;
  };
  const Menu::Mask full = (Menu::Mask{1} << n) - 1;
  const Menu::Mask star = 1;

  auto choice = ChoiceFunction::tabulate(n, [&](Menu menu) -> Alternative {
    const Menu::Mask m = menu.mask();
    if (m == full) return 0;
    if (menu.size() == n - 1) {
      const auto missing = static_cast<Alternative>(std::countr_zero(full & ~m));
      if (missing != 0) return wrap(missing - 1);
    } else if (menu.size() == n - 2 && !(m & star)) {
      const auto missing = static_cast<Alternative>(std::countr_zero((full & ~star) & ~m));
      return wrap(missing + 1);
    }
    return static_cast<Alternative>(std::countr_zero(m));
  });
  return {GroundSet(std::move(labels)), std::move(choice), {}};
}

}  // namespace harmchoice
