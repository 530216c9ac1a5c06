#include "harmchoice/degree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "harmchoice/parallel.hpp"
#include "harmchoice/rationalize.hpp"

namespace harmchoice {

std::string_view to_string(SpMethod method) {
  switch (method) {
    case SpMethod::BruteForce: return "bruteforce";
    case SpMethod::Axiomatic: return "axiomatic";
    case SpMethod::Both: return "both";
  }
  return "unknown";
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<Alternative> nth_permutation(std::size_t n, std::uint64_t k) {
  std::vector<Alternative> pool(n);
  std::iota(pool.begin(), pool.end(), Alternative{0});
  std::vector<Alternative> out;
  out.reserve(n);
  for (std::size_t left = n; left > 0; --left) {
    const std::uint64_t block = factorial(left - 1);
    const auto d = static_cast<std::size_t>(k / block);
    k %= block;
    out.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return out;
}

namespace {

constexpr std::uint64_t kOrdersPerChunk = 256;

struct ChunkResult {
  int best = std::numeric_limits<int>::max();
  std::uint64_t count = 0;
  std::vector<LinearOrder> orders;
};

}  // namespace

SpReport sp_bruteforce(const ChoiceFunction& c, unsigned workers) {
  const std::size_t n = c.size();
  if (n > kMaxBruteForceAlternatives)
    throw Error(ErrorCode::GroundSetTooLarge,
                "brute force supports at most " + std::to_string(kMaxBruteForceAlternatives) +
                    " alternatives, got " + std::to_string(n));
  const std::uint64_t total = factorial(n);
  const std::size_t chunks = static_cast<std::size_t>((total + kOrdersPerChunk - 1) / kOrdersPerChunk);
  std::vector<ChunkResult> results(chunks);

  for_each_chunk(chunks, workers, [&](std::size_t k) {
    ChunkResult& res = results[k];
    const std::uint64_t begin = k * kOrdersPerChunk;
    const std::uint64_t end = std::min(total, begin + kOrdersPerChunk);
    std::vector<Alternative> perm = nth_permutation(n, begin);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      LinearOrder order(perm);
      const int bound = std::min<int>(res.best, static_cast<int>(n) - 1);
      const int v = min_max_index_bounded(c, order, bound);
      if (v < res.best) {
        res.best = v;
        res.count = 0;
        res.orders.clear();
      }
      if (v == res.best) {
        ++res.count;
        if (res.orders.size() < kMinimizingOrderCap) res.orders.push_back(std::move(order));
      }
      std::next_permutation(perm.begin(), perm.end());
    }
  });

  SpReport report;
  report.method = SpMethod::BruteForce;
  int best = std::numeric_limits<int>::max();
  for (const auto& r : results) best = std::min(best, r.best);
  report.sp = best;
  for (auto& r : results) {
    if (r.best != best) continue;
    report.minimizing_order_count += r.count;
    for (auto& o : r.orders) {
      if (report.minimizing_orders.size() == kMinimizingOrderCap) break;
      report.minimizing_orders.push_back(std::move(o));
    }
  }
  return report;
}

SpReport sp_axiomatic(const ChoiceFunction& c, const ReversalGraph& graph) {
  const int n = static_cast<int>(c.size());
  SpReport report;
  report.method = SpMethod::Axiomatic;
  if (graph.empty()) return report;

  if (graph.complete()) {
    report.sp = n - 1;
    report.witness = check_cns(c, graph, n - 1);
    if (!report.witness)
      throw Error(ErrorCode::NoCharacterizingJ,
                  "inconsistent choice without a witness for j = n-1");
    return report;
  }
  for (int j = 1; j <= n - 1; ++j) {
    if (auto w = check_cns(c, graph, j)) {
      report.sp = j;
      report.witness = std::move(w);
      return report;
    }
  }
  throw Error(ErrorCode::NoCharacterizingJ, "no j satisfies constant nonreciprocal selection");
}

SpReport sp_axiomatic(const ChoiceFunction& c) { return sp_axiomatic(c, ReversalGraph::of(c)); }

SpReport sp(const ChoiceFunction& c, unsigned workers) {
  SpReport report = sp_axiomatic(c);
  if (c.size() > kMaxBruteForceAlternatives) return report;
  SpReport brute = sp_bruteforce(c, workers);
  if (brute.sp != report.sp)
    throw Error(ErrorCode::CrossCheckMismatch,
                "axiomatic sp = " + std::to_string(report.sp) + " but brute force sp = " +
                    std::to_string(brute.sp));
  report.method = SpMethod::Both;
  report.minimizing_orders = std::move(brute.minimizing_orders);
  report.minimizing_order_count = brute.minimizing_order_count;
  return report;
}

}  // namespace harmchoice
