#include "pgm/estimation.hpp"

#include <thread>
#include <unordered_map>

#include "pgm/errors.hpp"

namespace pgm {

namespace {

unsigned clamp_threads(unsigned threads, std::size_t items) {
  if (threads == 0) threads = 1;
  if (threads > items) threads = static_cast<unsigned>(items ? items : 1);
  return threads;
}

}  // namespace

CategoricalDistribution estimate_label_distribution(const PropertyGraph& g, unsigned threads) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw EstimationError("cannot estimate label distribution of an empty graph");
  const std::uint64_t num_categories = g.schema().category_count();

  threads = clamp_threads(threads, n);
  std::vector<std::vector<std::uint64_t>> partials(
      threads, std::vector<std::uint64_t>(num_categories, 0));

  auto count_range = [&](unsigned worker, std::size_t begin, std::size_t end) {
    auto& counts = partials[worker];
    for (std::size_t i = begin; i < end; ++i)
      ++counts[g.vertex_category(static_cast<VertexId>(i))];
  };

  if (threads == 1) {
    count_range(0, 0, n);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back(count_range, w, std::min(n, w * chunk), std::min(n, (w + 1) * chunk));
    for (auto& t : pool) t.join();
  }

  std::vector<std::uint64_t> counts(num_categories, 0);
  for (const auto& partial : partials)
    for (std::uint64_t j = 0; j < num_categories; ++j) counts[j] += partial[j];
  return CategoricalDistribution::from_counts(std::move(counts));
}

EdgeCategoryDistribution estimate_edge_distribution(const PropertyGraph& g, unsigned threads) {
  const auto& edges = g.edges();
  if (edges.empty()) throw EstimationError("cannot estimate edge categories of an edgeless graph");

  threads = clamp_threads(threads, edges.size());
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> partials(threads);

  // Dense categories fit a pair of 32-bit halves only up to 2^32; key by
  // the canonical pair folded into first * N + second instead.
  const std::uint64_t num_categories = g.schema().category_count();
  auto count_range = [&](unsigned worker, std::size_t begin, std::size_t end) {
    auto& counts = partials[worker];
    for (std::size_t i = begin; i < end; ++i) {
      const auto pair =
          make_category_pair(g.vertex_category(edges[i].u), g.vertex_category(edges[i].v));
      ++counts[pair.first * num_categories + pair.second];
    }
  };

  if (threads == 1) {
    count_range(0, 0, edges.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (edges.size() + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back(count_range, w, std::min(edges.size(), w * chunk),
                        std::min(edges.size(), (w + 1) * chunk));
    for (auto& t : pool) t.join();
  }

  std::unordered_map<std::uint64_t, std::uint64_t> merged;
  for (const auto& partial : partials)
    for (const auto& [key, c] : partial) merged[key] += c;

  std::vector<std::pair<CategoryPair, std::uint64_t>> pairs;
  pairs.reserve(merged.size());
  for (const auto& [key, c] : merged)
    pairs.emplace_back(CategoryPair{key / num_categories, key % num_categories}, c);
  return EdgeCategoryDistribution::from_counts(std::move(pairs));
}

}  // namespace pgm
