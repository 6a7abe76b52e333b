#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pgm/distribution.hpp"
#include "pgm/rng.hpp"

namespace pgm {

/// Walker/Vose alias table: O(n) build, O(1) draw. Weights need not be
/// normalized; zero-weight cells are never drawn.
class AliasTable {
 public:
  explicit AliasTable(std::span<const double> weights);

  std::size_t size() const { return threshold_.size(); }

  std::size_t sample(RandomStream& rng) const {
    const std::size_t cell = rng.bounded(threshold_.size());
    return rng.next_unit() < threshold_[cell] ? cell : alias_[cell];
  }

 private:
  std::vector<double> threshold_;
  std::vector<std::uint32_t> alias_;
};

/// O(1) draws of category ids distributed per a CategoricalDistribution.
/// Identical seeds yield identical draw sequences.
class CategorySampler {
 public:
  CategorySampler(const CategoricalDistribution& d, std::uint64_t seed)
      : table_(d.probs), rng_(seed) {}

  std::uint64_t draw() { return table_.sample(rng_); }

 private:
  AliasTable table_;
  RandomStream rng_;
};

/// O(1) draws of unordered category pairs per an EdgeCategoryDistribution.
class EdgeCategorySampler {
 public:
  EdgeCategorySampler(const EdgeCategoryDistribution& d, std::uint64_t seed);

  CategoryPair draw() { return support_[table_.sample(rng_)]; }

 private:
  AliasTable table_;
  std::vector<CategoryPair> support_;
  RandomStream rng_;
};

inline CategorySampler make_sampler(const CategoricalDistribution& d, std::uint64_t seed) {
  return {d, seed};
}
inline EdgeCategorySampler make_sampler(const EdgeCategoryDistribution& d, std::uint64_t seed) {
  return {d, seed};
}

}  // namespace pgm
