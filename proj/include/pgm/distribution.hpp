#pragma once

#include <cstdint>
#include <vector>

#include "pgm/schema.hpp"

namespace pgm {

/// Multinomial distribution over label category ids [0, N). When built
/// from data the integer counts are kept alongside the probabilities so
/// marginalization can stay exact.
struct CategoricalDistribution {
  std::vector<double> probs;
  std::vector<std::uint64_t> counts;  // empty unless count-backed
  std::uint64_t total_count = 0;

  std::size_t support_size() const { return probs.size(); }
  bool count_backed() const { return !counts.empty(); }

  static CategoricalDistribution from_probs(std::vector<double> probs);
  static CategoricalDistribution from_counts(std::vector<std::uint64_t> counts);
};

/// Unordered pair of category ids, canonical form first <= second.
struct CategoryPair {
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  friend bool operator==(const CategoryPair&, const CategoryPair&) = default;
  friend auto operator<=>(const CategoryPair&, const CategoryPair&) = default;
};

inline CategoryPair make_category_pair(std::uint64_t a, std::uint64_t b) {
  return a <= b ? CategoryPair{a, b} : CategoryPair{b, a};
}

struct EdgeCategoryEntry {
  CategoryPair pair;
  double prob = 0.0;
  std::uint64_t count = 0;
};

/// Sparse multinomial over unordered category pairs, diagonal pairs
/// included. Most of the N(N+1)/2 pairs carry no mass in real data, so
/// only nonzero entries are stored, sorted by pair for deterministic
/// iteration and serialization.
struct EdgeCategoryDistribution {
  std::vector<EdgeCategoryEntry> entries;
  std::uint64_t total_count = 0;  // 0 unless count-backed

  bool count_backed() const { return total_count != 0; }
  const EdgeCategoryEntry* find(CategoryPair p) const;

  /// Canonicalizes pairs, merges duplicates, validates normalization.
  static EdgeCategoryDistribution from_probs(
      std::vector<std::pair<CategoryPair, double>> pairs);
  static EdgeCategoryDistribution from_counts(
      std::vector<std::pair<CategoryPair, std::uint64_t>> pairs);
};

/// Sums probability over all values of label `label_index`; the result is
/// a distribution over the schema with that label removed. Count-backed
/// inputs are marginalized on the integer counts, exactly.
CategoricalDistribution marginalize(const CategoricalDistribution& d, const LabelSchema& s,
                                    std::size_t label_index);

/// Marginalizes both endpoints of every pair over label `label_index`.
EdgeCategoryDistribution marginalize_edges(const EdgeCategoryDistribution& d,
                                           const LabelSchema& s, std::size_t label_index);

/// Total variation distance, (1/2) sum |p_i - q_i|.
double total_variation(const CategoricalDistribution& p, const CategoricalDistribution& q);
double total_variation(const EdgeCategoryDistribution& p, const EdgeCategoryDistribution& q);

}  // namespace pgm
