#include "pgm/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "pgm/errors.hpp"

namespace pgm {

namespace {

constexpr double kNormalizationTolerance = 1e-9;

void check_normalized(double sum) {
  if (std::abs(sum - 1.0) > kNormalizationTolerance)
    throw std::invalid_argument("distribution does not sum to 1");
}

}  // namespace

CategoricalDistribution CategoricalDistribution::from_probs(std::vector<double> probs) {
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0 || !std::isfinite(p))
      throw std::invalid_argument("probabilities must be finite and non-negative");
    sum += p;
  }
  check_normalized(sum);
  CategoricalDistribution d;
  d.probs = std::move(probs);
  return d;
}

CategoricalDistribution CategoricalDistribution::from_counts(std::vector<std::uint64_t> counts) {
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  if (total == 0) throw std::invalid_argument("count vector is all zero");
  CategoricalDistribution d;
  d.probs.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    d.probs[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  d.counts = std::move(counts);
  d.total_count = total;
  return d;
}

const EdgeCategoryEntry* EdgeCategoryDistribution::find(CategoryPair p) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), p,
                             [](const EdgeCategoryEntry& e, CategoryPair key) {
                               return e.pair < key;
                             });
  if (it == entries.end() || !(it->pair == p)) return nullptr;
  return &*it;
}

EdgeCategoryDistribution EdgeCategoryDistribution::from_probs(
    std::vector<std::pair<CategoryPair, double>> pairs) {
  std::map<CategoryPair, double> merged;
  double sum = 0.0;
  for (auto& [pair, p] : pairs) {
    if (p < 0.0 || !std::isfinite(p))
      throw std::invalid_argument("probabilities must be finite and non-negative");
    merged[make_category_pair(pair.first, pair.second)] += p;
    sum += p;
  }
  check_normalized(sum);
  EdgeCategoryDistribution d;
  d.entries.reserve(merged.size());
  for (const auto& [pair, p] : merged) d.entries.push_back({pair, p, 0});
  return d;
}

EdgeCategoryDistribution EdgeCategoryDistribution::from_counts(
    std::vector<std::pair<CategoryPair, std::uint64_t>> pairs) {
  std::map<CategoryPair, std::uint64_t> merged;
  std::uint64_t total = 0;
  for (auto& [pair, c] : pairs) {
    merged[make_category_pair(pair.first, pair.second)] += c;
    total += c;
  }
  if (total == 0) throw std::invalid_argument("pair counts are all zero");
  EdgeCategoryDistribution d;
  d.entries.reserve(merged.size());
  for (const auto& [pair, c] : merged)
    d.entries.push_back({pair, static_cast<double>(c) / static_cast<double>(total), c});
  d.total_count = total;
  return d;
}

namespace {

/// Category id with the digit of label `label_index` removed.
std::uint64_t drop_label_digit(std::uint64_t id, const LabelSchema& s, std::size_t k) {
  const std::uint64_t stride = s.stride(k);
  const std::uint64_t domain = s.label(k).domain_size;
  const std::uint64_t above = id / (stride * domain);
  const std::uint64_t below = id % stride;
  return above * stride + below;
}

}  // namespace

CategoricalDistribution marginalize(const CategoricalDistribution& d, const LabelSchema& s,
                                    std::size_t label_index) {
  if (label_index >= s.label_count()) throw std::out_of_range("label index out of range");
  if (d.probs.size() != s.category_count())
    throw std::invalid_argument("distribution support does not match schema");
  const std::uint64_t reduced_n = s.category_count() / s.label(label_index).domain_size;

  if (d.count_backed()) {
    std::vector<std::uint64_t> counts(reduced_n, 0);
    for (std::uint64_t id = 0; id < d.counts.size(); ++id)
      counts[drop_label_digit(id, s, label_index)] += d.counts[id];
    return CategoricalDistribution::from_counts(std::move(counts));
  }
  std::vector<double> probs(reduced_n, 0.0);
  for (std::uint64_t id = 0; id < d.probs.size(); ++id)
    probs[drop_label_digit(id, s, label_index)] += d.probs[id];
  return CategoricalDistribution::from_probs(std::move(probs));
}

EdgeCategoryDistribution marginalize_edges(const EdgeCategoryDistribution& d,
                                           const LabelSchema& s, std::size_t label_index) {
  if (label_index >= s.label_count()) throw std::out_of_range("label index out of range");
  if (d.count_backed()) {
    std::vector<std::pair<CategoryPair, std::uint64_t>> pairs;
    pairs.reserve(d.entries.size());
    for (const auto& e : d.entries)
      pairs.emplace_back(make_category_pair(drop_label_digit(e.pair.first, s, label_index),
                                            drop_label_digit(e.pair.second, s, label_index)),
                         e.count);
    return EdgeCategoryDistribution::from_counts(std::move(pairs));
  }
  std::vector<std::pair<CategoryPair, double>> pairs;
  pairs.reserve(d.entries.size());
  for (const auto& e : d.entries)
    pairs.emplace_back(make_category_pair(drop_label_digit(e.pair.first, s, label_index),
                                          drop_label_digit(e.pair.second, s, label_index)),
                       e.prob);
  return EdgeCategoryDistribution::from_probs(std::move(pairs));
}

double total_variation(const CategoricalDistribution& p, const CategoricalDistribution& q) {
  if (p.probs.size() != q.probs.size())
    throw std::invalid_argument("total variation over mismatched supports");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.probs.size(); ++i) sum += std::abs(p.probs[i] - q.probs[i]);
  return sum / 2.0;
}

double total_variation(const EdgeCategoryDistribution& p, const EdgeCategoryDistribution& q) {
  double sum = 0.0;
  auto a = p.entries.begin();
  auto b = q.entries.begin();
  while (a != p.entries.end() || b != q.entries.end()) {
    if (b == q.entries.end() || (a != p.entries.end() && a->pair < b->pair)) {
      sum += a->prob;
      ++a;
    } else if (a == p.entries.end() || b->pair < a->pair) {
      sum += b->prob;
      ++b;
    } else {
      sum += std::abs(a->prob - b->prob);
      ++a;
      ++b;
    }
  }
  return sum / 2.0;
}

}  // namespace pgm
