#include "pgm/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace pgm {

AliasTable::AliasTable(std::span<const double> weights) {
  const std::size_t n = weights.size();
  if (n == 0) throw std::invalid_argument("alias table over empty support");
  if (n > (1ull << 32)) throw std::invalid_argument("alias table support too large");

  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0 || !std::isfinite(w))
      throw std::invalid_argument("alias weights must be finite and non-negative");
    total += w;
  }
  if (total <= 0.0) throw std::invalid_argument("alias weights sum to zero");

  // Scaled weights; cells < 1 take an alias from cells > 1.
  threshold_.resize(n);
  alias_.assign(n, 0);
  std::vector<std::uint32_t> small, large;
  for (std::size_t i = 0; i < n; ++i) {
    threshold_[i] = weights[i] * static_cast<double>(n) / total;
    (threshold_[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }

  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back();
    const std::uint32_t l = large.back();
    small.pop_back();
    large.pop_back();
    alias_[s] = l;
    threshold_[l] -= 1.0 - threshold_[s];
    (threshold_[l] < 1.0 ? small : large).push_back(l);
  }
  // Leftovers are 1 up to rounding.
  for (std::uint32_t i : small) threshold_[i] = 1.0;
  for (std::uint32_t i : large) threshold_[i] = 1.0;
}

EdgeCategorySampler::EdgeCategorySampler(const EdgeCategoryDistribution& d, std::uint64_t seed)
    : table_([&] {
        std::vector<double> weights;
        weights.reserve(d.entries.size());
        for (const auto& e : d.entries) weights.push_back(e.prob);
        return AliasTable(weights);
      }()),
      rng_(seed) {
  support_.reserve(d.entries.size());
  for (const auto& e : d.entries) support_.push_back(e.pair);
}

}  // namespace pgm
