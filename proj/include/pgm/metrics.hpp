#pragma once

#include <filesystem>
#include <vector>

#include "pgm/graph.hpp"

namespace pgm {

/// Probability mass over integer degrees 0..d_max, dense.
struct DegreePmf {
  std::vector<double> probs;

  std::uint32_t max_degree() const {
    return probs.empty() ? 0 : static_cast<std::uint32_t>(probs.size() - 1);
  }
};

DegreePmf degree_pmf(const PropertyGraph& g);

/// Pmf with every degree d remapped to round(d * factor); used to compare
/// distribution shapes across expansion scales (factor = mean-degree ratio).
DegreePmf rescale_degrees(const DegreePmf& p, double factor);

double mean_degree(const PropertyGraph& g);

/// out[d] = P(degree >= d); out[0] = 1, non-increasing.
std::vector<double> ccdf(const DegreePmf& p);

/// Jensen-Shannon divergence in bits: H(m) - (H(p) + H(q))/2 with
/// m = (p+q)/2, supports zero-padded to a common length. Symmetric and
/// bounded to [0, 1].
double jsd(const DegreePmf& p, const DegreePmf& q);

/// Two-column CSV "degree,ccdf", one row per degree starting at 0.
void write_ccdf_csv(const DegreePmf& p, const std::filesystem::path& path);

}  // namespace pgm
