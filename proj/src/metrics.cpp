#include "pgm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <span>

#include "pgm/errors.hpp"

namespace pgm {

namespace {

double entropy_bits(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

}  // namespace

DegreePmf degree_pmf(const PropertyGraph& g) {
  if (g.vertex_count() == 0) throw EstimationError("degree pmf of an empty graph");
  const auto degrees = degree_sequence(g);
  const std::uint32_t d_max = *std::max_element(degrees.begin(), degrees.end());
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(d_max) + 1, 0);
  for (std::uint32_t d : degrees) ++counts[d];

  DegreePmf pmf;
  pmf.probs.resize(counts.size());
  for (std::size_t d = 0; d < counts.size(); ++d)
    pmf.probs[d] = static_cast<double>(counts[d]) / static_cast<double>(degrees.size());
  return pmf;
}

DegreePmf rescale_degrees(const DegreePmf& p, double factor) {
  if (factor <= 0.0 || !std::isfinite(factor))
    throw std::invalid_argument("degree rescaling factor must be positive");
  DegreePmf out;
  for (std::size_t d = 0; d < p.probs.size(); ++d) {
    if (p.probs[d] == 0.0) continue;
    const auto target = static_cast<std::size_t>(std::llround(static_cast<double>(d) * factor));
    if (out.probs.size() <= target) out.probs.resize(target + 1, 0.0);
    out.probs[target] += p.probs[d];
  }
  if (out.probs.empty()) out.probs.push_back(0.0);
  return out;
}

double mean_degree(const PropertyGraph& g) {
  if (g.vertex_count() == 0) throw EstimationError("mean degree of an empty graph");
  return 2.0 * static_cast<double>(g.edges().size()) / static_cast<double>(g.vertex_count());
}

std::vector<double> ccdf(const DegreePmf& p) {
  std::vector<double> out(p.probs.size());
  double tail = 0.0;
  for (std::size_t d = p.probs.size(); d-- > 0;) {
    tail += p.probs[d];
    out[d] = tail;
  }
  if (!out.empty()) out[0] = 1.0;
  return out;
}

double jsd(const DegreePmf& p, const DegreePmf& q) {
  const std::size_t support = std::max(p.probs.size(), q.probs.size());
  std::vector<double> pp(support, 0.0), qq(support, 0.0), mix(support, 0.0);
  std::copy(p.probs.begin(), p.probs.end(), pp.begin());
  std::copy(q.probs.begin(), q.probs.end(), qq.begin());
  for (std::size_t d = 0; d < support; ++d) mix[d] = (pp[d] + qq[d]) / 2.0;

  const double divergence = entropy_bits(mix) - (entropy_bits(pp) + entropy_bits(qq)) / 2.0;
  return std::clamp(divergence, 0.0, 1.0);
}

void write_ccdf_csv(const DegreePmf& p, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << "degree,ccdf\n";
  const auto tail = ccdf(p);
  char buffer[64];
  for (std::size_t d = 0; d < tail.size(); ++d) {
    std::snprintf(buffer, sizeof(buffer), "%zu,%.17g\n", d, tail[d]);
    out << buffer;
  }
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace pgm
