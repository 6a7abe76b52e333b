#include "pgm/augmentation.hpp"

#include <optional>
#include <utility>

#include "pgm/errors.hpp"
#include "pgm/metrics.hpp"

namespace pgm {

GenerationReport generate_augmented(const PropertyGraph& source, std::uint32_t n_a,
                                    const GenerationConfig& cfg) {
  if (n_a == 0) return sim_attr_graph(source, cfg);
  return sim_attr_graph(augment(source, n_a), cfg);
}

AugmentationResult pgm_augmented(const PropertyGraph& source, const AugmentationConfig& cfg) {
  if (cfg.tolerance <= 0.0 || cfg.tolerance >= 1.0)
    throw ConfigError("tolerance must lie in (0, 1)");
  if (cfg.max_na < 2) throw ConfigError("max_na must be at least 2");

  const DegreePmf source_pmf = degree_pmf(source);

  std::optional<GenerationReport> best;
  std::uint32_t chosen_na = 0;
  double best_jsd = 0.0;
  std::vector<AugmentationTracePoint> trace;

  for (std::uint32_t n_a = 2; n_a <= cfg.max_na; ++n_a) {
    std::optional<GenerationReport> report;
    try {
      report = generate_augmented(source, n_a, cfg.generation);
    } catch (const SaturationError&) {
      // A later iteration starving its pools aborts the sweep; the
      // completed iterations still stand. Nothing to return on the first.
      if (best) break;
      throw;
    }
    const double error = jsd(source_pmf, degree_pmf(report->graph));
    trace.push_back({n_a, error});
    if (!best || error < best_jsd) {
      best = std::move(report);
      best_jsd = error;
      chosen_na = n_a;
    }
    if (error <= cfg.tolerance) break;
  }
  return AugmentationResult{std::move(*best), chosen_na, best_jsd, std::move(trace)};
}

}  // namespace pgm
