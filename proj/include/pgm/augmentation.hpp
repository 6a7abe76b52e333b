#pragma once

#include <cstdint>
#include <vector>

#include "pgm/bucketing.hpp"
#include "pgm/generation.hpp"

namespace pgm {

struct AugmentationConfig {
  /// Degree-distribution JSD at or below which the loop stops.
  double tolerance = 0.05;
  /// Upper bound on the interval count tried by the loop.
  std::uint32_t max_na = 16;
  GenerationConfig generation;
};

struct AugmentationTracePoint {
  std::uint32_t n_a = 0;
  double jsd = 0.0;
};

struct AugmentationResult {
  GenerationReport report;  ///< best-JSD iteration
  std::uint32_t chosen_na = 0;
  double best_jsd = 0.0;
  std::vector<AugmentationTracePoint> trace;
};

/// One generation pass with a fixed interval count; n_a = 0 means no
/// augmentation (plain generation from the given labels).
GenerationReport generate_augmented(const PropertyGraph& source, std::uint32_t n_a,
                                    const GenerationConfig& cfg);

/// Iterates n_a = 2, 3, ... — augmenting the source with a degree-bucket
/// label, regenerating, and measuring the degree-distribution JSD against
/// the source — until the error is within tolerance or n_a reaches
/// max_na. Returns the best iteration seen (sampling noise can make the
/// trace non-monotone) along with the full (n_a, JSD) trace. If an
/// iteration saturates after at least one has completed, the sweep stops
/// and the completed iterations are returned; a first-iteration
/// saturation propagates.
AugmentationResult pgm_augmented(const PropertyGraph& source, const AugmentationConfig& cfg);

}  // namespace pgm
