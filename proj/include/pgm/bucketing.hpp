#pragma once

#include <cstdint>
#include <vector>

#include "pgm/graph.hpp"

namespace pgm {

/// Partition of a degree range [d_min, d_max] into intervals
/// [b_i, b_{i+1}), the last interval closed. Rounding to integer
/// boundaries collapses duplicates, so the effective interval count can
/// be smaller than requested for tiny ranges.
struct BucketingScheme {
  enum class Scale { Log, Linear };

  std::vector<std::uint32_t> boundaries;  // strictly ascending, size = intervals + 1
  Scale scale = Scale::Log;

  std::uint32_t interval_count() const {
    return static_cast<std::uint32_t>(boundaries.size() - 1);
  }

  /// Interval index containing degree d; degree 0 maps to interval 0.
  std::uint32_t bucket_of(std::uint32_t degree) const;
};

/// Boundaries b_i = d_min * (d_max/d_min)^(i/n_a) for the log scale, or
/// equally spaced for the linear scale, rounded to integers.
BucketingScheme degree_bucket_boundaries(std::uint32_t d_min, std::uint32_t d_max,
                                         std::uint32_t n_a,
                                         BucketingScheme::Scale scale = BucketingScheme::Scale::Log);

/// Scheme covering the positive degree range of g.
BucketingScheme scheme_for_graph(const PropertyGraph& g, std::uint32_t n_a,
                                 BucketingScheme::Scale scale = BucketingScheme::Scale::Log);

/// One bucket index per vertex. Degree-0 vertices get bucket 0; positive
/// degrees outside the covered range are an error.
std::vector<std::uint32_t> assign_degree_labels(const PropertyGraph& g,
                                                const BucketingScheme& scheme);

/// Graph with the schema extended by a degree-bucket label; every vertex
/// vector gains its bucket value, original labels untouched.
PropertyGraph augment(const PropertyGraph& g, const BucketingScheme& scheme);

/// Convenience: log-scale scheme with n_a intervals computed from g.
PropertyGraph augment(const PropertyGraph& g, std::uint32_t n_a);

/// Name of the appended label.
inline constexpr const char* kDegreeBucketLabel = "degree_bucket";

}  // namespace pgm
