#include "pgm/bucketing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pgm/errors.hpp"

namespace pgm {

std::uint32_t BucketingScheme::bucket_of(std::uint32_t degree) const {
  if (degree == 0) return 0;
  if (degree < boundaries.front() || degree > boundaries.back())
    throw std::out_of_range("degree " + std::to_string(degree) +
                            " outside the bucketed range");
  // Last interval is closed.
  if (degree == boundaries.back()) return interval_count() - 1;
  const auto it = std::upper_bound(boundaries.begin(), boundaries.end(), degree);
  return static_cast<std::uint32_t>(it - boundaries.begin()) - 1;
}

BucketingScheme degree_bucket_boundaries(std::uint32_t d_min, std::uint32_t d_max,
                                         std::uint32_t n_a, BucketingScheme::Scale scale) {
  if (d_min < 1 || d_max < d_min)
    throw ConfigError("degree bucketing needs 1 <= d_min <= d_max");
  if (n_a < 1) throw ConfigError("interval count must be at least 1");

  BucketingScheme scheme;
  scheme.scale = scale;
  scheme.boundaries.reserve(n_a + 1);
  for (std::uint32_t i = 0; i <= n_a; ++i) {
    double b;
    if (scale == BucketingScheme::Scale::Log) {
      const double t = static_cast<double>(i) / n_a;
      b = d_min * std::pow(static_cast<double>(d_max) / d_min, t);
    } else {
      b = d_min + (static_cast<double>(d_max) - d_min) * i / n_a;
    }
    const auto rounded = static_cast<std::uint32_t>(std::llround(b));
    if (scheme.boundaries.empty() || rounded > scheme.boundaries.back())
      scheme.boundaries.push_back(rounded);
  }
  // Endpoints are exact regardless of rounding.
  scheme.boundaries.front() = d_min;
  scheme.boundaries.back() = d_max;
  if (scheme.boundaries.size() < 2) scheme.boundaries = {d_min, d_max};
  return scheme;
}

BucketingScheme scheme_for_graph(const PropertyGraph& g, std::uint32_t n_a,
                                 BucketingScheme::Scale scale) {
  if (g.edges().empty())
    throw ConfigError("degree bucketing needs a graph with at least one edge");
  std::uint32_t d_min = 0, d_max = 0;
  for (std::uint32_t d : degree_sequence(g)) {
    if (d == 0) continue;
    if (d_min == 0 || d < d_min) d_min = d;
    d_max = std::max(d_max, d);
  }
  return degree_bucket_boundaries(d_min, d_max, n_a, scale);
}

std::vector<std::uint32_t> assign_degree_labels(const PropertyGraph& g,
                                                const BucketingScheme& scheme) {
  const auto degrees = degree_sequence(g);
  std::vector<std::uint32_t> buckets(degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i) buckets[i] = scheme.bucket_of(degrees[i]);
  return buckets;
}

PropertyGraph augment(const PropertyGraph& g, const BucketingScheme& scheme) {
  const auto buckets = assign_degree_labels(g, scheme);
  const std::size_t m = g.schema().label_count();

  LabelSchema schema = g.schema().with_label({kDegreeBucketLabel, scheme.interval_count(), {}});
  std::vector<std::uint32_t> values;
  values.reserve(g.vertex_count() * (m + 1));
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const auto labels = g.vertex_labels(static_cast<VertexId>(i));
    values.insert(values.end(), labels.begin(), labels.end());
    values.push_back(buckets[i]);
  }
  return PropertyGraph(std::move(schema), std::move(values), g.edges());
}

PropertyGraph augment(const PropertyGraph& g, std::uint32_t n_a) {
  return augment(g, scheme_for_graph(g, n_a));
}

}  // namespace pgm
