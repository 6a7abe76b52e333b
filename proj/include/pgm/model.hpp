#pragma once

#include <filesystem>
#include <optional>

#include "pgm/bucketing.hpp"
#include "pgm/distribution.hpp"
#include "pgm/graph.hpp"

namespace pgm {

/// Everything needed to generate targets without the source graph: the
/// schema and both fitted distributions. When the source was augmented
/// with a degree-bucket label, the bucketing scheme rides along.
struct Model {
  LabelSchema schema;
  CategoricalDistribution label_dist;
  EdgeCategoryDistribution edge_dist;
  std::optional<BucketingScheme> bucketing;
};

Model fit_model(const PropertyGraph& source, unsigned threads = 1);

void save_model(const Model& model, const std::filesystem::path& path);
Model load_model(const std::filesystem::path& path);

}  // namespace pgm
