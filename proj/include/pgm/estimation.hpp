#pragma once

#include "pgm/distribution.hpp"
#include "pgm/graph.hpp"

namespace pgm {

/// Maximum-likelihood vertex-label distribution: probability of category j
/// is the fraction of vertices whose encoded label vector equals j.
/// Counting is exact integer arithmetic; division happens once at
/// normalization. With threads > 1 the count is a partitioned reduction
/// whose result is independent of the partitioning.
CategoricalDistribution estimate_label_distribution(const PropertyGraph& g, unsigned threads = 1);

/// Maximum-likelihood edge-category distribution: probability of the
/// unordered pair {j, j'} is the fraction of edges whose endpoint
/// categories are {j, j'}; diagonal pairs are counted once per edge.
EdgeCategoryDistribution estimate_edge_distribution(const PropertyGraph& g, unsigned threads = 1);

}  // namespace pgm
