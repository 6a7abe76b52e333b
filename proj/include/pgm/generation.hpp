#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pgm/distribution.hpp"
#include "pgm/graph.hpp"
#include "pgm/model.hpp"

namespace pgm {

/// Map from category id to the target vertices carrying that category;
/// the pools partition the target vertex set.
using CategoryPools = std::vector<std::vector<VertexId>>;

struct GenerationConfig {
  std::uint64_t target_vertices = 0;  ///< n_t, at least 2
  std::uint64_t target_edges = 0;     ///< m_t, in [1, n_t(n_t-1)/2]
  std::uint64_t seed = 0;
  /// Total edge-draw attempts are bounded by max_attempt_factor * m_t;
  /// exceeding the budget raises SaturationError with the rejection
  /// breakdown instead of looping forever on infeasible targets.
  std::uint64_t max_attempt_factor = 100;
  /// Worker count for edge drawing. Single-threaded runs are
  /// bit-deterministic per seed; multi-threaded runs are deterministic
  /// per (seed, threads) pair.
  unsigned threads = 1;
};

struct EdgeSampleResult {
  std::vector<Edge> edges;
  std::uint64_t rejected_self = 0;
  std::uint64_t rejected_duplicate = 0;
  std::uint64_t rejected_empty_pool = 0;
  std::uint64_t attempts = 0;
};

struct GenerationReport {
  PropertyGraph graph;
  std::uint64_t rejected_self = 0;
  std::uint64_t rejected_duplicate = 0;
  std::uint64_t rejected_empty_pool = 0;
  std::uint64_t attempts = 0;
  double label_sample_ms = 0.0;
  double pool_build_ms = 0.0;
  double edge_sample_ms = 0.0;
};

/// n_t independent category draws from p_l, decoded to label vectors and
/// returned row-major (n_t x M).
std::vector<std::uint32_t> sample_vertex_labels(const CategoricalDistribution& p_l,
                                                const LabelSchema& s, std::uint64_t n_t,
                                                std::uint64_t seed);

/// Buckets vertex i into the pool of its encoded category.
CategoryPools build_category_pools(std::span<const std::uint32_t> flat_labels,
                                   const LabelSchema& s);

/// Draws exactly m_t unique undirected non-self edges: each attempt draws
/// a category pair from p_c and one endpoint uniformly from each pool
/// (two distinct vertices when the pair is diagonal). Rejected attempts
/// are resampled so the target size is met exactly.
EdgeSampleResult sample_edges(const EdgeCategoryDistribution& p_c, const CategoryPools& pools,
                              const GenerationConfig& cfg);

/// Generation from fitted distributions (no source graph needed).
GenerationReport generate_from_model(const Model& model, const GenerationConfig& cfg);

/// Fits the source's distributions, then generates a target graph with
/// the same schema and the configured size.
GenerationReport sim_attr_graph(const PropertyGraph& source, const GenerationConfig& cfg);

/// Same-shape generation at round(vertex_scale * |V|) vertices and
/// round(edge_scale * |E|) edges.
GenerationReport expand(const PropertyGraph& source, double vertex_scale, double edge_scale,
                        std::uint64_t seed, unsigned threads = 1);

}  // namespace pgm
