#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "pgm/distribution.hpp"
#include "pgm/graph.hpp"

namespace pgm {

/// On-disk form of a property graph: a vertex table (CSV, one column per
/// label), a whitespace-separated edge list, and a JSON schema header.
struct GraphBundle {
  std::filesystem::path vertices;
  std::filesystem::path edges;
  std::filesystem::path schema;

  /// <prefix>.vertices.csv / <prefix>.edges.txt / <prefix>.schema.json
  static GraphBundle with_prefix(const std::filesystem::path& prefix);
};

struct LoadReport {
  PropertyGraph graph;
  std::uint64_t duplicate_edges_dropped = 0;
  std::uint64_t self_loops_dropped = 0;
};

/// Loads a bundle. Duplicate and self edges in the input are dropped and
/// counted, everything else that violates the graph invariants is an
/// error naming the file and line.
LoadReport load_property_graph(const GraphBundle& bundle);

/// Writes a bundle in canonical order (vertices ascending, edges sorted),
/// so saving the same graph twice produces identical bytes.
void save_property_graph(const PropertyGraph& g, const GraphBundle& bundle);

struct RoleBasedConfig {
  std::uint64_t vertices = 2000;
  std::uint64_t edges = 90000;
  LabelSchema schema;
  EdgeCategoryDistribution affinity;
  std::uint64_t seed = 7;
};

/// Two binary role labels and an affinity putting most mass on
/// cross-role pairs, so the labels fully explain the connectivity.
RoleBasedConfig role_based_default();

/// Synthetic source: labels assigned uniformly over the categories,
/// edges drawn from the affinity distribution.
PropertyGraph generate_role_based(const RoleBasedConfig& cfg);

/// Affinity JSON: {"pairs": [{"a": 0, "b": 2, "p": 0.34}, ...]}.
EdgeCategoryDistribution load_affinity_json(const std::filesystem::path& path);

struct SnapLoadReport {
  PropertyGraph graph;
  /// Vertices that lacked a selected feature in every ego-net and
  /// defaulted to 0.
  std::uint64_t missing_feature_defaults = 0;
  std::uint64_t duplicate_edges_dropped = 0;
};

/// Loads a directory of SNAP ego-nets (<ego>.edges / .feat / .featnames /
/// .egofeat) into one graph: the union of all ego-net edges — including
/// the implicit ego-to-alter edges — over the global vertex-id space,
/// remapped to dense ids in ascending order of the original ids. The
/// selected binary features are matched by name per ego-net (feature
/// indices differ across egos); a vertex flagged by any ego gets value 1.
SnapLoadReport load_snap_ego_nets(const std::filesystem::path& directory,
                                  const std::vector<std::string>& selected_feature_names);

}  // namespace pgm
