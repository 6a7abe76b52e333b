#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pgm/schema.hpp"

namespace pgm {

using VertexId = std::uint32_t;

/// Undirected edge, canonical form u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Canonical edges map injectively into 64-bit keys.
inline std::uint64_t edge_key(Edge e) {
  return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
}

enum class ViolationKind { SelfLoop, DuplicateEdge, DanglingEndpoint, LabelOutOfDomain };

struct Violation {
  ViolationKind kind;
  std::string message;
};

/// Vertex set with one label vector per vertex and a simple undirected
/// edge set. Immutable after construction; labels are stored row-major
/// (|V| x M). Construction canonicalizes edge endpoint order but does not
/// reject invalid data; validate() reports violations.
class PropertyGraph {
 public:
  PropertyGraph(LabelSchema schema, std::vector<std::uint32_t> label_values,
                std::vector<Edge> edges);

  static PropertyGraph from_label_vectors(LabelSchema schema,
                                          const std::vector<LabelVector>& labels,
                                          std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  const LabelSchema& schema() const { return schema_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::uint32_t>& label_values() const { return label_values_; }

  std::span<const std::uint32_t> vertex_labels(VertexId i) const {
    const std::size_t m = schema_.label_count();
    return {label_values_.data() + static_cast<std::size_t>(i) * m, m};
  }

  std::uint64_t vertex_category(VertexId i) const {
    return encode_label_vector(vertex_labels(i), schema_);
  }

 private:
  LabelSchema schema_;
  std::vector<std::uint32_t> label_values_;
  std::vector<Edge> edges_;
  std::size_t vertex_count_ = 0;
};

/// Entry i = number of edges incident to vertex i; the sum is 2|E|.
std::vector<std::uint32_t> degree_sequence(const PropertyGraph& g);

/// Checks every graph invariant and returns all violations found.
std::vector<Violation> validate(const PropertyGraph& g);

}  // namespace pgm
