#include "pgm/graph.hpp"

#include "pgm/errors.hpp"
#include "pgm/hash_set.hpp"

namespace pgm {

PropertyGraph::PropertyGraph(LabelSchema schema, std::vector<std::uint32_t> label_values,
                             std::vector<Edge> edges)
    : schema_(std::move(schema)),
      label_values_(std::move(label_values)),
      edges_(std::move(edges)) {
  const std::size_t m = schema_.label_count();
  if (label_values_.size() % m != 0)
    throw SchemaError("label value array is not a multiple of the label count");
  vertex_count_ = label_values_.size() / m;
  for (Edge& e : edges_) e = make_edge(e.u, e.v);
}

PropertyGraph PropertyGraph::from_label_vectors(LabelSchema schema,
                                                const std::vector<LabelVector>& labels,
                                                std::vector<Edge> edges) {
  const std::size_t m = schema.label_count();
  std::vector<std::uint32_t> flat;
  flat.reserve(labels.size() * m);
  for (const auto& vec : labels) {
    if (vec.size() != m) throw SchemaError("label vector length does not match schema");
    flat.insert(flat.end(), vec.begin(), vec.end());
  }
  return PropertyGraph(std::move(schema), std::move(flat), std::move(edges));
}

std::vector<std::uint32_t> degree_sequence(const PropertyGraph& g) {
  std::vector<std::uint32_t> degrees(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    if (e.u < degrees.size()) ++degrees[e.u];
    if (e.v < degrees.size()) ++degrees[e.v];
  }
  return degrees;
}

std::vector<Violation> validate(const PropertyGraph& g) {
  std::vector<Violation> out;
  const std::size_t n = g.vertex_count();

  detail::U64Set seen(g.edges().size());
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) {
      out.push_back({ViolationKind::SelfLoop,
                     "self loop at vertex " + std::to_string(e.u)});
      continue;
    }
    if (e.u >= n || e.v >= n) {
      out.push_back({ViolationKind::DanglingEndpoint,
                     "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") references a vertex outside the graph"});
      continue;
    }
    if (!seen.insert(edge_key(e)))
      out.push_back({ViolationKind::DuplicateEdge,
                     "duplicate edge (" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + ")"});
  }

  const auto& schema = g.schema();
  for (std::size_t i = 0; i < n; ++i) {
    const auto labels = g.vertex_labels(static_cast<VertexId>(i));
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (labels[k] >= schema.label(k).domain_size)
        out.push_back({ViolationKind::LabelOutOfDomain,
                       "vertex " + std::to_string(i) + " label '" +
                           schema.label(k).name + "' value " +
                           std::to_string(labels[k]) + " outside domain"});
    }
  }
  return out;
}

}  // namespace pgm
