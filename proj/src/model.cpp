#include "pgm/model.hpp"

#include <fstream>

#include <json.hpp>

#include "pgm/errors.hpp"
#include "pgm/estimation.hpp"

namespace pgm {

namespace {

using nlohmann::json;

json schema_to_json(const LabelSchema& schema) {
  json labels = json::array();
  for (const auto& spec : schema.labels()) {
    json entry{{"name", spec.name}, {"domain_size", spec.domain_size}};
    if (!spec.value_names.empty()) entry["values"] = spec.value_names;
    labels.push_back(std::move(entry));
  }
  return json{{"labels", std::move(labels)}};
}

LabelSchema schema_from_json(const json& j) {
  std::vector<LabelSpec> specs;
  for (const auto& entry : j.at("labels")) {
    LabelSpec spec;
    spec.name = entry.at("name").get<std::string>();
    spec.domain_size = entry.at("domain_size").get<std::uint32_t>();
    if (entry.contains("values"))
      spec.value_names = entry.at("values").get<std::vector<std::string>>();
    specs.push_back(std::move(spec));
  }
  return LabelSchema(std::move(specs));
}

}  // namespace

Model fit_model(const PropertyGraph& source, unsigned threads) {
  return Model{source.schema(), estimate_label_distribution(source, threads),
               estimate_edge_distribution(source, threads), std::nullopt};
}

void save_model(const Model& model, const std::filesystem::path& path) {
  json j;
  j["format"] = "pgm-model";
  j["version"] = 1;
  j["schema"] = schema_to_json(model.schema);

  json label_dist{{"probs", model.label_dist.probs}};
  if (model.label_dist.count_backed()) {
    label_dist["counts"] = model.label_dist.counts;
    label_dist["total"] = model.label_dist.total_count;
  }
  j["vertex_label_distribution"] = std::move(label_dist);

  json pairs = json::array();
  for (const auto& e : model.edge_dist.entries) {
    json entry{{"a", e.pair.first}, {"b", e.pair.second}, {"p", e.prob}};
    if (model.edge_dist.count_backed()) entry["count"] = e.count;
    pairs.push_back(std::move(entry));
  }
  j["edge_category_distribution"] = json{{"pairs", std::move(pairs)}};
  if (model.edge_dist.count_backed())
    j["edge_category_distribution"]["total"] = model.edge_dist.total_count;

  if (model.bucketing) {
    j["augmentation"] = {
        {"boundaries", model.bucketing->boundaries},
        {"scale", model.bucketing->scale == BucketingScheme::Scale::Log ? "log" : "linear"}};
  }

  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("failed writing " + path.string());
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw IoError("malformed model JSON in " + path.string() + ": " + e.what());
  }
  if (j.value("format", "") != "pgm-model")
    throw IoError(path.string() + " is not a pgm model file");

  Model model{schema_from_json(j.at("schema")), {}, {}, std::nullopt};

  const auto& label_dist = j.at("vertex_label_distribution");
  if (label_dist.contains("counts")) {
    model.label_dist =
        CategoricalDistribution::from_counts(label_dist.at("counts").get<std::vector<std::uint64_t>>());
  } else {
    model.label_dist =
        CategoricalDistribution::from_probs(label_dist.at("probs").get<std::vector<double>>());
  }
  if (model.label_dist.support_size() != model.schema.category_count())
    throw IoError("label distribution support does not match schema in " + path.string());

  const auto& edge_dist = j.at("edge_category_distribution");
  if (edge_dist.contains("total")) {
    std::vector<std::pair<CategoryPair, std::uint64_t>> pairs;
    for (const auto& entry : edge_dist.at("pairs"))
      pairs.emplace_back(CategoryPair{entry.at("a").get<std::uint64_t>(),
                                      entry.at("b").get<std::uint64_t>()},
                         entry.at("count").get<std::uint64_t>());
    model.edge_dist = EdgeCategoryDistribution::from_counts(std::move(pairs));
  } else {
    std::vector<std::pair<CategoryPair, double>> pairs;
    for (const auto& entry : edge_dist.at("pairs"))
      pairs.emplace_back(CategoryPair{entry.at("a").get<std::uint64_t>(),
                                      entry.at("b").get<std::uint64_t>()},
                         entry.at("p").get<double>());
    model.edge_dist = EdgeCategoryDistribution::from_probs(std::move(pairs));
  }
  for (const auto& e : model.edge_dist.entries)
    if (e.pair.second >= model.schema.category_count())
      throw IoError("edge category outside schema support in " + path.string());

  if (j.contains("augmentation")) {
    BucketingScheme scheme;
    scheme.boundaries = j["augmentation"].at("boundaries").get<std::vector<std::uint32_t>>();
    scheme.scale = j["augmentation"].value("scale", "log") == "linear"
                       ? BucketingScheme::Scale::Linear
                       : BucketingScheme::Scale::Log;
    model.bucketing = std::move(scheme);
  }
  return model;
}

}  // namespace pgm
