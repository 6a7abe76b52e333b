#include "pgm/dataio.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "pgm/errors.hpp"
#include "pgm/generation.hpp"
#include "pgm/hash_set.hpp"
#include "pgm/model.hpp"
#include "pgm/rng.hpp"

namespace pgm {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::filesystem::path& path, std::size_t line,
                             const std::string& what) {
  throw IoError(path.string() + ":" + std::to_string(line) + ": " + what);
}

std::uint64_t parse_u64(std::string_view token, const std::filesystem::path& path,
                        std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    parse_fail(path, line, "expected an unsigned integer, got '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

LabelSchema load_schema_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw IoError("malformed schema JSON in " + path.string() + ": " + e.what());
  }
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

void save_schema_json(const LabelSchema& schema, const std::filesystem::path& path) {
  json labels = json::array();
  for (const auto& spec : schema.labels()) {
    json entry{{"name", spec.name}, {"domain_size", spec.domain_size}};
    if (!spec.value_names.empty()) entry["values"] = spec.value_names;
    labels.push_back(std::move(entry));
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << json{{"labels", std::move(labels)}}.dump(2) << '\n';
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

GraphBundle GraphBundle::with_prefix(const std::filesystem::path& prefix) {
  GraphBundle bundle;
  bundle.vertices = prefix.string() + ".vertices.csv";
  bundle.edges = prefix.string() + ".edges.txt";
  bundle.schema = prefix.string() + ".schema.json";
  return bundle;
}

LoadReport load_property_graph(const GraphBundle& bundle) {
  const LabelSchema schema = load_schema_json(bundle.schema);
  const std::size_t m = schema.label_count();

  std::ifstream vin(bundle.vertices);
  if (!vin) throw IoError("cannot open " + bundle.vertices.string());

  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(vin, line))
    parse_fail(bundle.vertices, line_no, "missing header row");
  {
    const auto columns = split(strip_cr(line), ',');
    if (columns.size() != m + 1 || columns[0] != "id")
      parse_fail(bundle.vertices, line_no, "header must be 'id,<label names>'");
    for (std::size_t k = 0; k < m; ++k)
      if (columns[k + 1] != schema.label(k).name)
        parse_fail(bundle.vertices, line_no,
                   "header column '" + std::string(columns[k + 1]) +
                       "' does not match schema label '" + schema.label(k).name + "'");
  }

  std::vector<std::uint32_t> values;
  std::vector<bool> seen_id;
  std::size_t rows = 0;
  while (std::getline(vin, line)) {
    ++line_no;
    const auto stripped = strip_cr(line);
    if (stripped.empty()) continue;
    const auto columns = split(stripped, ',');
    if (columns.size() != m + 1)
      parse_fail(bundle.vertices, line_no, "expected " + std::to_string(m + 1) + " columns");
    const std::uint64_t id = parse_u64(columns[0], bundle.vertices, line_no);
    if (id >= (1ull << 32)) parse_fail(bundle.vertices, line_no, "vertex id exceeds 2^32");
    if (seen_id.size() <= id) seen_id.resize(id + 1, false);
    if (seen_id[id]) parse_fail(bundle.vertices, line_no, "duplicate vertex id");
    seen_id[id] = true;
    if (values.size() <= id * m) values.resize((id + 1) * m, 0);
    for (std::size_t k = 0; k < m; ++k) {
      const std::uint64_t v = parse_u64(columns[k + 1], bundle.vertices, line_no);
      if (v >= schema.label(k).domain_size)
        parse_fail(bundle.vertices, line_no,
                   "value " + std::to_string(v) + " outside the domain of label '" +
                       schema.label(k).name + "'");
      values[id * m + k] = static_cast<std::uint32_t>(v);
    }
    ++rows;
  }
  if (rows != seen_id.size())
    throw IoError(bundle.vertices.string() + ": vertex ids are not contiguous from 0");
  const std::size_t n = rows;

  std::ifstream ein(bundle.edges);
  if (!ein) throw IoError("cannot open " + bundle.edges.string());

  LoadReport report{PropertyGraph(schema, {}, {}), 0, 0};
  std::vector<Edge> edges;
  detail::U64Set seen_edges(1024);
  line_no = 0;
  while (std::getline(ein, line)) {
    ++line_no;
    const auto stripped = strip_cr(line);
    if (stripped.empty()) continue;
    std::istringstream tokens{std::string(stripped)};
    std::string a, b, extra;
    if (!(tokens >> a >> b) || (tokens >> extra))
      parse_fail(bundle.edges, line_no, "expected two vertex ids");
    const std::uint64_t u = parse_u64(a, bundle.edges, line_no);
    const std::uint64_t v = parse_u64(b, bundle.edges, line_no);
    if (u >= n || v >= n)
      parse_fail(bundle.edges, line_no, "edge endpoint " + std::to_string(std::max(u, v)) +
                                            " is not in the vertex table");
    if (u == v) {
      ++report.self_loops_dropped;
      continue;
    }
    const Edge edge = make_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    if (!seen_edges.insert(edge_key(edge))) {
      ++report.duplicate_edges_dropped;
      continue;
    }
    edges.push_back(edge);
  }

  report.graph = PropertyGraph(schema, std::move(values), std::move(edges));
  return report;
}

void save_property_graph(const PropertyGraph& g, const GraphBundle& bundle) {
  save_schema_json(g.schema(), bundle.schema);

  std::ofstream vout(bundle.vertices);
  if (!vout) throw IoError("cannot open " + bundle.vertices.string() + " for writing");
  vout << "id";
  for (const auto& spec : g.schema().labels()) vout << ',' << spec.name;
  vout << '\n';
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    vout << i;
    for (std::uint32_t v : g.vertex_labels(static_cast<VertexId>(i))) vout << ',' << v;
    vout << '\n';
  }
  if (!vout) throw IoError("failed writing " + bundle.vertices.string());

  std::vector<Edge> edges = g.edges();
  std::sort(edges.begin(), edges.end());
  std::ofstream eout(bundle.edges);
  if (!eout) throw IoError("cannot open " + bundle.edges.string() + " for writing");
  for (const Edge& e : edges) eout << e.u << ' ' << e.v << '\n';
  if (!eout) throw IoError("failed writing " + bundle.edges.string());
}

RoleBasedConfig role_based_default() {
  LabelSchema schema({{"tier", 2, {"SERVER", "CLIENT"}}, {"zone", 2, {"A", "B"}}});
  // Categories: tier*2 + zone. Cross-tier pairs carry most of the mass,
  // with distinct weights so the categories get distinct mean degrees.
  auto affinity = EdgeCategoryDistribution::from_probs({
      {{0, 2}, 0.34},
      {{0, 3}, 0.22},
      {{1, 2}, 0.22},
      {{1, 3}, 0.10},
      {{0, 0}, 0.02},
      {{1, 1}, 0.02},
      {{2, 2}, 0.02},
      {{3, 3}, 0.02},
      {{0, 1}, 0.02},
      {{2, 3}, 0.02},
  });
  return RoleBasedConfig{2000, 90000, std::move(schema), std::move(affinity), 7};
}

PropertyGraph generate_role_based(const RoleBasedConfig& cfg) {
  const std::uint64_t n = cfg.vertices;
  const std::uint64_t num_categories = cfg.schema.category_count();
  const std::size_t m = cfg.schema.label_count();

  RandomStream rng = RandomStream::substream(cfg.seed, 0x726F6C65);  // label stream
  std::vector<std::uint32_t> flat(n * m);
  LabelVector values;
  for (std::uint64_t i = 0; i < n; ++i) {
    values = decode_category(rng.bounded(num_categories), cfg.schema);
    std::copy(values.begin(), values.end(), flat.begin() + static_cast<std::ptrdiff_t>(i * m));
  }

  const CategoryPools pools = build_category_pools(flat, cfg.schema);
  GenerationConfig gen_cfg;
  gen_cfg.target_vertices = n;
  gen_cfg.target_edges = cfg.edges;
  gen_cfg.seed = derive_seed(cfg.seed, 0x65646765);
  EdgeSampleResult edges = sample_edges(cfg.affinity, pools, gen_cfg);

  return PropertyGraph(cfg.schema, std::move(flat), std::move(edges.edges));
}

EdgeCategoryDistribution load_affinity_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw IoError("malformed affinity JSON in " + path.string() + ": " + e.what());
  }
  std::vector<std::pair<CategoryPair, double>> pairs;
  for (const auto& entry : j.at("pairs"))
    pairs.emplace_back(
        CategoryPair{entry.at("a").get<std::uint64_t>(), entry.at("b").get<std::uint64_t>()},
        entry.at("p").get<double>());
  return EdgeCategoryDistribution::from_probs(std::move(pairs));
}

namespace {

struct EgoNet {
  std::uint64_t ego_id = 0;
  std::filesystem::path edges;
  std::filesystem::path feat;
  std::filesystem::path featnames;
  std::filesystem::path egofeat;
};

std::vector<EgoNet> discover_ego_nets(const std::filesystem::path& directory) {
  std::map<std::uint64_t, EgoNet> egos;
  if (!std::filesystem::is_directory(directory))
    throw IoError(directory.string() + " is not a directory");
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    if (!entry.is_regular_file()) continue;
    const auto& path = entry.path();
    const std::string stem = path.stem().string();
    std::uint64_t ego_id = 0;
    const auto [ptr, ec] = std::from_chars(stem.data(), stem.data() + stem.size(), ego_id);
    if (ec != std::errc{} || ptr != stem.data() + stem.size()) continue;
    auto& ego = egos[ego_id];
    ego.ego_id = ego_id;
    const std::string ext = path.extension().string();
    if (ext == ".edges") ego.edges = path;
    else if (ext == ".feat") ego.feat = path;
    else if (ext == ".featnames") ego.featnames = path;
    else if (ext == ".egofeat") ego.egofeat = path;
  }
  std::vector<EgoNet> out;
  for (auto& [id, ego] : egos)
    if (!ego.featnames.empty() && !ego.feat.empty()) out.push_back(std::move(ego));
  if (out.empty()) throw IoError("no ego-nets found in " + directory.string());
  return out;
}

/// featnames line: "<index> <feature name...>".
std::unordered_map<std::string, std::size_t> read_feature_names(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::unordered_map<std::string, std::size_t> names;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto stripped = strip_cr(line);
    if (stripped.empty()) continue;
    const std::size_t space = stripped.find(' ');
    if (space == std::string_view::npos)
      parse_fail(path, line_no, "expected '<index> <feature name>'");
    const std::uint64_t index = parse_u64(stripped.substr(0, space), path, line_no);
    names[std::string(stripped.substr(space + 1))] = index;
  }
  return names;
}

}  // namespace

SnapLoadReport load_snap_ego_nets(const std::filesystem::path& directory,
                                  const std::vector<std::string>& selected_feature_names) {
  if (selected_feature_names.empty())
    throw IoError("no features selected for the ego-net labels");

  const auto egos = discover_ego_nets(directory);
  const std::size_t m = selected_feature_names.size();

  // Global vertex ids are sparse; collect features and edges first, then
  // remap to dense ids.
  std::map<std::uint64_t, std::vector<bool>> features;   // OR across ego-nets
  std::map<std::uint64_t, std::vector<bool>> has_value;  // per selected feature
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw_edges;
  bool any_feature_matched = false;

  auto touch = [&](std::uint64_t id) {
    features.try_emplace(id, std::vector<bool>(m, false));
    has_value.try_emplace(id, std::vector<bool>(m, false));
  };

  for (const auto& ego : egos) {
    const auto names = read_feature_names(ego.featnames);
    std::vector<std::ptrdiff_t> columns(m, -1);
    for (std::size_t k = 0; k < m; ++k) {
      const auto it = names.find(selected_feature_names[k]);
      if (it != names.end()) {
        columns[k] = static_cast<std::ptrdiff_t>(it->second);
        any_feature_matched = true;
      }
    }

    auto apply_feature_row = [&](std::uint64_t vertex, const std::vector<std::string_view>& bits,
                                 const std::filesystem::path& path, std::size_t line_no) {
      touch(vertex);
      for (std::size_t k = 0; k < m; ++k) {
        if (columns[k] < 0) continue;
        if (static_cast<std::size_t>(columns[k]) >= bits.size())
          parse_fail(path, line_no, "feature row shorter than the feature-name table");
        const std::uint64_t bit = parse_u64(bits[columns[k]], path, line_no);
        if (bit > 1) parse_fail(path, line_no, "feature values must be binary");
        if (bit == 1) features[vertex][k] = true;
        has_value[vertex][k] = true;
      }
    };

    std::ifstream fin(ego.feat);
    if (!fin) throw IoError("cannot open " + ego.feat.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(fin, line)) {
      ++line_no;
      const auto stripped = strip_cr(line);
      if (stripped.empty()) continue;
      auto tokens = split(stripped, ' ');
      if (tokens.size() < 2) parse_fail(ego.feat, line_no, "expected '<id> <bits...>'");
      const std::uint64_t vertex = parse_u64(tokens[0], ego.feat, line_no);
      tokens.erase(tokens.begin());
      apply_feature_row(vertex, tokens, ego.feat, line_no);
      raw_edges.emplace_back(ego.ego_id, vertex);  // ego connects to every alter
    }

    if (!ego.egofeat.empty()) {
      std::ifstream gin(ego.egofeat);
      if (!gin) throw IoError("cannot open " + ego.egofeat.string());
      line_no = 0;
      while (std::getline(gin, line)) {
        ++line_no;
        const auto stripped = strip_cr(line);
        if (stripped.empty()) continue;
        apply_feature_row(ego.ego_id, split(stripped, ' '), ego.egofeat, line_no);
      }
    } else {
      touch(ego.ego_id);
    }

    if (!ego.edges.empty()) {
      std::ifstream ein(ego.edges);
      if (!ein) throw IoError("cannot open " + ego.edges.string());
      line_no = 0;
      while (std::getline(ein, line)) {
        ++line_no;
        const auto stripped = strip_cr(line);
        if (stripped.empty()) continue;
        std::istringstream tokens{std::string(stripped)};
        std::string a, b;
        if (!(tokens >> a >> b)) parse_fail(ego.edges, line_no, "expected two vertex ids");
        const std::uint64_t u = parse_u64(a, ego.edges, line_no);
        const std::uint64_t v = parse_u64(b, ego.edges, line_no);
        touch(u);
        touch(v);
        raw_edges.emplace_back(u, v);
      }
    }
  }

  if (!any_feature_matched)
    throw IoError("none of the selected features appear in any ego-net");

  std::unordered_map<std::uint64_t, VertexId> dense;
  dense.reserve(features.size());
  std::vector<std::uint32_t> values;
  values.reserve(features.size() * m);
  std::uint64_t missing_defaults = 0;
  for (const auto& [id, bits] : features) {
    dense.emplace(id, static_cast<VertexId>(dense.size()));
    bool missing_any = false;
    for (std::size_t k = 0; k < m; ++k) {
      values.push_back(bits[k] ? 1u : 0u);
      if (!has_value.at(id)[k]) missing_any = true;
    }
    if (missing_any) ++missing_defaults;
  }

  std::vector<LabelSpec> specs;
  specs.reserve(m);
  for (const auto& name : selected_feature_names) specs.push_back({name, 2, {}});

  SnapLoadReport report{PropertyGraph(LabelSchema(std::move(specs)), {}, {}), missing_defaults,
                        0};

  std::vector<Edge> edges;
  edges.reserve(raw_edges.size());
  detail::U64Set seen(raw_edges.size());
  for (const auto& [u, v] : raw_edges) {
    if (u == v) continue;
    const Edge edge = make_edge(dense.at(u), dense.at(v));
    if (!seen.insert(edge_key(edge))) {
      ++report.duplicate_edges_dropped;
      continue;
    }
    edges.push_back(edge);
  }

  report.graph = PropertyGraph(report.graph.schema(), std::move(values), std::move(edges));
  return report;
}

}  // namespace pgm
