#include "pgm/generation.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <thread>

#include "pgm/errors.hpp"
#include "pgm/hash_set.hpp"
#include "pgm/sampler.hpp"

namespace pgm {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void check_config(const GenerationConfig& cfg) {
  if (cfg.target_vertices < 2) throw ConfigError("target graph needs at least 2 vertices");
  if (cfg.target_vertices > (1ull << 32))
    throw ConfigError("target vertex count exceeds 2^32");
  if (cfg.target_edges < 1) throw ConfigError("target graph needs at least 1 edge");
  const std::uint64_t max_edges = cfg.target_vertices * (cfg.target_vertices - 1) / 2;
  if (cfg.target_edges > max_edges)
    throw ConfigError("target edge count exceeds the simple-graph maximum");
  if (cfg.max_attempt_factor < 1) throw ConfigError("max_attempt_factor must be positive");
}

struct DrawCounters {
  std::uint64_t rejected_self = 0;
  std::uint64_t rejected_duplicate = 0;
  std::uint64_t rejected_empty_pool = 0;
  std::uint64_t attempts = 0;
};

/// One edge-draw attempt: category pair from the alias table, endpoints
/// uniform from the pools, two distinct indices for diagonal pairs.
/// Returns nothing on a self/starved-pool rejection.
std::optional<Edge> draw_candidate(const AliasTable& pair_table,
                                   std::span<const CategoryPair> support,
                                   const CategoryPools& pools, RandomStream& rng,
                                   DrawCounters& counters) {
  ++counters.attempts;
  const CategoryPair pair = support[pair_table.sample(rng)];
  const auto& pool_a = pools[pair.first];
  const auto& pool_b = pools[pair.second];

  if (pair.first == pair.second) {
    if (pool_a.empty()) {
      ++counters.rejected_empty_pool;
      return std::nullopt;
    }
    if (pool_a.size() < 2) {
      ++counters.rejected_self;
      return std::nullopt;
    }
    const std::uint64_t i = rng.bounded(pool_a.size());
    std::uint64_t j = rng.bounded(pool_a.size() - 1);
    if (j >= i) ++j;
    return make_edge(pool_a[i], pool_a[j]);
  }

  if (pool_a.empty() || pool_b.empty()) {
    ++counters.rejected_empty_pool;
    return std::nullopt;
  }
  return make_edge(pool_a[rng.bounded(pool_a.size())], pool_b[rng.bounded(pool_b.size())]);
}

}  // namespace

std::vector<std::uint32_t> sample_vertex_labels(const CategoricalDistribution& p_l,
                                                const LabelSchema& s, std::uint64_t n_t,
                                                std::uint64_t seed) {
  if (p_l.support_size() != s.category_count())
    throw ConfigError("label distribution support does not match schema");
  const std::size_t m = s.label_count();
  std::vector<std::uint32_t> flat(n_t * m);
  CategorySampler sampler(p_l, seed);
  LabelVector values;
  for (std::uint64_t i = 0; i < n_t; ++i) {
    values = decode_category(sampler.draw(), s);
    std::copy(values.begin(), values.end(), flat.begin() + static_cast<std::ptrdiff_t>(i * m));
  }
  return flat;
}

CategoryPools build_category_pools(std::span<const std::uint32_t> flat_labels,
                                   const LabelSchema& s) {
  const std::size_t m = s.label_count();
  if (flat_labels.size() % m != 0)
    throw SchemaError("label value array is not a multiple of the label count");
  const std::size_t n = flat_labels.size() / m;

  CategoryPools pools(s.category_count());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t category = encode_label_vector(flat_labels.subspan(i * m, m), s);
    pools[category].push_back(static_cast<VertexId>(i));
  }
  return pools;
}

EdgeSampleResult sample_edges(const EdgeCategoryDistribution& p_c, const CategoryPools& pools,
                              const GenerationConfig& cfg) {
  check_config(cfg);
  for (const auto& e : p_c.entries)
    if (e.pair.second >= pools.size())
      throw ConfigError("edge category distribution references a category without a pool");

  std::vector<double> weights;
  std::vector<CategoryPair> support;
  weights.reserve(p_c.entries.size());
  support.reserve(p_c.entries.size());
  for (const auto& e : p_c.entries) {
    weights.push_back(e.prob);
    support.push_back(e.pair);
  }
  const AliasTable pair_table(weights);

  const std::uint64_t m_t = cfg.target_edges;
  const std::uint64_t total_budget = cfg.max_attempt_factor * m_t;
  const unsigned threads = std::max(1u, cfg.threads);

  // Workers fill per-worker buffers from independent streams. Buffers are
  // deduplicated locally only; the final merge deduplicates across
  // workers in worker order and tops up from a dedicated stream until m_t
  // is reached.
  std::vector<std::vector<Edge>> buffers(threads);
  std::vector<DrawCounters> counters(threads);
  auto run_worker = [&](unsigned w) {
    const std::uint64_t quota = m_t / threads + (w < m_t % threads ? 1 : 0);
    const std::uint64_t budget = cfg.max_attempt_factor * quota;
    RandomStream rng = RandomStream::substream(cfg.seed, w);
    detail::U64Set seen(quota);
    auto& out = buffers[w];
    auto& c = counters[w];
    out.reserve(quota);
    while (out.size() < quota && c.attempts < budget) {
      const auto edge = draw_candidate(pair_table, support, pools, rng, c);
      if (!edge) continue;
      if (seen.insert(edge_key(*edge)))
        out.push_back(*edge);
      else
        ++c.rejected_duplicate;
    }
  };

  if (threads == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(run_worker, w);
    for (auto& t : pool) t.join();
  }

  EdgeSampleResult result;
  for (const auto& c : counters) {
    result.rejected_self += c.rejected_self;
    result.rejected_duplicate += c.rejected_duplicate;
    result.rejected_empty_pool += c.rejected_empty_pool;
    result.attempts += c.attempts;
  }

  detail::U64Set merged(m_t);
  result.edges.reserve(m_t);
  for (const auto& buffer : buffers) {
    if (result.edges.size() == m_t) break;
    for (const Edge& e : buffer) {
      if (result.edges.size() == m_t) break;
      if (merged.insert(edge_key(e)))
        result.edges.push_back(e);
      else
        ++result.rejected_duplicate;
    }
  }

  if (result.edges.size() < m_t) {
    RandomStream rng = RandomStream::substream(cfg.seed, threads);
    DrawCounters c;
    while (result.edges.size() < m_t && result.attempts + c.attempts < total_budget) {
      const auto edge = draw_candidate(pair_table, support, pools, rng, c);
      if (!edge) continue;
      if (merged.insert(edge_key(*edge)))
        result.edges.push_back(*edge);
      else
        ++c.rejected_duplicate;
    }
    result.rejected_self += c.rejected_self;
    result.rejected_duplicate += c.rejected_duplicate;
    result.rejected_empty_pool += c.rejected_empty_pool;
    result.attempts += c.attempts;
  }

  if (result.edges.size() < m_t)
    throw SaturationError(
        "edge drawing saturated after " + std::to_string(result.attempts) + " attempts (" +
            std::to_string(result.edges.size()) + "/" + std::to_string(m_t) +
            " edges placed); the target may exceed what the pools can support",
        result.attempts, result.rejected_self, result.rejected_duplicate,
        result.rejected_empty_pool);
  return result;
}

GenerationReport generate_from_model(const Model& model, const GenerationConfig& cfg) {
  check_config(cfg);

  auto t0 = Clock::now();
  auto flat_labels = sample_vertex_labels(model.label_dist, model.schema, cfg.target_vertices,
                                          derive_seed(cfg.seed, 0x76657274));  // vertex stream
  const double label_ms = elapsed_ms(t0);

  t0 = Clock::now();
  const CategoryPools pools = build_category_pools(flat_labels, model.schema);
  const double pool_ms = elapsed_ms(t0);

  t0 = Clock::now();
  GenerationConfig edge_cfg = cfg;
  edge_cfg.seed = derive_seed(cfg.seed, 0x65646765);  // edge stream
  EdgeSampleResult edges = sample_edges(model.edge_dist, pools, edge_cfg);
  const double edge_ms = elapsed_ms(t0);

  return GenerationReport{
      PropertyGraph(model.schema, std::move(flat_labels), std::move(edges.edges)),
      edges.rejected_self,
      edges.rejected_duplicate,
      edges.rejected_empty_pool,
      edges.attempts,
      label_ms,
      pool_ms,
      edge_ms};
}

GenerationReport sim_attr_graph(const PropertyGraph& source, const GenerationConfig& cfg) {
  return generate_from_model(fit_model(source), cfg);
}

GenerationReport expand(const PropertyGraph& source, double vertex_scale, double edge_scale,
                        std::uint64_t seed, unsigned threads) {
  if (vertex_scale < 1.0 || edge_scale < 1.0)
    throw ConfigError("expansion scales must be at least 1");
  GenerationConfig cfg;
  cfg.target_vertices = static_cast<std::uint64_t>(
      std::llround(vertex_scale * static_cast<double>(source.vertex_count())));
  cfg.target_edges = static_cast<std::uint64_t>(
      std::llround(edge_scale * static_cast<double>(source.edges().size())));
  cfg.seed = seed;
  cfg.threads = threads;
  return sim_attr_graph(source, cfg);
}

}  // namespace pgm
