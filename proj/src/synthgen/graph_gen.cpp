#include <algorithm>

#include "polilab/core/errors.hpp"
#include "polilab/core/parallel.hpp"
#include "polilab/core/rng.hpp"
#include "polilab/synthgen/synthgen.hpp"

namespace polilab::synthgen {

namespace {
constexpr std::uint64_t kGraphStreamTag = 0x67726170;  // per-graph substreams
}

void check(const GraphGenConfig& cfg) {
  if (cfg.n < 2) throw ConfigError("graph generator: n must be >= 2");
  if (!(0.0 <= cfg.q_out && cfg.q_out <= cfg.q_in && cfg.q_in <= 1.0))
    throw ConfigError("graph generator: need 0 <= q_out <= q_in <= 1");
  if (!std::isfinite(cfg.w_p) || !std::isfinite(cfg.w_c))
    throw ConfigError("graph generator: non-finite mechanism weight");
  if (!(cfg.lean_coupling >= 0.0 && cfg.lean_coupling <= 0.5))
    throw ConfigError("graph generator: lean_coupling must be in [0, 0.5]");
}

GraphDataset gen_graph_dataset(const GraphGenConfig& cfg, std::uint64_t seed) {
  check(cfg);

  struct GraphAndTruth {
    PoliticalGraph g;
    nlohmann::json truth;
  };

  const auto make_graph = [&cfg, seed](std::size_t k) {
    Rng rng = substream(seed, kGraphStreamTag, k);
    const std::size_t n = cfg.n;

    const double beta = rng.uniform(-1.0, 1.0);
    const double p_plus =
        std::clamp(0.5 + cfg.lean_coupling * beta, 0.01, 0.99);

    PoliticalGraph g;
    g.graph_id = static_cast<std::int64_t>(k);
    g.nodes.reserve(n);
    std::vector<double> party(n);
    for (std::size_t i = 0; i < n; ++i) {
      party[i] = rng.bernoulli(p_plus) ? 1.0 : -1.0;
      const double seniority = rng.uniform();
      const double z1 = rng.normal();
      const double z2 = rng.normal();
      Node v;
      v.id = static_cast<std::int64_t>(i);
      v.kind = NodeKind::legislator();
      v.features = {party[i], seniority, z1, z2};
      g.nodes.push_back(std::move(v));
    }

    // Incoming communication term per destination node.
    std::vector<double> nbr_sum(n, 0.0);
    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const double q = party[i] == party[j] ? cfg.q_in : cfg.q_out;
        if (!rng.bernoulli(q)) continue;
        const double freq = rng.uniform(0.1, 1.0);
        const std::uint64_t rel = rng.uniform_int(3);
        Edge e;
        e.src = static_cast<std::int64_t>(i);
        e.dst = static_cast<std::int64_t>(j);
        e.features = {freq, rel == 0 ? 1.0 : 0.0, rel == 1 ? 1.0 : 0.0,
                      rel == 2 ? 1.0 : 0.0};
        g.edges.push_back(std::move(e));
        nbr_sum[j] += freq * party[i] * beta;
        indeg[j] += 1;
      }
    }

    Vec pi(n);
    double yes = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double nbr = indeg[i] ? nbr_sum[i] / static_cast<double>(indeg[i])
                                  : 0.0;
      pi[i] = sigmoid(cfg.w_p * party[i] * beta + cfg.w_c * nbr);
    }
    g.node_labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double v = rng.bernoulli(pi[i]) ? 1.0 : 0.0;
      g.node_labels.push_back(v);
      yes += v;
    }
    const double share = yes / static_cast<double>(n);
    g.label = {share > 0.5 ? 1.0 : 0.0, share};

    nlohmann::json truth{{"beta", beta},
                         {"p_plus", p_plus},
                         {"party", party},
                         {"pi", pi}};
    return GraphAndTruth{std::move(g), std::move(truth)};
  };

  // Per-graph substreams keep parallel generation identical to serial.
  auto made = map_items<GraphAndTruth>(cfg.K, make_graph);

  GraphDataset ds;
  ds.dims = {4, 4, 2};
  ds.label_binary = {true, false};
  ds.graphs.reserve(cfg.K);
  nlohmann::json per_graph = nlohmann::json::array();
  for (auto& gt : made) {
    ds.graphs.push_back(std::move(gt.g));
    per_graph.push_back(std::move(gt.truth));
  }
  ds.ground_truth = {{"mechanism", "party_lean_vote"},
                     {"w_p", cfg.w_p},
                     {"w_c", cfg.w_c},
                     {"lean_coupling", cfg.lean_coupling},
                     {"graphs", std::move(per_graph)}};
  return ds;
}

}  // namespace polilab::synthgen
