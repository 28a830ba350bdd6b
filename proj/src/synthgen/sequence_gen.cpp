#include "polilab/core/errors.hpp"
#include "polilab/core/parallel.hpp"
#include "polilab/core/rng.hpp"
#include "polilab/synthgen/synthgen.hpp"

namespace polilab::synthgen {

namespace {
constexpr std::uint64_t kSeqStreamTag = 0x73657175;
}

void check(const SeqGenConfig& cfg) {
  if (cfg.d == 0) throw ConfigError("sequence generator: d must be >= 1");
  auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!prob(cfg.stay_prob) || !prob(cfg.init_prob))
    throw ConfigError("sequence generator: probabilities must lie in [0,1]");
  if (!(cfg.decay >= 0.0 && cfg.decay < 1.0))
    throw ConfigError("sequence generator: decay must lie in [0,1)");
}

SequenceDataset gen_sequences(const SeqGenConfig& cfg, std::size_t count,
                              std::uint64_t seed) {
  check(cfg);

  struct SeqAndTruth {
    EventSequence s;
    nlohmann::json truth;
  };

  const auto make_seq = [&cfg, seed](std::size_t idx) {
    Rng rng = substream(seed, kSeqStreamTag, idx);

    Vec w(cfg.d);
    for (double& wi : w) wi = rng.uniform(-1.0, 1.0);

    EventSequence s;
    s.d = cfg.d;
    s.q = 1;
    s.binary_x = true;
    s.events.reserve(cfg.T);

    Vec latent_track;
    latent_track.reserve(cfg.T);
    Vec x(cfg.d, 0.0);
    double latent = 0.0;
    for (std::size_t t = 0; t < cfg.T; ++t) {
      for (std::size_t u = 0; u < cfg.d; ++u) {
        if (t == 0)
          x[u] = rng.bernoulli(cfg.init_prob) ? 1.0 : 0.0;
        else if (!rng.bernoulli(cfg.stay_prob))
          x[u] = 1.0 - x[u];
      }
      latent = cfg.decay * latent + dot(w, x);
      latent_track.push_back(latent);
      Event e;
      e.t = static_cast<double>(t);
      e.x = x;
      e.y = Vec{sigmoid(latent)};
      s.events.push_back(std::move(e));
    }

    nlohmann::json truth{{"w", w}, {"decay", cfg.decay}, {"s", latent_track}};
    return SeqAndTruth{std::move(s), std::move(truth)};
  };

  auto made = map_items<SeqAndTruth>(count, make_seq);

  SequenceDataset ds;
  ds.sequences.reserve(count);
  nlohmann::json per_seq = nlohmann::json::array();
  for (auto& st : made) {
    ds.sequences.push_back(std::move(st.s));
    per_seq.push_back(std::move(st.truth));
  }
  ds.ground_truth = {{"mechanism", "linear_latent_presence"},
                     {"sequences", std::move(per_seq)}};
  return ds;
}

}  // namespace polilab::synthgen
