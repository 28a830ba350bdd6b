#include <cmath>

#include "polilab/core/errors.hpp"
#include "polilab/core/rng.hpp"
#include "polilab/synthgen/synthgen.hpp"

namespace polilab::synthgen {

void check(const HawkesParams& params) {
  const std::size_t n = params.mu.size();
  if (n == 0) throw ConfigError("hawkes: empty mu");
  for (double m : params.mu)
    if (!(m > 0.0) || !std::isfinite(m))
      throw ConfigError("hawkes: mu entries must be positive and finite");
  if (params.W.rows != n || params.W.cols != n)
    throw ConfigError("hawkes: W must be n x n");
  for (double w : params.W.a)
    if (w < 0.0 || !std::isfinite(w))
      throw ConfigError("hawkes: W entries must be non-negative and finite");
  if (!(params.beta > 0.0) || !std::isfinite(params.beta))
    throw ConfigError("hawkes: beta must be positive");
}

bool supercritical(const HawkesParams& params) {
  double max_row = 0.0;
  for (std::size_t v = 0; v < params.W.rows; ++v) {
    double row = 0.0;
    for (std::size_t u = 0; u < params.W.cols; ++u) row += params.W(v, u);
    max_row = std::max(max_row, row);
  }
  return max_row >= params.beta;
}

MarkedPointProcess simulate_hawkes(const HawkesParams& params, double T,
                                   std::uint64_t seed, bool force,
                                   std::size_t max_events) {
  check(params);
  if (!(T > 0.0)) throw ConfigError("hawkes: T must be positive");
  if (supercritical(params) && !force)
    throw ConfigError(
        "hawkes: supercritical W (max row sum >= beta); pass force to "
        "simulate anyway");

  const std::size_t n = params.n();
  Rng rng(seed);

  MarkedPointProcess pp;
  pp.horizon = T;
  pp.n = n;

  // Excitation part of each intensity at the current cursor. Between events
  // intensities only decay, so their sum at the cursor dominates the true
  // rate over the whole next interval.
  Vec excite(n, 0.0);
  double t = 0.0;
  double mu_total = 0.0;
  for (double m : params.mu) mu_total += m;

  for (;;) {
    double bound = mu_total;
    for (double e : excite) bound += e;
    if (!(bound > 0.0)) break;

    double delta;
    do {
      delta = rng.exponential(bound);
    } while (delta == 0.0);
    t += delta;
    if (t > T) break;

    const double decay = std::exp(-params.beta * delta);
    for (double& e : excite) e *= decay;

    double total = mu_total;
    for (double e : excite) total += e;

    // One uniform decides both acceptance and, on acceptance, the node:
    // a point below `total` on the [0, bound) line falls into some node's
    // intensity segment.
    const double r = rng.uniform() * bound;
    if (r >= total) continue;

    std::size_t node = n - 1;
    double cum = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      cum += params.mu[u] + excite[u];
      if (r < cum) {
        node = u;
        break;
      }
    }

    pp.events.push_back({t, node});
    if (pp.events.size() > max_events)
      throw NumericError("hawkes: event budget exceeded (" +
                         std::to_string(max_events) +
                         "); process appears to run away");
    for (std::size_t u = 0; u < n; ++u)
      excite[u] += params.W(node, u) * params.beta;
  }

  return pp;
}

}  // namespace polilab::synthgen
