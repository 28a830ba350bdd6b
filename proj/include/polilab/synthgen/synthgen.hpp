#pragma once

#include <cstdint>

#include "polilab/core/math.hpp"
#include "polilab/core/types.hpp"

namespace polilab::synthgen {

// ---------------------------------------------------------------------------
// Graph generator
// ---------------------------------------------------------------------------

// Two-party legislature snapshots with a planted vote mechanism. Per graph k:
//   bill lean        beta_k ~ U(-1,1)                  (hidden, sidecar only)
//   party            party_i = +1 w.p. 0.5 + lean_coupling * beta_k, else -1
//   node features    x_i = [party_i, seniority~U(0,1), z1~N(0,1), z2~N(0,1)]
//   edges            directed (i,j), i != j, present w.p. q_in when the two
//                    parties match and q_out otherwise
//   edge features    a_ij = [freq~U(0.1,1), one-hot relationship type of 3]
//   vote prob        pi_i = sigmoid(w_p * party_i * beta_k
//                           + w_c * mean over incoming (j,i) of
//                                   freq_ji * party_j * beta_k)
//   node labels      v_i ~ Bernoulli(pi_i)
//   graph label      Y = [ 1{mean(v) > 0.5}, mean(v) ]
//
// lean_coupling ties party composition to the bill lean (majority parties
// tend to see bills leaning their way), which is what makes the label
// learnable from observables while beta_k itself stays hidden.
//
// Draw order per graph substream (documented so runs reproduce bit for bit):
// beta; then per node: party, seniority, z1, z2 (each normal consumes two
// uniforms); then per ordered pair (i,j) in row-major order: presence, and if
// present freq then relationship type; then per node: the vote draw.
struct GraphGenConfig {
  std::size_t n = 30;        // nodes per graph
  double q_in = 0.3;         // intra-party directed edge probability
  double q_out = 0.05;       // inter-party directed edge probability
  double w_p = 3.0;          // party-lean mechanism weight
  double w_c = 1.0;          // communication mechanism weight
  std::size_t K = 100;       // graph count
  double lean_coupling = 0.35;  // party composition vs. bill lean
};

// Throws ConfigError when the config violates its invariants.
void check(const GraphGenConfig& cfg);

GraphDataset gen_graph_dataset(const GraphGenConfig& cfg, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Sequence generator
// ---------------------------------------------------------------------------

// Actor-presence bit sequences with a linear latent driver:
//   presence     x_{0,u} ~ Bernoulli(init_prob); afterwards each actor keeps
//                its previous bit w.p. stay_prob and flips otherwise
//   latent       s starts at 0; s_t = decay * s_{t-1} + w . x_t,
//                w ~ U(-1,1)^d drawn once per sequence
//   outcome      y_t = sigmoid(s_t), q = 1
//
// Draw order per sequence substream: w (d uniforms), then per step the d
// presence draws in actor order.
struct SeqGenConfig {
  std::size_t d = 8;        // actor count
  std::size_t T = 50;       // steps
  double stay_prob = 0.8;   // Markov persistence
  double init_prob = 0.3;   // initial presence probability
  double decay = 0.9;       // latent decay in [0,1)
};

void check(const SeqGenConfig& cfg);

SequenceDataset gen_sequences(const SeqGenConfig& cfg, std::size_t count,
                              std::uint64_t seed);

// ---------------------------------------------------------------------------
// Hawkes simulation
// ---------------------------------------------------------------------------

// Multivariate Hawkes process with exponential kernel: node u's intensity is
//   lambda_u(t) = mu_u + sum over past events (t_i, v_i) of
//                 W[v_i, u] * beta * exp(-beta * (t - t_i)).
struct HawkesParams {
  Vec mu;       // base rates, length n, each > 0
  Mat W;        // non-negative influence, n x n, W(v,u) = v's push on u
  double beta = 1.0;  // kernel decay > 0

  std::size_t n() const { return mu.size(); }
};

void check(const HawkesParams& params);

// max row sum of W >= beta; such processes can run away and simulation
// refuses them unless forced.
bool supercritical(const HawkesParams& params);

// Exact sampling by thinning with a piecewise-constant dominating rate. Draw
// order per candidate step: one exponential waiting-time uniform, then one
// acceptance/node-selection uniform.
MarkedPointProcess simulate_hawkes(const HawkesParams& params, double T,
                                   std::uint64_t seed, bool force = false,
                                   std::size_t max_events = 5000000);

}  // namespace polilab::synthgen
