#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polilab/core/math.hpp"

namespace polilab {

// ---------------------------------------------------------------------------
// Graph side
// ---------------------------------------------------------------------------

enum class NodeTag {
  Legislator,
  Lobbyist,
  Constituent,
  Committee,
  Bill,
  Issue,
  Agency,
  Other,
};

struct NodeKind {
  NodeTag tag = NodeTag::Other;
  std::string other_label;  // only meaningful for NodeTag::Other

  static NodeKind legislator() { return {NodeTag::Legislator, ""}; }
  static NodeKind other(std::string label) {
    return {NodeTag::Other, std::move(label)};
  }

  bool operator==(const NodeKind&) const = default;
};

std::string to_string(const NodeKind& kind);
NodeKind node_kind_from_string(const std::string& s);

struct Node {
  std::int64_t id = 0;  // unique within a graph, not necessarily dense
  NodeKind kind;
  Vec features;  // length m

  bool operator==(const Node&) const = default;
};

// One directed edge. At most one edge per ordered (src, dst) pair; an absent
// edge is a different thing from a present edge whose features are all zero.
struct Edge {
  std::int64_t src = 0;
  std::int64_t dst = 0;
  Vec features;  // length p

  bool operator==(const Edge&) const = default;
};

struct PoliticalGraph {
  std::int64_t graph_id = 0;
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  Vec label;  // length M
  // Per-node targets (e.g. votes); empty vector means "no node labels",
  // nullopt entries mark individual nodes without a target (abstentions).
  std::vector<std::optional<double>> node_labels;

  bool operator==(const PoliticalGraph&) const = default;
};

struct GraphDims {
  std::size_t m = 0;  // node feature width
  std::size_t p = 0;  // edge feature width
  std::size_t M = 0;  // graph label width

  bool operator==(const GraphDims&) const = default;
};

struct GraphDataset {
  std::vector<PoliticalGraph> graphs;
  GraphDims dims;
  // Per label column: true = Bernoulli target (sigmoid head, cross-entropy),
  // false = real target (linear head, squared error). Size M.
  std::vector<bool> label_binary;
  // Generator hidden variables. Opaque to every learner; only tests and
  // audits read it.
  nlohmann::json ground_truth;

  bool operator==(const GraphDataset&) const = default;
};

// Dense materialization of the edge list: tensor[n][n][p] plus a presence
// mask, in node-index (not node-id) order.
struct DenseAdjacency {
  std::size_t n = 0;
  std::size_t p = 0;
  Vec tensor;                     // n*n*p, row-major (src, dst, feature)
  std::vector<std::uint8_t> present;  // n*n

  double at(std::size_t i, std::size_t j, std::size_t f) const {
    return tensor[(i * n + j) * p + f];
  }
  bool has(std::size_t i, std::size_t j) const { return present[i * n + j]; }
};

DenseAdjacency dense_adjacency(const PoliticalGraph& g, std::size_t p);

// ---------------------------------------------------------------------------
// Sequence side
// ---------------------------------------------------------------------------

struct Event {
  double t = 0.0;
  Vec x;                  // length d; 0/1 entries when the sequence is binary
  std::optional<Vec> y;   // length q when present
  bool generated = false;  // true for model-sampled continuation events

  bool operator==(const Event&) const = default;
};

struct EventSequence {
  std::vector<Event> events;
  std::size_t d = 0;
  std::size_t q = 0;
  bool binary_x = false;

  bool operator==(const EventSequence&) const = default;
};

struct SequenceDataset {
  std::vector<EventSequence> sequences;
  nlohmann::json ground_truth;

  bool operator==(const SequenceDataset&) const = default;
};

// ---------------------------------------------------------------------------
// Point process side
// ---------------------------------------------------------------------------

struct PointEvent {
  double t = 0.0;
  std::size_t node = 0;

  bool operator==(const PointEvent&) const = default;
};

struct MarkedPointProcess {
  double horizon = 0.0;  // T
  std::size_t n = 0;     // node count
  std::vector<PointEvent> events;  // strictly increasing timestamps in (0,T]

  bool operator==(const MarkedPointProcess&) const = default;
};

}  // namespace polilab
