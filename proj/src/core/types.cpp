#include "polilab/core/types.hpp"

#include <unordered_map>

#include "polilab/core/errors.hpp"

namespace polilab {

std::string to_string(const NodeKind& kind) {
  switch (kind.tag) {
    case NodeTag::Legislator: return "legislator";
    case NodeTag::Lobbyist: return "lobbyist";
    case NodeTag::Constituent: return "constituent";
    case NodeTag::Committee: return "committee";
    case NodeTag::Bill: return "bill";
    case NodeTag::Issue: return "issue";
    case NodeTag::Agency: return "agency";
    case NodeTag::Other: return "other:" + kind.other_label;
  }
  return "other:";
}

NodeKind node_kind_from_string(const std::string& s) {
  if (s == "legislator") return {NodeTag::Legislator, ""};
  if (s == "lobbyist") return {NodeTag::Lobbyist, ""};
  if (s == "constituent") return {NodeTag::Constituent, ""};
  if (s == "committee") return {NodeTag::Committee, ""};
  if (s == "bill") return {NodeTag::Bill, ""};
  if (s == "issue") return {NodeTag::Issue, ""};
  if (s == "agency") return {NodeTag::Agency, ""};
  if (s.rfind("other:", 0) == 0) return {NodeTag::Other, s.substr(6)};
  throw ParseError("unknown node kind '" + s + "'");
}

DenseAdjacency dense_adjacency(const PoliticalGraph& g, std::size_t p) {
  DenseAdjacency d;
  d.n = g.nodes.size();
  d.p = p;
  d.tensor.assign(d.n * d.n * p, 0.0);
  d.present.assign(d.n * d.n, 0);

  std::unordered_map<std::int64_t, std::size_t> index;
  index.reserve(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) index[g.nodes[i].id] = i;

  for (const Edge& e : g.edges) {
    const auto si = index.find(e.src);
    const auto di = index.find(e.dst);
    if (si == index.end() || di == index.end())
      throw ArgumentError("dense_adjacency: edge endpoint not in graph");
    const std::size_t i = si->second, j = di->second;
    d.present[i * d.n + j] = 1;
    for (std::size_t f = 0; f < p && f < e.features.size(); ++f)
      d.tensor[(i * d.n + j) * p + f] = e.features[f];
  }
  return d;
}

}  // namespace polilab
