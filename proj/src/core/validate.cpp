#include "polilab/core/validate.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <unordered_set>

namespace polilab {

namespace {

std::string fmt(std::int64_t v) { return std::to_string(v); }

bool finite_vec(const Vec& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace

std::string ValidationReport::joined() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i];
  }
  return os.str();
}

ValidationReport validate_graph(const PoliticalGraph& g,
                                const GraphDims& dims) {
  ValidationReport r;
  auto add = [&](const std::string& s) { r.violations.push_back(s); };

  if (g.nodes.empty()) add("graph " + fmt(g.graph_id) + ": no nodes (n >= 1)");

  std::unordered_set<std::int64_t> ids;
  for (const Node& v : g.nodes) {
    if (v.id < 0) add("node id " + fmt(v.id) + " is negative");
    if (!ids.insert(v.id).second) add("duplicate node id " + fmt(v.id));
    if (v.features.size() != dims.m)
      add("node " + fmt(v.id) + ": feature length " +
          std::to_string(v.features.size()) + ", expected m=" +
          std::to_string(dims.m));
    else if (!finite_vec(v.features))
      add("node " + fmt(v.id) + ": non-finite feature");
    if (v.kind.tag == NodeTag::Other &&
        (v.kind.other_label.empty() || v.kind.other_label.size() > 64))
      add("node " + fmt(v.id) + ": Other label must be 1..64 characters");
  }

  std::set<std::pair<std::int64_t, std::int64_t>> pairs;
  for (const Edge& e : g.edges) {
    if (e.src == e.dst) add("self-loop at node " + fmt(e.src));
    if (!ids.count(e.src))
      add("edge (" + fmt(e.src) + "," + fmt(e.dst) + "): unknown src");
    if (!ids.count(e.dst))
      add("edge (" + fmt(e.src) + "," + fmt(e.dst) + "): unknown dst");
    if (!pairs.insert({e.src, e.dst}).second)
      add("duplicate edge (" + fmt(e.src) + "," + fmt(e.dst) + ")");
    if (e.features.size() != dims.p)
      add("edge (" + fmt(e.src) + "," + fmt(e.dst) + "): feature length " +
          std::to_string(e.features.size()) + ", expected p=" +
          std::to_string(dims.p));
    else if (!finite_vec(e.features))
      add("edge (" + fmt(e.src) + "," + fmt(e.dst) + "): non-finite feature");
  }

  if (g.label.size() != dims.M)
    add("graph " + fmt(g.graph_id) + ": label length " +
        std::to_string(g.label.size()) + ", expected M=" +
        std::to_string(dims.M));
  else if (!finite_vec(g.label))
    add("graph " + fmt(g.graph_id) + ": non-finite label");

  if (!g.node_labels.empty()) {
    if (g.node_labels.size() != g.nodes.size())
      add("graph " + fmt(g.graph_id) + ": node_labels length " +
          std::to_string(g.node_labels.size()) + " != n=" +
          std::to_string(g.nodes.size()));
    for (std::size_t i = 0; i < g.node_labels.size(); ++i)
      if (g.node_labels[i] && !std::isfinite(*g.node_labels[i]))
        add("graph " + fmt(g.graph_id) + ": non-finite node label at index " +
            std::to_string(i));
  }

  return r;
}

ValidationReport validate_dataset(const GraphDataset& ds) {
  ValidationReport r;
  if (ds.label_binary.size() != ds.dims.M)
    r.violations.push_back("label_binary length != M");
  std::unordered_set<std::int64_t> ids;
  for (const PoliticalGraph& g : ds.graphs) {
    if (!ids.insert(g.graph_id).second)
      r.violations.push_back("duplicate graph_id " + fmt(g.graph_id));
    auto gr = validate_graph(g, ds.dims);
    r.violations.insert(r.violations.end(), gr.violations.begin(),
                        gr.violations.end());
  }
  return r;
}

ValidationReport validate_sequence(const EventSequence& s) {
  ValidationReport r;
  auto add = [&](const std::string& v) { r.violations.push_back(v); };
  double prev_t = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    const Event& e = s.events[i];
    if (!(e.t > prev_t))
      add("event " + std::to_string(i) + ": timestamps not strictly increasing");
    prev_t = e.t;
    if (e.x.size() != s.d)
      add("event " + std::to_string(i) + ": x length " +
          std::to_string(e.x.size()) + ", expected d=" + std::to_string(s.d));
    else if (!finite_vec(e.x))
      add("event " + std::to_string(i) + ": non-finite x");
    if (s.binary_x)
      for (double b : e.x)
        if (b != 0.0 && b != 1.0) {
          add("event " + std::to_string(i) + ": non-binary bit");
          break;
        }
    if (e.y) {
      if (e.y->size() != s.q)
        add("event " + std::to_string(i) + ": y length " +
            std::to_string(e.y->size()) + ", expected q=" +
            std::to_string(s.q));
      else if (!finite_vec(*e.y))
        add("event " + std::to_string(i) + ": non-finite y");
    }
  }
  return r;
}

ValidationReport validate_point_process(const MarkedPointProcess& pp) {
  ValidationReport r;
  auto add = [&](const std::string& v) { r.violations.push_back(v); };
  if (!(pp.horizon > 0.0)) add("horizon T must be positive");
  double prev_t = 0.0;
  for (std::size_t i = 0; i < pp.events.size(); ++i) {
    const PointEvent& e = pp.events[i];
    if (!(e.t > prev_t))
      add("event " + std::to_string(i) + ": timestamps not strictly increasing");
    prev_t = e.t;
    if (e.t > pp.horizon)
      add("event " + std::to_string(i) + ": timestamp beyond horizon");
    if (e.node >= pp.n)
      add("event " + std::to_string(i) + ": node index out of range");
  }
  return r;
}

}  // namespace polilab
