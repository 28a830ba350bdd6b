#include "polilab/core/serialize.hpp"

#include <fstream>
#include <sstream>

#include "polilab/core/errors.hpp"

namespace polilab {

using nlohmann::json;

namespace {

json parse_line(const std::string& line, const std::string& origin,
                std::size_t lineno) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    throw ParseError(origin + ": line " + std::to_string(lineno) + ": " +
                     e.what());
  }
}

// Splits into lines; a trailing newline does not create an empty final line.
std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

json expect_header(const std::vector<std::string>& lines,
                   const std::string& origin, const std::string& kind) {
  if (lines.empty()) throw ParseError(origin + ": line 1: empty file");
  json h = parse_line(lines[0], origin, 1);
  if (!h.is_object() || !h.contains("schema_version"))
    throw ParseError(origin + ": line 1: missing header");
  if (h["schema_version"] != kSchemaVersion)
    throw VersionError(origin + ": schema_version " +
                       h["schema_version"].dump() + ", this build reads " +
                       std::to_string(kSchemaVersion));
  if (h.value("kind", std::string{}) != kind)
    throw ParseError(origin + ": line 1: expected kind '" + kind + "', got '" +
                     h.value("kind", std::string{}) + "'");
  return h;
}

template <class T>
T field(const json& j, const char* key, const std::string& origin,
        std::size_t lineno) {
  if (!j.contains(key))
    throw ParseError(origin + ": line " + std::to_string(lineno) +
                     ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(origin + ": line " + std::to_string(lineno) + ": field '" +
                     std::string(key) + "': " + e.what());
  }
}

json node_to_json(const Node& v) {
  return json{{"id", v.id},
              {"kind", to_string(v.kind)},
              {"features", v.features}};
}

json edge_to_json(const Edge& e) {
  return json{{"src", e.src}, {"dst", e.dst}, {"features", e.features}};
}

json graph_to_json(const PoliticalGraph& g) {
  json nodes = json::array();
  for (const Node& v : g.nodes) nodes.push_back(node_to_json(v));
  json edges = json::array();
  for (const Edge& e : g.edges) edges.push_back(edge_to_json(e));
  json rec{{"graph_id", g.graph_id},
           {"nodes", std::move(nodes)},
           {"edges", std::move(edges)},
           {"label", g.label}};
  if (!g.node_labels.empty()) {
    json nl = json::array();
    for (const auto& v : g.node_labels) {
      if (v)
        nl.push_back(*v);
      else
        nl.push_back(nullptr);
    }
    rec["node_labels"] = std::move(nl);
  }
  return rec;
}

PoliticalGraph graph_from_json(const json& rec, const std::string& origin,
                               std::size_t lineno) {
  PoliticalGraph g;
  g.graph_id = field<std::int64_t>(rec, "graph_id", origin, lineno);
  for (const json& nj : field<json>(rec, "nodes", origin, lineno)) {
    Node v;
    v.id = field<std::int64_t>(nj, "id", origin, lineno);
    v.kind = node_kind_from_string(field<std::string>(nj, "kind", origin, lineno));
    v.features = field<Vec>(nj, "features", origin, lineno);
    g.nodes.push_back(std::move(v));
  }
  for (const json& ej : field<json>(rec, "edges", origin, lineno)) {
    Edge e;
    e.src = field<std::int64_t>(ej, "src", origin, lineno);
    e.dst = field<std::int64_t>(ej, "dst", origin, lineno);
    e.features = field<Vec>(ej, "features", origin, lineno);
    g.edges.push_back(std::move(e));
  }
  g.label = field<Vec>(rec, "label", origin, lineno);
  if (rec.contains("node_labels")) {
    for (const json& v : rec.at("node_labels")) {
      if (v.is_null())
        g.node_labels.push_back(std::nullopt);
      else
        g.node_labels.push_back(v.get<double>());
    }
  }
  return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph datasets
// ---------------------------------------------------------------------------

std::string serialize_graph_dataset(const GraphDataset& ds) {
  std::ostringstream os;
  json header{{"schema_version", kSchemaVersion},
              {"kind", "graph_dataset"},
              {"dims", {{"m", ds.dims.m}, {"p", ds.dims.p}, {"M", ds.dims.M}}},
              {"label_binary", ds.label_binary},
              {"graph_count", ds.graphs.size()},
              {"has_ground_truth", !ds.ground_truth.is_null()}};
  os << header.dump() << "\n";
  for (const PoliticalGraph& g : ds.graphs) os << graph_to_json(g).dump() << "\n";
  if (!ds.ground_truth.is_null())
    os << json{{"ground_truth", ds.ground_truth}}.dump() << "\n";
  return os.str();
}

GraphDataset parse_graph_dataset(const std::string& text,
                                 const std::string& origin) {
  const auto lines = split_lines(text);
  const json h = expect_header(lines, origin, "graph_dataset");

  GraphDataset ds;
  const json dims = field<json>(h, "dims", origin, 1);
  ds.dims.m = field<std::size_t>(dims, "m", origin, 1);
  ds.dims.p = field<std::size_t>(dims, "p", origin, 1);
  ds.dims.M = field<std::size_t>(dims, "M", origin, 1);
  ds.label_binary = field<std::vector<bool>>(h, "label_binary", origin, 1);
  const auto count = field<std::size_t>(h, "graph_count", origin, 1);
  const bool has_gt = field<bool>(h, "has_ground_truth", origin, 1);

  const std::size_t expected = 1 + count + (has_gt ? 1 : 0);
  if (lines.size() < expected)
    throw ParseError(origin + ": line " + std::to_string(lines.size()) +
                     ": truncated file, expected " + std::to_string(expected) +
                     " records");

  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t lineno = 2 + k;
    ds.graphs.push_back(
        graph_from_json(parse_line(lines[k + 1], origin, lineno), origin, lineno));
  }
  if (has_gt) {
    const std::size_t lineno = 1 + count + 1;
    json gt = parse_line(lines[count + 1], origin, lineno);
    ds.ground_truth = field<json>(gt, "ground_truth", origin, lineno);
  }
  return ds;
}

// ---------------------------------------------------------------------------
// Event sequences
// ---------------------------------------------------------------------------

std::string serialize_sequences(const SequenceDataset& ds) {
  std::ostringstream os;
  json header{{"schema_version", kSchemaVersion},
              {"kind", "event_sequences"},
              {"sequence_count", ds.sequences.size()},
              {"has_ground_truth", !ds.ground_truth.is_null()}};
  os << header.dump() << "\n";
  for (const EventSequence& s : ds.sequences) {
    json events = json::array();
    for (const Event& e : s.events) {
      json ej{{"t", e.t}, {"x", e.x}};
      if (e.y) ej["y"] = *e.y;
      if (e.generated) ej["generated"] = true;
      events.push_back(std::move(ej));
    }
    json rec{{"d", s.d},
             {"q", s.q},
             {"binary_x", s.binary_x},
             {"events", std::move(events)}};
    os << rec.dump() << "\n";
  }
  if (!ds.ground_truth.is_null())
    os << json{{"ground_truth", ds.ground_truth}}.dump() << "\n";
  return os.str();
}

SequenceDataset parse_sequences(const std::string& text,
                                const std::string& origin) {
  const auto lines = split_lines(text);
  const json h = expect_header(lines, origin, "event_sequences");
  const auto count = field<std::size_t>(h, "sequence_count", origin, 1);
  const bool has_gt = field<bool>(h, "has_ground_truth", origin, 1);

  const std::size_t expected = 1 + count + (has_gt ? 1 : 0);
  if (lines.size() < expected)
    throw ParseError(origin + ": line " + std::to_string(lines.size()) +
                     ": truncated file, expected " + std::to_string(expected) +
                     " records");

  SequenceDataset ds;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t lineno = 2 + i;
    const json rec = parse_line(lines[i + 1], origin, lineno);
    EventSequence s;
    s.d = field<std::size_t>(rec, "d", origin, lineno);
    s.q = field<std::size_t>(rec, "q", origin, lineno);
    s.binary_x = field<bool>(rec, "binary_x", origin, lineno);
    for (const json& ej : field<json>(rec, "events", origin, lineno)) {
      Event e;
      e.t = field<double>(ej, "t", origin, lineno);
      e.x = field<Vec>(ej, "x", origin, lineno);
      if (ej.contains("y") && !ej.at("y").is_null()) e.y = ej.at("y").get<Vec>();
      e.generated = ej.value("generated", false);
      s.events.push_back(std::move(e));
    }
    ds.sequences.push_back(std::move(s));
  }
  if (has_gt) {
    const std::size_t lineno = 1 + count + 1;
    json gt = parse_line(lines[count + 1], origin, lineno);
    ds.ground_truth = field<json>(gt, "ground_truth", origin, lineno);
  }
  return ds;
}

// ---------------------------------------------------------------------------
// Point processes
// ---------------------------------------------------------------------------

std::string serialize_point_process(const MarkedPointProcess& pp) {
  std::ostringstream os;
  json header{{"schema_version", kSchemaVersion},
              {"kind", "point_process"},
              {"T", pp.horizon},
              {"n", pp.n},
              {"event_count", pp.events.size()}};
  os << header.dump() << "\n";
  for (const PointEvent& e : pp.events)
    os << json{{"t", e.t}, {"u", e.node}}.dump() << "\n";
  return os.str();
}

MarkedPointProcess parse_point_process(const std::string& text,
                                       const std::string& origin) {
  const auto lines = split_lines(text);
  const json h = expect_header(lines, origin, "point_process");

  MarkedPointProcess pp;
  pp.horizon = field<double>(h, "T", origin, 1);
  pp.n = field<std::size_t>(h, "n", origin, 1);
  const auto count = field<std::size_t>(h, "event_count", origin, 1);

  if (lines.size() < 1 + count)
    throw ParseError(origin + ": line " + std::to_string(lines.size()) +
                     ": truncated file, expected " + std::to_string(1 + count) +
                     " records");

  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t lineno = 2 + i;
    const json rec = parse_line(lines[i + 1], origin, lineno);
    PointEvent e;
    e.t = field<double>(rec, "t", origin, lineno);
    e.node = field<std::size_t>(rec, "u", origin, lineno);
    pp.events.push_back(e);
  }
  return pp;
}

// ---------------------------------------------------------------------------
// Checkpoints
// ---------------------------------------------------------------------------

std::string serialize_checkpoint(const Checkpoint& c) {
  json doc{{"schema_version", kSchemaVersion},
           {"model_kind", c.model_kind},
           {"dims", c.dims},
           {"params", c.params}};
  return doc.dump() + "\n";
}

Checkpoint parse_checkpoint(const std::string& text, const std::string& origin) {
  json doc = parse_line(split_lines(text).empty() ? "" : split_lines(text)[0],
                        origin, 1);
  if (!doc.is_object() || !doc.contains("schema_version"))
    throw ParseError(origin + ": line 1: missing header");
  if (doc["schema_version"] != kSchemaVersion)
    throw VersionError(origin + ": schema_version " +
                       doc["schema_version"].dump() + ", this build reads " +
                       std::to_string(kSchemaVersion));
  Checkpoint c;
  c.model_kind = field<std::string>(doc, "model_kind", origin, 1);
  c.dims = field<json>(doc, "dims", origin, 1);
  c.params = field<Vec>(doc, "params", origin, 1);
  return c;
}

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw ConfigError("write failed for '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void save_graph_dataset(const GraphDataset& ds, const std::string& path) {
  write_file(path, serialize_graph_dataset(ds));
}
GraphDataset load_graph_dataset(const std::string& path) {
  return parse_graph_dataset(read_file(path), path);
}
void save_sequences(const SequenceDataset& ds, const std::string& path) {
  write_file(path, serialize_sequences(ds));
}
SequenceDataset load_sequences(const std::string& path) {
  return parse_sequences(read_file(path), path);
}
void save_point_process(const MarkedPointProcess& pp, const std::string& path) {
  write_file(path, serialize_point_process(pp));
}
MarkedPointProcess load_point_process(const std::string& path) {
  return parse_point_process(read_file(path), path);
}
void save_checkpoint(const Checkpoint& c, const std::string& path) {
  write_file(path, serialize_checkpoint(c));
}
Checkpoint load_checkpoint(const std::string& path) {
  return parse_checkpoint(read_file(path), path);
}

}  // namespace polilab
