#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "polilab/core/types.hpp"

namespace polilab {

// Dataset files are UTF-8, newline-delimited JSON records. The first record
// is a header {"schema_version":1,"kind":...,...}; it is followed by one
// record per graph / sequence / event, and, when present, a final
// {"ground_truth":...} record. Doubles are written in shortest-roundtrip
// form, so deserialize(serialize(v)) reproduces v bit for bit and repeated
// serialization of equal values yields identical bytes.
inline constexpr int kSchemaVersion = 1;

std::string serialize_graph_dataset(const GraphDataset& ds);
GraphDataset parse_graph_dataset(const std::string& text,
                                 const std::string& origin = "<memory>");
void save_graph_dataset(const GraphDataset& ds, const std::string& path);
GraphDataset load_graph_dataset(const std::string& path);

std::string serialize_sequences(const SequenceDataset& ds);
SequenceDataset parse_sequences(const std::string& text,
                                const std::string& origin = "<memory>");
void save_sequences(const SequenceDataset& ds, const std::string& path);
SequenceDataset load_sequences(const std::string& path);

std::string serialize_point_process(const MarkedPointProcess& pp);
MarkedPointProcess parse_point_process(const std::string& text,
                                       const std::string& origin = "<memory>");
void save_point_process(const MarkedPointProcess& pp, const std::string& path);
MarkedPointProcess load_point_process(const std::string& path);

// Model checkpoints are a single JSON document with a flat parameter array.
// Each model documents its packing order next to its pack/unpack functions.
struct Checkpoint {
  std::string model_kind;
  nlohmann::json dims;
  Vec params;

  bool operator==(const Checkpoint&) const = default;
};

std::string serialize_checkpoint(const Checkpoint& c);
Checkpoint parse_checkpoint(const std::string& text,
                            const std::string& origin = "<memory>");
void save_checkpoint(const Checkpoint& c, const std::string& path);
Checkpoint load_checkpoint(const std::string& path);

// Shared file helpers (explicit "\n" line endings, binary streams).
void write_file(const std::string& path, const std::string& bytes);
std::string read_file(const std::string& path);

}  // namespace polilab
