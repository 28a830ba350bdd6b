#pragma once

#include <string>
#include <vector>

#include "polilab/core/types.hpp"

namespace polilab {

// Violations are data, not failures: validation never throws on any
// structurally well-formed input.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string joined() const;
};

ValidationReport validate_graph(const PoliticalGraph& g, const GraphDims& dims);
ValidationReport validate_dataset(const GraphDataset& ds);
ValidationReport validate_sequence(const EventSequence& s);
ValidationReport validate_point_process(const MarkedPointProcess& pp);

}  // namespace polilab
