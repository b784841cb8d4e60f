#pragma once

#include <string>

#include "grappa/graph.hpp"

inline grappa::ReductionGraph load_bundled(const std::string& name) {
  return grappa::load_graph_file(std::string(GRAPPA_DATA_DIR) + "/graphs/" + name + ".json");
}
