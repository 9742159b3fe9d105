#pragma once

#include <string>

#include "hfk/diagram.hpp"

namespace hfk::test {

inline std::string corpus(const std::string& name) { return std::string(HFK_CORPUS_DIR) + "/" + name; }

inline PointedDiagram corpus_diagram(const std::string& name) { return load_diagram_file(corpus(name)); }

}  // namespace hfk::test
