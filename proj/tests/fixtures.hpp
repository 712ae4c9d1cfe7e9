#pragma once

#include <string>

#include "shadelab/graph.hpp"
#include "shadelab/io.hpp"

#ifndef SHADELAB_FIXTURE_DIR
#error "SHADELAB_FIXTURE_DIR must point at the fixtures directory"
#endif

inline std::string fixture_path(const std::string& name) { return std::string(SHADELAB_FIXTURE_DIR) + "/" + name; }

inline shadelab::Multigraph fixture_graph(const std::string& name) {
  return shadelab::parse_graph(shadelab::read_text_file(fixture_path(name)));
}
