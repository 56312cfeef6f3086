#pragma once

#include <string>

#include "chroma/graph.hpp"

namespace chroma {

// CGF v1:
//   cgf 1
//   q <Q>
//   n <N>
//   c <v> <i1> <i2> ...   colors strictly increasing, 1-based
//   e <u> <v>             u < v
// Lines starting with '#' are comments (allowed after the first line).
ColorfulGraph parse_cgf(const std::string& text);
std::string serialize_cgf(const ColorfulGraph& g);

ColorfulGraph read_cgf_file(const std::string& path);
void write_cgf_file(const std::string& path, const ColorfulGraph& g);

}  // namespace chroma
