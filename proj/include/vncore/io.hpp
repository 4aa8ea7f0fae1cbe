#pragma once

// Text serialization of instances and cores. Both are JSON documents with one
// named section per line; scalars are strings, so files round-trip exactly.

#include "vncore/core.hpp"
#include "vncore/fincat.hpp"
#include "vncore/report.hpp"

#include <string>

namespace vncore::io {

std::string write_instance(const fincat::Instance& inst);
/// Throws Malformed on syntax errors, unknown names and inconsistent shapes.
fincat::Instance read_instance(const std::string& text);

/// CHECKS holds the lines of `checks`, which may be empty.
std::string write_core(const vn::VNCoreData& core, const Report& checks = {});
vn::VNCoreData read_core(const std::string& text);

/// Throw IoError when the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

} // namespace vncore::io
