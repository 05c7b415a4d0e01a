#pragma once

// Fringe-data CSV round trip (columns: phi_rad,counts) and the number
// formatting shared by everything that emits CSV. Output is byte-stable:
// fixed column order, '.' decimals, LF line endings, mandatory header.

#include <filesystem>
#include <string>

#include "holonomy/fitting.hpp"

namespace holonomy {

// Shortest-ish fixed formatting ("%.12g"); integers print without a point.
std::string format_double(double v);

void write_fringe_csv(const std::filesystem::path& path, const FringeData& data);
FringeData read_fringe_csv(const std::filesystem::path& path);

}  // namespace holonomy
