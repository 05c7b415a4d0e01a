#include "holonomy/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace holonomy {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_fringe_csv(const std::filesystem::path& path, const FringeData& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::io_error, "cannot open " + path.string() + " for writing");
  out << "phi_rad,counts\n";
  for (const FringePoint& p : data.points)
    out << format_double(p.phi) << "," << format_double(p.counts) << "\n";
  if (!out) raise(ErrorCode::io_error, "write failed: " + path.string());
}

FringeData read_fringe_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::io_error, "cannot open " + path.string());
  FringeData data;
  std::string line;
  if (!std::getline(in, line) || line.rfind("phi_rad,counts", 0) != 0)
    raise(ErrorCode::io_error, "missing phi_rad,counts header in " + path.string());
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string phi_str, counts_str;
    if (!std::getline(row, phi_str, ',') || !std::getline(row, counts_str))
      raise(ErrorCode::io_error,
            "malformed row " + std::to_string(line_no) + " in " + path.string());
    try {
      data.points.push_back({std::stod(phi_str), std::stod(counts_str)});
    } catch (const std::exception&) {
      raise(ErrorCode::io_error,
            "non-numeric row " + std::to_string(line_no) + " in " + path.string());
    }
  }
  return data;
}

}  // namespace holonomy
