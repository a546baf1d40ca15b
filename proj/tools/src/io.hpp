#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "djc/state.hpp"
#include "sweep.hpp"

namespace djc::tools {

struct ParseError : std::runtime_error {
  ParseError(const std::string& file, int line, int column, const std::string& what_happened)
      : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(column) +
                           ": " + what_happened),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct IOError : std::runtime_error {
  explicit IOError(const std::string& message) : std::runtime_error(message) {}
};

// Shortest decimal form that round-trips a double (17 significant digits).
std::string format17(double value);

// 16 rows of "re im", one amplitude per row in index order 0..15;
// '#' starts a comment, blank lines are skipped.
Amplitudes read_amplitude_file(const std::string& path);
Amplitudes parse_amplitudes(std::istream& in, const std::string& display_name);

inline constexpr const char* kCsvHeader =
    "t,alpha,beta,re_I1,im_I1,re_I2,im_I2,re_I3,im_I3,re_I4,im_I4,re_D4,im_D4,tau4,leakage";

void write_csv(std::ostream& os, const std::vector<GridPoint>& grid);
void write_csv_file(const std::string& path, const std::vector<GridPoint>& grid);

// Self-contained heatmap of tau4 over the (t, alpha) grid; cell values are
// the same tau4 entries the CSV carries.
void write_svg_heatmap(std::ostream& os, const SweepConfig& cfg, const std::vector<GridPoint>& grid);
void write_svg_heatmap_file(const std::string& path, const SweepConfig& cfg,
                            const std::vector<GridPoint>& grid);

}  // namespace djc::tools
