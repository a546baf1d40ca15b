#include "io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace djc::tools {

std::string format17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

int column_of(const std::string& line, const char* pos) {
  return static_cast<int>(pos - line.c_str()) + 1;
}

// Parses one "re im" row; returns false for blank/comment-only lines.
bool parse_row(const std::string& file, int line_no, const std::string& raw, Complex* out) {
  std::string line = raw;
  if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);

  const char* p = line.c_str();
  while (*p && std::isspace(static_cast<unsigned char>(*p))) ++p;
  if (*p == '\0') return false;

  double parts[2];
  for (int i = 0; i < 2; ++i) {
    while (*p && std::isspace(static_cast<unsigned char>(*p))) ++p;
    char* end = nullptr;
    parts[i] = std::strtod(p, &end);
    if (end == p) {
      throw ParseError(file, line_no, column_of(line, p),
                       i == 0 ? "expected the real part" : "expected the imaginary part");
    }
    p = end;
  }
  while (*p && std::isspace(static_cast<unsigned char>(*p))) ++p;
  if (*p != '\0') {
    throw ParseError(file, line_no, column_of(line, p), "unexpected trailing characters");
  }
  *out = Complex(parts[0], parts[1]);
  return true;
}

}  // namespace

Amplitudes parse_amplitudes(std::istream& in, const std::string& display_name) {
  Amplitudes amps{};
  int count = 0;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    Complex value;
    if (!parse_row(display_name, line_no, line, &value)) continue;
    if (count >= 16) {
      throw ParseError(display_name, line_no, 1, "more than 16 amplitude rows");
    }
    amps[count++] = value;
  }
  if (count != 16) {
    throw ParseError(display_name, std::max(line_no, 1), 1,
                     "expected 16 amplitude rows, found " + std::to_string(count));
  }
  return amps;
}

Amplitudes read_amplitude_file(const std::string& path) {
  std::ifstream in(path);
  // a missing input file is a usage error, unlike a failed write
  if (!in) throw std::invalid_argument("cannot open " + path);
  return parse_amplitudes(in, path);
}

void write_csv(std::ostream& os, const std::vector<GridPoint>& grid) {
  os << kCsvHeader << '\n';
  for (const GridPoint& p : grid) {
    os << format17(p.t) << ',' << format17(p.alpha) << ',' << format17(p.beta) << ','
       << format17(p.inv.i1.real()) << ',' << format17(p.inv.i1.imag()) << ','
       << format17(p.inv.i2.real()) << ',' << format17(p.inv.i2.imag()) << ','
       << format17(p.inv.i3.real()) << ',' << format17(p.inv.i3.imag()) << ','
       << format17(p.inv.i4.real()) << ',' << format17(p.inv.i4.imag()) << ','
       << format17(p.inv.d4.real()) << ',' << format17(p.inv.d4.imag()) << ','
       << format17(p.inv.tau4) << ',' << format17(p.leakage) << '\n';
  }
}

void write_csv_file(const std::string& path, const std::vector<GridPoint>& grid) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IOError("cannot open " + path + " for writing");
  write_csv(os, grid);
  if (!os) throw IOError("failed writing " + path);
}

namespace {

struct Rgb {
  double r, g, b;
};

constexpr Rgb kRampLow{247.0, 251.0, 255.0};
constexpr Rgb kRampHigh{8.0, 48.0, 107.0};

std::string ramp_color(double v) {
  v = std::clamp(v, 0.0, 1.0);
  const auto channel = [v](double lo, double hi) {
    return static_cast<int>(std::lround(lo + v * (hi - lo)));
  };
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", channel(kRampLow.r, kRampHigh.r),
                channel(kRampLow.g, kRampHigh.g), channel(kRampLow.b, kRampHigh.b));
  return buf;
}

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

}  // namespace

void write_svg_heatmap(std::ostream& os, const SweepConfig& cfg,
                       const std::vector<GridPoint>& grid) {
  const int nt = cfg.t_steps;
  const int na = cfg.alpha_steps;
  const double plot_w = 640.0, plot_h = 400.0;
  const double left = 70.0, top = 40.0;
  const double width = left + plot_w + 150.0;
  const double height = top + plot_h + 60.0;
  const double cell_w = plot_w / nt;
  const double cell_h = plot_h / na;

  double data_min = grid.empty() ? 0.0 : grid.front().inv.tau4;
  double data_max = data_min;
  for (const GridPoint& p : grid) {
    data_min = std::min(data_min, p.inv.tau4);
    data_max = std::max(data_max, p.inv.tau4);
  }

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<defs><linearGradient id=\"ramp\" x1=\"0\" y1=\"1\" x2=\"0\" y2=\"0\">"
     << "<stop offset=\"0\" stop-color=\"" << ramp_color(0.0) << "\"/>"
     << "<stop offset=\"1\" stop-color=\"" << ramp_color(1.0) << "\"/>"
     << "</linearGradient></defs>\n";
  os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << left + plot_w / 2.0 << "\" y=\"24\" font-family=\"monospace\" "
     << "font-size=\"15\" text-anchor=\"middle\">tau4 over (t, alpha), "
     << (cfg.family == Family::Phi ? "Phi" : "Psi") << " family</text>\n";

  // cells: t along x, alpha along y (alpha_start at the bottom)
  for (int it = 0; it < nt; ++it) {
    for (int ia = 0; ia < na; ++ia) {
      const double v = grid[static_cast<std::size_t>(it) * na + ia].inv.tau4;
      const double x = left + it * cell_w;
      const double y = top + plot_h - (ia + 1) * cell_h;
      os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell_w << "\" height=\""
         << cell_h << "\" fill=\"" << ramp_color(v) << "\" shape-rendering=\"crispEdges\"/>\n";
    }
  }

  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\""
     << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

  const int kTicks = 5;
  for (int i = 0; i < kTicks; ++i) {
    const double frac = static_cast<double>(i) / (kTicks - 1);
    const double tx = left + frac * plot_w;
    const double tv = cfg.t_start + frac * (cfg.t_stop - cfg.t_start);
    os << "<line x1=\"" << tx << "\" y1=\"" << top + plot_h << "\" x2=\"" << tx << "\" y2=\""
       << top + plot_h + 5 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << tx << "\" y=\"" << top + plot_h + 20
       << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" << short_num(tv)
       << "</text>\n";

    const double ay = top + plot_h - frac * plot_h;
    const double av = cfg.alpha_start + frac * (cfg.alpha_stop - cfg.alpha_start);
    os << "<line x1=\"" << left - 5 << "\" y1=\"" << ay << "\" x2=\"" << left << "\" y2=\"" << ay
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << left - 9 << "\" y=\"" << ay + 4
       << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">" << short_num(av)
       << "</text>\n";
  }
  os << "<text x=\"" << left + plot_w / 2.0 << "\" y=\"" << top + plot_h + 42
     << "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\">t</text>\n";
  os << "<text x=\"18\" y=\"" << top + plot_h / 2.0
     << "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\" "
     << "transform=\"rotate(-90 18 " << top + plot_h / 2.0 << ")\">alpha</text>\n";

  // color scale, clamped to [0, 1]
  const double bar_x = left + plot_w + 30.0;
  os << "<rect x=\"" << bar_x << "\" y=\"" << top << "\" width=\"18\" height=\"" << plot_h
     << "\" fill=\"url(#ramp)\" stroke=\"black\"/>\n";
  os << "<text x=\"" << bar_x + 26 << "\" y=\"" << top + 10
     << "\" font-family=\"monospace\" font-size=\"12\">1</text>\n";
  os << "<text x=\"" << bar_x + 26 << "\" y=\"" << top + plot_h
     << "\" font-family=\"monospace\" font-size=\"12\">0</text>\n";
  os << "<text x=\"" << bar_x << "\" y=\"" << top + plot_h + 24
     << "\" font-family=\"monospace\" font-size=\"11\">min " << short_num(data_min)
     << "</text>\n";
  os << "<text x=\"" << bar_x << "\" y=\"" << top + plot_h + 38
     << "\" font-family=\"monospace\" font-size=\"11\">max " << short_num(data_max)
     << "</text>\n";
  os << "</svg>\n";
}

void write_svg_heatmap_file(const std::string& path, const SweepConfig& cfg,
                            const std::vector<GridPoint>& grid) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IOError("cannot open " + path + " for writing");
  write_svg_heatmap(os, cfg, grid);
  if (!os) throw IOError("failed writing " + path);
}

}  // namespace djc::tools
