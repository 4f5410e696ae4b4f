#include "fockport/grid_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>

#include "fockport/error.hpp"

namespace fockport {

bool FidelityGrid::valid(std::size_t i_m, std::size_t i_beta) const {
  return !std::isnan(at(i_m, i_beta));
}

std::size_t FidelityGrid::invalid_count() const {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(),
                    [](double v) { return std::isnan(v); }));
}

double FidelityGrid::full_scale() const noexcept {
  return quantity == GridQuantity::ArgmaxPhase ? std::numbers::pi / 2.0 : 1.0;
}

std::vector<double> interior_beta_axis(int steps) {
  if (steps < 2) fail(ErrorKind::InvalidArgument, "beta axis needs >= 2 steps");
  std::vector<double> axis(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    axis[k] = std::numbers::pi * (k + 1) / (steps + 1);
  }
  return axis;
}

std::vector<int> twice_m_range(int twice_first, int twice_last,
                               int twice_step) {
  if (twice_step <= 0) fail(ErrorKind::InvalidArgument, "m step must be > 0");
  if (twice_last < twice_first) {
    fail(ErrorKind::InvalidArgument, "empty m range");
  }
  std::vector<int> axis;
  for (int v = twice_first; v <= twice_last; v += twice_step) axis.push_back(v);
  return axis;
}

namespace {

void append_number(std::string& out, double v) {
  if (std::isnan(v)) {
    out += "NaN";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

std::string grid_to_csv(const FidelityGrid& grid) {
  std::string out = "beta,m,value\n";
  for (std::size_t i_m = 0; i_m < grid.height(); ++i_m) {
    for (std::size_t i_b = 0; i_b < grid.width(); ++i_b) {
      append_number(out, grid.beta_axis[i_b]);
      out += ',';
      append_number(out, grid.twice_m_axis[i_m] / 2.0);
      out += ',';
      append_number(out, grid.at(i_m, i_b));
      out += '\n';
    }
  }
  return out;
}

std::string grid_to_pgm(const FidelityGrid& grid) {
  std::string out = "P5\n" + std::to_string(grid.width()) + " " +
                    std::to_string(grid.height()) + "\n255\n";
  const double scale = grid.full_scale();
  for (double v : grid.values) {
    if (std::isnan(v)) {
      out += '\0';
      continue;
    }
    const double level = std::clamp(v / scale, 0.0, 1.0);
    out += static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * level)));
  }
  return out;
}

std::string coeffs_to_csv(const std::vector<Complex>& coeffs) {
  std::string out = "index,real,imag\n";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    append_number(out, coeffs[i].real());
    out += ',';
    append_number(out, coeffs[i].imag());
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);

  std::random_device rd;
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) fail(ErrorKind::Io, "cannot open " + tmp.string() + " for writing");
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!f) fail(ErrorKind::Io, "write failed for " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    fail(ErrorKind::Io, "cannot move output into place at " + path.string());
  }
}

std::filesystem::path resolve_output_path(const std::filesystem::path& path) {
  if (path.is_absolute()) return path;
  if (const char* dir = std::getenv("FOCKPORT_OUTPUT_DIR"); dir && *dir) {
    return std::filesystem::path(dir) / path;
  }
  return path;
}

}  // namespace fockport
