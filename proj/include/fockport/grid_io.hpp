#pragma once

#include <filesystem>
#include <string>

#include "fockport/grid.hpp"
#include "fockport/states.hpp"

namespace fockport {

/// `beta,m,value` rows, m-major then beta, 17 significant digits, NaN for
/// invalid cells.
std::string grid_to_csv(const FidelityGrid& grid);

/// Binary P5, width = |beta|, height = |m|, maxval 255. Pixel =
/// round(255 clamp(value / full_scale, 0, 1)); invalid cells are 0.
std::string grid_to_pgm(const FidelityGrid& grid);

/// `index,real,imag` rows.
std::string coeffs_to_csv(const std::vector<Complex>& coeffs);

/// Writes through a sibling temp file and rename. Throws Error{Io}.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents);

/// Relative paths are resolved against $FOCKPORT_OUTPUT_DIR when set.
std::filesystem::path resolve_output_path(const std::filesystem::path& path);

}  // namespace fockport
