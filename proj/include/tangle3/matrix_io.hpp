#pragma once

#include <filesystem>
#include <iosfwd>

#include "tangle3/states.hpp"

namespace tangle3 {

// Plain-text matrix format: first line is the dimension, followed by dim*dim
// lines holding "re im" pairs in row-major order.

Matrix read_matrix(std::istream& in);
DensityMatrix read_density_file(const std::filesystem::path& path);

/// Writes with 17 significant digits so doubles round-trip exactly.
void write_matrix(std::ostream& out, const Matrix& m);
void write_density_file(const std::filesystem::path& path, const DensityMatrix& rho);

}  // namespace tangle3
