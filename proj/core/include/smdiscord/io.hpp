#pragma once

#include <iosfwd>
#include <string>

#include "smdiscord/matrix.hpp"

namespace smdiscord {

/// Density-matrix JSON format: {"dim": n, "re": [[...]], "im": [[...]]}
/// row-major. The reader validates Hermiticity, unit trace (|tr - 1| <= 1e-8)
/// and positive semidefiniteness (min eigenvalue >= -1e-8).
ComplexMatrix read_density_matrix_json(std::istream& in);
ComplexMatrix read_density_matrix_file(const std::string& path);

void write_density_matrix_json(const ComplexMatrix& rho, std::ostream& out);

}  // namespace smdiscord
