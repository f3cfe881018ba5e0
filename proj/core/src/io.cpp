#include "smdiscord/io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "smdiscord/errors.hpp"

namespace smdiscord {

ComplexMatrix read_density_matrix_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("density matrix JSON parse error: ") + e.what());
  }
  if (!j.contains("dim") || !j.contains("re") || !j.contains("im")) {
    throw validation_error("density matrix JSON requires fields dim, re, im");
  }
  const auto n = j["dim"].get<std::size_t>();
  if (n == 0 || n > 64) throw validation_error("density matrix dimension must be in [1, 64]");
  const auto& re = j["re"];
  const auto& im = j["im"];
  if (re.size() != n || im.size() != n) {
    throw validation_error("re/im row count does not match dim");
  }
  ComplexMatrix rho(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (re[i].size() != n || im[i].size() != n) {
      throw validation_error("re/im column count does not match dim");
    }
    for (std::size_t k = 0; k < n; ++k) {
      rho(i, k) = cplx(re[i][k].get<double>(), im[i][k].get<double>());
    }
  }
  if (!rho.all_finite()) throw validation_error("density matrix has non-finite entries");
  if (!rho.is_hermitian(1e-10)) throw validation_error("density matrix is not Hermitian");
  if (std::abs(rho.trace() - cplx(1.0)) > 1e-8) {
    throw validation_error("density matrix trace differs from 1 by more than 1e-8");
  }
  const auto spec = hermitian_eigenvalues(rho);
  if (spec.eigenvalues.back() < -1e-8) {
    throw validation_error("density matrix is not positive semidefinite (min eigenvalue " +
                           std::to_string(spec.eigenvalues.back()) + ")");
  }
  return rho;
}

ComplexMatrix read_density_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open density matrix file: " + path);
  return read_density_matrix_json(in);
}

void write_density_matrix_json(const ComplexMatrix& rho, std::ostream& out) {
  nlohmann::json j;
  const std::size_t n = rho.dim();
  j["dim"] = n;
  auto re = nlohmann::json::array();
  auto im = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    auto re_row = nlohmann::json::array();
    auto im_row = nlohmann::json::array();
    for (std::size_t k = 0; k < n; ++k) {
      re_row.push_back(rho(i, k).real());
      im_row.push_back(rho(i, k).imag());
    }
    re.push_back(re_row);
    im.push_back(im_row);
  }
  j["re"] = re;
  j["im"] = im;
  out << j.dump(2) << "\n";
}

}  // namespace smdiscord
