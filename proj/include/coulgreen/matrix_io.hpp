#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "coulgreen/greens_1d.hpp"
#include "coulgreen/greens_2d.hpp"
#include "coulgreen/operator_matrices.hpp"
#include "coulgreen/quadrature.hpp"

namespace coulgreen {

/// Text matrix container: one line of JSON header, then `rows` lines of
/// `cols` "re im" pairs in %.16e notation (17 significant digits, lossless for
/// binary64).
struct MatrixFile {
  nlohmann::json header;
  int rows = 0;
  int cols = 0;
  std::vector<Complex> data;  // row-major
};

inline constexpr const char* kMatrixFormat = "coulgreen-matrix";
inline constexpr int kMatrixFormatVersion = 1;

void write_matrix(std::ostream& os, const MatrixFile& m);
MatrixFile read_matrix(std::istream& is);
void write_matrix_file(const std::string& path, const MatrixFile& m);
MatrixFile read_matrix_file(const std::string& path);

std::string format_double(double x);

nlohmann::json to_json(const PhysicalParams& p);
nlohmann::json to_json(const DerivedParams& d);
nlohmann::json to_json(const QuadratureConfig& q);
nlohmann::json complex_to_json(Complex z);

/// Overrides the fields present in `j` on top of `base`.
QuadratureConfig quadrature_from_json(const nlohmann::json& j, QuadratureConfig base = {});

MatrixFile to_matrix_file(const GreensBlock1D& g);
MatrixFile to_matrix_file(const GreensBlock2D& g);

}  // namespace coulgreen
