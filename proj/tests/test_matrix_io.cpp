#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <sstream>

#include "coulgreen/errors.hpp"
#include "coulgreen/matrix_io.hpp"
#include "test_support.hpp"

using namespace coulgreen;

namespace {

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

MatrixFile round_trip(const MatrixFile& m) {
  std::stringstream ss;
  write_matrix(ss, m);
  return read_matrix(ss);
}

}  // namespace

TEST_CASE("round trip is bit-exact") {
  MatrixFile m;
  m.rows = 2;
  m.cols = 3;
  const double tiny = std::numeric_limits<double>::denorm_min();
  m.data = {{0.1, -1.0 / 3.0}, {1e300, -2.5e-310}, {tiny, -0.0},
            {std::nextafter(1.0, 2.0), 6.02214076e23}, {-std::sqrt(2.0), std::numbers::pi}, {0.0, 1.0}};
  const MatrixFile r = round_trip(m);
  REQUIRE(r.data.size() == m.data.size());
  for (size_t i = 0; i < m.data.size(); ++i) {
    CHECK(bit_equal(r.data[i].real(), m.data[i].real()));
    CHECK(bit_equal(r.data[i].imag(), m.data[i].imag()));
  }
  CHECK(r.header["format"] == kMatrixFormat);
  CHECK(r.header["rows"] == 2);
  CHECK(format_double(0.1) == "1.0000000000000001e-01");
}

TEST_CASE("1D block header") {
  const GreensBlock1D g = g_xi_block({1.0, 1.0, 0.7, 0.0}, 0.7, 5);
  const MatrixFile r = round_trip(to_matrix_file(g));
  CHECK(r.header["kind"] == "greens1d");
  CHECK(r.header["gauge"] == "y=0");
  CHECK(r.header["variant"] == "xi");
  CHECK(r.header["params"]["t"] == 0.7);
  CHECK(r.header.contains("formula"));
  CHECK(r.header.contains("library_version"));
  for (size_t i = 0; i < g.elements.size(); ++i) CHECK(r.data[i] == g.elements[i]);
  const MatrixFile s = to_matrix_file(gauge_shift(g, 3.7));
  CHECK(s.header["gauge"] != "y=0");
}

TEST_CASE("2D block header") {
  const GreensBlock2D g = convolve({1.0, 1.0, 0.7, 0.0}, 0.7, 2, QuadratureConfig{});
  const MatrixFile r = round_trip(to_matrix_file(g));
  CHECK(r.rows == 4);
  CHECK(r.header["flattening"] == "row (n1*N+n2), column (m1*N+m2)");
  CHECK(r.header["params"]["t0"] == 0.7);
  CHECK(!r.header["params"].contains("t"));
  CHECK(r.header["quadrature"]["tail_cutoff"] == QuadratureConfig{}.tail_cutoff);
  CHECK(r.header["quadrature_error_estimate"].get<double>() >= 0.0);
  CHECK(r.header["pole_term_ablated"] == false);
  CHECK(r.header["gauge"] == "y=0");
  // row (n1*N+n2), column (m1*N+m2) of a row-major 4x4 grid
  CHECK(r.data[size_t((1 * 2 + 0) * 4 + (0 * 2 + 1))] == g.at(1, 0, 0, 1));
}

TEST_CASE("malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream is(text);
    return read_matrix(is);
  };
  const std::string head = R"({"format":"coulgreen-matrix","format_version":1,"rows":1,"cols":2})";
  CHECK_NOTHROW(parse(head + "\n1 2  3 4\n"));
  CHECK_THROWS_AS(parse(""), DomainError);
  CHECK_THROWS_AS(parse("{not json\n"), DomainError);
  CHECK_THROWS_AS(parse(R"({"format":"other","rows":1,"cols":1})" "\n1 2\n"), DomainError);
  CHECK_THROWS_AS(parse(head + "\n"), DomainError);
  CHECK_THROWS_AS(parse(head + "\n1 2  3\n"), DomainError);
  CHECK_THROWS_AS(parse(head + "\n1 2  3 4x\n"), DomainError);
  CHECK_THROWS_AS(read_matrix_file("/nonexistent/file.txt"), DomainError);
  MatrixFile bad;
  bad.rows = 2;
  bad.cols = 2;
  std::ostringstream os;
  CHECK_THROWS_AS(write_matrix(os, bad), DimensionError);
}

TEST_CASE("quadrature config from json") {
  const QuadratureConfig q = quadrature_from_json(
      nlohmann::json{{"tail_cutoff", 300.0}, {"oscillatory_strategy", "partial-sum-averaging"}});
  CHECK(q.tail_cutoff == 300.0);
  CHECK(q.oscillatory_strategy == TailStrategy::kPartialSumAveraging);
  CHECK(q.panel_nodes == QuadratureConfig{}.panel_nodes);
  CHECK_THROWS_AS(quadrature_from_json(nlohmann::json{{"tail_cutoff", "far"}}), DomainError);
  CHECK_THROWS_AS(quadrature_from_json(nlohmann::json{{"panel_nodes", 0}}), DomainError);
}
