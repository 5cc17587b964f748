#include "coulgreen/matrix_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "coulgreen/errors.hpp"

namespace coulgreen {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

void write_matrix(std::ostream& os, const MatrixFile& m) {
  if (m.rows < 0 || m.cols < 0 || m.data.size() != size_t(m.rows) * size_t(m.cols))
    throw DimensionError("matrix file: data size does not match rows x cols");
  nlohmann::json header = m.header;
  header["format"] = kMatrixFormat;
  header["format_version"] = kMatrixFormatVersion;
  header["rows"] = m.rows;
  header["cols"] = m.cols;
  os << header.dump() << '\n';
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) {
      const Complex z = m.data[size_t(r) * size_t(m.cols) + size_t(c)];
      if (c) os << "  ";
      os << format_double(z.real()) << ' ' << format_double(z.imag());
    }
    os << '\n';
  }
  if (!os) throw Error("matrix file: write failed");
}

MatrixFile read_matrix(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw DomainError("matrix file: missing header");
  MatrixFile m;
  try {
    m.header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("matrix file: bad header: ") + e.what());
  }
  if (m.header.value("format", "") != kMatrixFormat)
    throw DomainError("matrix file: unknown format");
  m.rows = m.header.at("rows").get<int>();
  m.cols = m.header.at("cols").get<int>();
  if (m.rows < 0 || m.cols < 0) throw DomainError("matrix file: negative dimensions");
  m.data.reserve(size_t(m.rows) * size_t(m.cols));
  for (int r = 0; r < m.rows; ++r) {
    if (!std::getline(is, line)) throw DomainError("matrix file: truncated data");
    std::istringstream row(line);
    for (int c = 0; c < m.cols; ++c) {
      std::string re, im;
      if (!(row >> re >> im)) throw DomainError("matrix file: short row");
      char* end = nullptr;
      const double x = std::strtod(re.c_str(), &end);
      if (*end) throw DomainError("matrix file: bad number " + re);
      const double y = std::strtod(im.c_str(), &end);
      if (*end) throw DomainError("matrix file: bad number " + im);
      m.data.emplace_back(x, y);
    }
  }
  return m;
}

void write_matrix_file(const std::string& path, const MatrixFile& m) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open for writing: " + path);
  write_matrix(os, m);
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DomainError("cannot open: " + path);
  return read_matrix(is);
}

nlohmann::json complex_to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json to_json(const PhysicalParams& p) {
  return {{"b", p.b}, {"k", p.k}, {"t", p.t}, {"C", p.C}};
}

nlohmann::json to_json(const DerivedParams& d) {
  return {{"zeta", complex_to_json(d.zeta)},
          {"lambda", complex_to_json(d.lambda)},
          {"gamma", complex_to_json(d.gamma)},
          {"theta", complex_to_json(d.theta)},
          {"chi", complex_to_json(d.chi)},
          {"sqrt_1_minus_2C_over_k2", d.root},
          {"tau_map", "tau = (2t + i(1 - r)) / (2r), r = sqrt(1 - 2C/k^2)"},
          {"tau_slope", 1.0 / d.root},
          {"tau_offset", complex_to_json(kI * (1.0 - d.root) / (2.0 * d.root))}};
}

nlohmann::json to_json(const QuadratureConfig& q) {
  return {{"pv_epsilon_schedule", q.pv_epsilon_schedule},
          {"tail_cutoff", q.tail_cutoff},
          {"panel_nodes", q.panel_nodes},
          {"target_tol", q.target_tol},
          {"oscillatory_strategy", to_string(q.oscillatory_strategy)}};
}

QuadratureConfig quadrature_from_json(const nlohmann::json& j, QuadratureConfig base) {
  try {
    if (j.contains("pv_epsilon_schedule"))
      base.pv_epsilon_schedule = j.at("pv_epsilon_schedule").get<std::vector<double>>();
    if (j.contains("tail_cutoff")) base.tail_cutoff = j.at("tail_cutoff").get<double>();
    if (j.contains("panel_nodes")) base.panel_nodes = j.at("panel_nodes").get<int>();
    if (j.contains("target_tol")) base.target_tol = j.at("target_tol").get<double>();
    if (j.contains("oscillatory_strategy"))
      base.oscillatory_strategy = tail_strategy_from_string(j.at("oscillatory_strategy").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("quadrature config: ") + e.what());
  }
  base.validate();
  return base;
}

namespace {

nlohmann::json common_header(const std::string& kind) {
  return {{"kind", kind}, {"library_version", COULGREEN_VERSION}};
}

}  // namespace

MatrixFile to_matrix_file(const GreensBlock1D& g) {
  MatrixFile m;
  m.header = common_header("greens1d");
  m.header["params"] = to_json(g.params);
  m.header["variant"] = to_string(g.variant);
  m.header["formula"] = g.formula;
  m.header["gauge"] = g.gauge_description();
  m.header["flattening"] = "row n, column m";
  m.rows = g.order;
  m.cols = g.order;
  m.data = g.elements;
  return m;
}

MatrixFile to_matrix_file(const GreensBlock2D& g) {
  MatrixFile m;
  m.header = common_header("greens2d");
  nlohmann::json params = to_json(g.params);
  params.erase("t");
  params["t0"] = g.params.t;
  m.header["params"] = params;
  m.header["formula"] = g.formula;
  m.header["parameter_set"] = to_string(g.parameter_set);
  m.header["parameter_set_factors"] = describe(g.parameter_set, g.params.C != 0.0);
  m.header["pole_term_ablated"] = g.pole_term_ablated;
  m.header["gauge"] = g.xi_gauge_y == Complex{} ? "y=0" : "xi-side y=" + format_double(g.xi_gauge_y.real()) +
                                                              "," + format_double(g.xi_gauge_y.imag());
  m.header["quadrature"] = to_json(g.quadrature);
  m.header["quadrature_error_estimate"] = g.error_estimate;
  m.header["quadrature_cutoff"] = g.cutoff;
  m.header["order"] = g.order;
  m.header["flattening"] = "row (n1*N+n2), column (m1*N+m2)";
  m.rows = g.order * g.order;
  m.cols = g.order * g.order;
  m.data = g.elements;
  return m;
}

}  // namespace coulgreen
