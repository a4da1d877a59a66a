#include "hagedorn/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hagedorn/error.hpp"

namespace hagedorn {

using nlohmann::json;

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty()) {
    throw Error(ErrorCode::Parse, "matrix must be a non-empty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw Error(ErrorCode::Parse, "matrix rows must have equal length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& e = row[static_cast<std::size_t>(c)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw Error(ErrorCode::Parse, "matrix entries must be [re, im] number pairs");
      }
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

std::pair<CMatrix, CMatrix> frame_matrices_from_json(const json& j) {
  if (!j.is_object() || !j.contains("Q") || !j.contains("P")) {
    throw Error(ErrorCode::Parse, "frame must be an object with fields \"Q\" and \"P\"");
  }
  return {matrix_from_json(j.at("Q")), matrix_from_json(j.at("P"))};
}

json frame_to_json(const LagrangianFrame& z) { return {{"Q", matrix_to_json(z.Q())}, {"P", matrix_to_json(z.P())}}; }

json polynomial_to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [k, c] : p.terms()) out.push_back({{"k", k.entries()}, {"re", c.real()}, {"im", c.imag()}});
  return out;
}

Polynomial polynomial_from_json(const json& j, int dim) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "polynomial must be an array of terms");
  Polynomial p(dim);
  for (const json& t : j) {
    if (!t.is_object() || !t.contains("k") || !t.contains("re") || !t.contains("im")) {
      throw Error(ErrorCode::Parse, "polynomial terms need \"k\", \"re\" and \"im\"");
    }
    MultiIndex k(t.at("k").get<std::vector<int>>());
    if (k.dim() != dim) throw Error(ErrorCode::Parse, "term multi-index has wrong length");
    p.add_term(k, Complex(t.at("re").get<double>(), t.at("im").get<double>()));
  }
  return p;
}

json table_to_json(const PolynomialTable& t) {
  json entries = json::array();
  for (const auto& [k, q] : t.entries()) entries.push_back({{"index", k.entries()}, {"poly", polynomial_to_json(q)}});
  return {{"M", matrix_to_json(t.M())}, {"kmax", t.kmax().entries()}, {"table", std::move(entries)}};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_grid_csv(std::ostream& out, const GridJob& job, const std::vector<std::string>& axis_names) {
  const std::size_t total = job.total_points();
  if (axis_names.size() != static_cast<std::size_t>(job.dim())) {
    throw Error(ErrorCode::InvalidArgument, "one column name per grid axis required");
  }
  if (job.values.size() != total) throw Error(ErrorCode::InvalidArgument, "grid values not filled");
  for (const auto& name : axis_names) out << name << ',';
  out << "re,im,abs\n";
  std::vector<double> x(static_cast<std::size_t>(job.dim()));
  for (std::size_t i = 0; i < total; ++i) {
    job.node(i, x);
    for (double v : x) out << format_double(v) << ',';
    const Complex c = job.values[i];
    out << format_double(c.real()) << ',' << format_double(c.imag()) << ',' << format_double(std::abs(c)) << '\n';
  }
}

}  // namespace hagedorn
