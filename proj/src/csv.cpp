#include "wcs/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

namespace wcs::csv {

using experiments::ErrorRow;
using experiments::PhaseGrid;
using experiments::TrialRecord;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& field, std::size_t line) {
  const std::string t = trim(field);
  if (t == "nan" || t == "-nan") return std::numeric_limits<double>::quiet_NaN();
  if (t == "inf") return std::numeric_limits<double>::infinity();
  if (t == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.empty() || ec != std::errc() || ptr != last) {
    throw FormatError("line " + std::to_string(line) + ": '" + t + "' is not a number");
  }
  return v;
}

std::uint64_t parse_unsigned(const std::string& field, std::size_t line) {
  const std::string t = trim(field);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw FormatError("line " + std::to_string(line) + ": '" + t +
                      "' is not a nonnegative integer");
  }
  return v;
}

bool parse_bool(const std::string& field, std::size_t line) {
  const std::string t = trim(field);
  if (t == "1") return true;
  if (t == "0") return false;
  throw FormatError("line " + std::to_string(line) + ": expected 0 or 1, got '" + t + "'");
}

bool blank(const std::string& line) { return trim(line).empty(); }

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void write_phase_csv(std::ostream& out, const PhaseGrid& grid, std::optional<std::size_t> only_row) {
  out << kPhaseHeader << '\n';
  for (const auto& c : grid.cells) {
    if (only_row && c.row != *only_row) continue;
    out << grid.n << ',' << c.m << ',' << format_double(grid.m_over_n.at(c.row)) << ','
        << format_double(c.s) << ',' << format_double(grid.s_over_m_at(c.row, c.col)) << ','
        << format_double(grid.s_over_m_std.at(c.col)) << ',' << experiments::method_name(c.method)
        << ',' << c.trials << ',' << c.successes << ',' << format_double(c.prob) << ','
        << format_double(c.mean_k) << ',' << format_double(c.mean_omega_s) << '\n';
  }
}

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << kTrialsHeader << '\n';
  for (const auto& r : records) {
    out << r.row << ',' << r.col << ',' << r.trial << ',' << experiments::method_name(r.method)
        << ',' << r.seed << ',' << r.n << ',' << r.m << ',' << format_double(r.s) << ',' << r.k
        << ',' << format_double(r.omega_s) << ',' << format_double(r.signal_norm) << ','
        << format_double(r.l2_error) << ',' << format_double(r.weighted_l1_error) << ','
        << (r.success ? 1 : 0) << ',' << (r.converged ? 1 : 0) << ',' << (r.capped ? 1 : 0) << ','
        << r.iterations << ',' << format_double(r.wall_time) << '\n';
  }
}

std::vector<TrialRecord> read_trials_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || trim(line) != kTrialsHeader) {
    throw FormatError("trials file: missing or unexpected header");
  }
  std::vector<TrialRecord> out;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const auto f = split_line(line);
    if (f.size() != 18) {
      throw FormatError("line " + std::to_string(line_no) + ": expected 18 fields, got " +
                        std::to_string(f.size()));
    }
    TrialRecord r;
    r.row = parse_unsigned(f[0], line_no);
    r.col = parse_unsigned(f[1], line_no);
    r.trial = parse_unsigned(f[2], line_no);
    try {
      r.method = experiments::method_from_name(f[3]);
    } catch (const ValidationError& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
    r.seed = parse_unsigned(f[4], line_no);
    r.n = parse_unsigned(f[5], line_no);
    r.m = parse_unsigned(f[6], line_no);
    r.s = parse_double(f[7], line_no);
    r.k = parse_unsigned(f[8], line_no);
    r.omega_s = parse_double(f[9], line_no);
    r.signal_norm = parse_double(f[10], line_no);
    r.l2_error = parse_double(f[11], line_no);
    r.weighted_l1_error = parse_double(f[12], line_no);
    r.success = parse_bool(f[13], line_no);
    r.converged = parse_bool(f[14], line_no);
    r.capped = parse_bool(f[15], line_no);
    r.iterations = static_cast<int>(parse_unsigned(f[16], line_no));
    r.wall_time = parse_double(f[17], line_no);
    out.push_back(r);
  }
  return out;
}

void write_errors_csv(std::ostream& out, const std::vector<ErrorRow>& rows) {
  out << kErrorsHeader << '\n';
  for (const auto& e : rows) {
    out << e.n << ',' << e.m << ',' << (e.alpha ? format_double(*e.alpha) : "") << ','
        << (e.beta ? format_double(*e.beta) : "") << ',' << format_double(e.s) << ','
        << format_double(e.s_over_m_std) << ',' << experiments::method_name(e.method) << ','
        << format_double(e.mean_xi_l2) << ',' << format_double(e.median_xi_l2) << ','
        << format_double(e.mean_xi_w1) << ',' << format_double(e.median_xi_w1) << '\n';
  }
}

Matrix read_matrix_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::vector<double> row;
    for (const auto& f : split_line(line)) row.push_back(parse_double(f, line_no));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(rows.front().size()) + " columns, got " +
                        std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw FormatError("matrix file is empty");
  Matrix a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return a;
}

Vector read_vector_csv(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const auto f = split_line(line);
    if (f.size() != 1) {
      throw FormatError("line " + std::to_string(line_no) + ": a vector file holds one value per line");
    }
    values.push_back(parse_double(f[0], line_no));
  }
  if (values.empty()) throw FormatError("vector file is empty");
  return Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

void write_matrix_csv(std::ostream& out, const Matrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_double(a(i, j));
    }
    out << '\n';
  }
}

void write_vector_csv(std::ostream& out, const Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) out << format_double(v[i]) << '\n';
}

}  // namespace wcs::csv
