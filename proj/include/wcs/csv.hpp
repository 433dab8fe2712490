#pragma once

// CSV readers and writers: UTF-8, one header row, LF line endings, doubles in
// shortest round-trip form.

#include "wcs/core.hpp"
#include "wcs/experiments.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wcs::csv {

/// Malformed or unreadable input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double v);

inline constexpr const char* kPhaseHeader =
    "N,m,m_over_N,s,s_over_m,s_over_m_std,method,trials,successes,prob,mean_k,mean_omega_S";
inline constexpr const char* kTrialsHeader =
    "row,col,trial,method,seed,N,m,s,k,omega_S,signal_norm,l2_error,weighted_l1_error,success,"
    "converged,capped,iterations,wall_time";
inline constexpr const char* kErrorsHeader =
    "N,m,alpha,beta,s,s_over_m_std,method,mean_xi_l2,median_xi_l2,mean_xi_w1,median_xi_w1";

/// One line per cell and method; `only_row` restricts the output to one grid row.
void write_phase_csv(std::ostream& out, const experiments::PhaseGrid& grid,
                     std::optional<std::size_t> only_row = std::nullopt);

void write_trials_csv(std::ostream& out, const std::vector<experiments::TrialRecord>& records);
std::vector<experiments::TrialRecord> read_trials_csv(std::istream& in);

/// alpha and beta are left empty when absent.
void write_errors_csv(std::ostream& out, const std::vector<experiments::ErrorRow>& rows);

/// m rows of N comma-separated values, no header.
Matrix read_matrix_csv(std::istream& in);
/// One value per line, no header.
Vector read_vector_csv(std::istream& in);
void write_matrix_csv(std::ostream& out, const Matrix& a);
void write_vector_csv(std::ostream& out, const Vector& v);

/// Splits one line on commas; surrounding blanks are trimmed.
std::vector<std::string> split_line(const std::string& line);

}  // namespace wcs::csv
