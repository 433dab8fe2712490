#include "wcs/csv.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace wcs;
using namespace wcs::experiments;

TEST_CASE("doubles round-trip") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.0}) {
    CHECK(std::stod(csv::format_double(v)) == v);
  }
  CHECK(csv::format_double(2.0) == "2");
}

TEST_CASE("trial records round-trip") {
  TrialRecord r;
  r.row = 2;
  r.col = 3;
  r.trial = 7;
  r.method = Method::unweighted;
  r.seed = 18446744073709551615ull;
  r.n = 100;
  r.m = 25;
  r.s = 1.0 / 3.0;
  r.k = 4;
  r.omega_s = 5.25;
  r.signal_norm = 2.0;
  r.l2_error = 1e-9;
  r.weighted_l1_error = 3e-9;
  r.success = true;
  r.converged = true;
  r.capped = false;
  r.iterations = 123;
  std::stringstream io;
  csv::write_trials_csv(io, {r, r});
  std::string header;
  std::getline(std::stringstream(io.str()), header);
  CHECK(header == csv::kTrialsHeader);
  const auto back = csv::read_trials_csv(io);
  REQUIRE(back.size() == 2);
  CHECK(back[0].seed == r.seed);
  CHECK(back[0].s == r.s);
  CHECK(back[0].method == Method::unweighted);
  CHECK(back[0].iterations == 123);
  CHECK(back[1].success);
}

TEST_CASE("malformed input is rejected") {
  std::stringstream bad_header("row,col\n1,2\n");
  CHECK_THROWS_AS(csv::read_trials_csv(bad_header), csv::FormatError);
  std::stringstream ragged("1,2,3\n4,5\n");
  CHECK_THROWS_AS(csv::read_matrix_csv(ragged), csv::FormatError);
  std::stringstream text("1\nabc\n");
  CHECK_THROWS_AS(csv::read_vector_csv(text), csv::FormatError);
  std::stringstream empty("");
  CHECK_THROWS_AS(csv::read_matrix_csv(empty), csv::FormatError);
}

TEST_CASE("matrices and vectors") {
  Matrix a(2, 3);
  a << 1, 2.5, -3, 4, 5, 1e-20;
  std::stringstream io;
  csv::write_matrix_csv(io, a);
  CHECK(csv::read_matrix_csv(io) == a);
  std::stringstream spaced(" 1 , 2\n3,4 \n");
  CHECK(csv::read_matrix_csv(spaced) == Eigen::Matrix2d{{1, 2}, {3, 4}});
  Vector v = Eigen::Vector3d(0.1, -7, 3);
  std::stringstream vio;
  csv::write_vector_csv(vio, v);
  CHECK(csv::read_vector_csv(vio) == v);
}

TEST_CASE("phase csv") {
  PhaseGrid g;
  g.n = 10;
  g.m_values = {4, 8};
  g.m_over_n = {0.4, 0.8};
  g.s_over_m = {0.5};
  g.s_over_m_std = {0};
  for (std::size_t r = 0; r < 2; ++r) {
    for (Method m : {Method::weighted, Method::unweighted}) {
      TrialRecord t;
      t.row = r;
      t.method = m;
      t.m = g.m_values[r];
      t.s = 0.5 * t.m;
      t.success = m == Method::weighted;
      g.trials.push_back(t);
    }
  }
  g.cells = summarize(g.trials);
  std::ostringstream all, one;
  csv::write_phase_csv(all, g);
  csv::write_phase_csv(one, g, 1);
  const std::string a = all.str(), b = one.str();
  CHECK(a.rfind(std::string(csv::kPhaseHeader) + "\n", 0) == 0);
  CHECK(std::count(a.begin(), a.end(), '\n') == 5);
  CHECK(std::count(b.begin(), b.end(), '\n') == 3);
  CHECK(b.find("10,8,0.8,4,0.5,0,wl1,1,1,1,") != std::string::npos);
}

TEST_CASE("error csv leaves alpha and beta empty when absent") {
  ErrorRow r;
  r.n = 10;
  r.m = 5;
  r.s = 2;
  std::ostringstream out;
  csv::write_errors_csv(out, {r});
  CHECK(out.str().find("\n10,5,,,2,") != std::string::npos);
}
