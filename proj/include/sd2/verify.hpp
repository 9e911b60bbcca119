#ifndef SD2_VERIFY_HPP
#define SD2_VERIFY_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sd2/j2rep.hpp"
#include "sd2/repmat.hpp"

namespace sd2 {

/// Residuals of every defining relation of the algebra for one generator
/// set.  All residuals are Frobenius-relative to the operators involved.
struct RelationResiduals {
  double anti_j1_rx = 0.0, anti_j1_ry = 0.0;
  double anti_j2_rx = 0.0, anti_j2_ry = 0.0;
  double comm_j3_rx = 0.0, comm_j3_ry = 0.0;
  double rx_involution = 0.0, ry_involution = 0.0;
  double comm_j2_j3 = 0.0;  // [J2,J3] = i J1
  double comm_j3_j1 = 0.0;  // [J3,J1] = i J2
  double comm_j1_j2 = 0.0;  // [J1,J2] = i(J3 + J3(mu R) - H(mu R)/2 term)
  double casimir_vs_h = 0.0;       // C = (H^2 - 1)/4
  double casimir_commutes = 0.0;   // max_i ||[C, J_i]||, reflections included
  double h_scalar = 0.0;           // H = E_N * Id

  double max() const;
  std::string breakdown() const;
};

RelationResiduals check_sd2_relations(const GeneratorSet& gs);

struct CheckRecord {
  std::string id;
  std::string params;
  double max_residual = 0.0;
  bool pass = false;
  std::string notes;
};

struct Report {
  std::vector<CheckRecord> records;
  bool overall = true;
  Tolerances tol;
  unsigned seed = 0;
  int n_max = 0;
  std::vector<std::pair<double, double>> grid;

  void add(CheckRecord record);
  nlohmann::json to_json() const;
};

/// {-0.4, 0, 0.3, 0.7, 1.5}^2.
std::vector<std::pair<double, double>> default_mu_grid();

CheckRecord check_spectrum_match(const Matrix& built,
                                 const std::vector<double>& predicted,
                                 const Tolerances& tol, std::string id,
                                 std::string params);

/// Runs every cross-check over the parameter grid; failures are data, the
/// suite never aborts early.
Report run_suite(int n_max, const std::vector<std::pair<double, double>>& grid,
                 const Tolerances& tol = Tolerances{});

}  // namespace sd2

#endif  // SD2_VERIFY_HPP
