#include "sd2/j2rep.hpp"

#include <cmath>
#include <string>

#include "sd2/numerics.hpp"
#include "sd2/specfun.hpp"

namespace sd2 {

namespace {

double checked_sqrt(double x, const char* label) {
  if (x < 0.0) {
    throw SingularParameterError(std::string("build_j3_j2basis: negative "
                                             "square-root argument in ") +
                                 label);
  }
  return std::sqrt(x);
}

void require_nonzero(double x, const char* label) {
  if (x == 0.0) {
    throw SingularParameterError(
        std::string("build_j3_j2basis: vanishing denominator ") + label);
  }
}

Matrix j3_odd(const OscParams& params, const GaugeSeq& gauge) {
  const int n = params.level;
  const int m = (n - 1) / 2;
  const double zeta = params.zeta();
  const double xi = params.xi();
  const double mx = params.mu_x;
  const double my = params.mu_y;
  Matrix j3 = Matrix::Zero(n + 1, n + 1);

  for (int k = 0; k <= m; ++k) {
    require_nonzero(2.0 * k + zeta, "2k + zeta");
    const double scale =
        (n + zeta + 1.0) / (2.0 * (2.0 * k + zeta) * (2.0 * k + zeta + 2.0));
    const double diag = xi * zeta * scale;   // M_kk^+ = N_kk^-
    const double cross = zeta * scale;       // N_kk^+ = M_kk^-
    j3(2 * k, 2 * k) = diag;
    j3(2 * k, 2 * k + 1) = cross;
    j3(2 * k + 1, 2 * k) = cross;
    j3(2 * k + 1, 2 * k + 1) = diag;
  }
  for (int k = 1; k <= m; ++k) {  // upper blocks U_k
    const double root = checked_sqrt(
        pochhammer(k + mx - 0.5, 2) * pochhammer(k + my - 0.5, 2), "U_k");
    const double mup =
        (1.0 - 4.0 * (k + mx) * (k + my) - 4.0 * root) / (2.0 * xi);
    const double beta = gauge.at(k);
    j3(2 * (k - 1), 2 * k) = beta * mup;
    j3(2 * (k - 1), 2 * k + 1) = beta;
    j3(2 * (k - 1) + 1, 2 * k) = beta;
    j3(2 * (k - 1) + 1, 2 * k + 1) = beta * mup;
  }
  for (int k = 0; k + 1 <= m; ++k) {  // lower blocks D_k
    const double mlow = xi * (k + 1.0) * (2.0 * k - n + 1.0) *
                        (k + 1.0 + zeta) * (2.0 * k + 2.0 * zeta + n + 3.0) /
                        (4.0 * (2.0 * k + zeta + 2.0) *
                         pochhammer(2.0 * k + zeta + 1.0, 3));
    const double root = checked_sqrt(
        pochhammer(k + mx + 0.5, 2) * pochhammer(k + my + 0.5, 2), "E_k");
    const double ek =
        (1.0 - 4.0 * (k + mx + 1.0) * (k + my + 1.0) + 4.0 * root) /
        (2.0 * xi);
    const double nlow = ek * mlow;
    const double inv_beta = 1.0 / gauge.at(k + 1);
    j3(2 * (k + 1), 2 * k) = inv_beta * mlow;
    j3(2 * (k + 1), 2 * k + 1) = inv_beta * nlow;
    j3(2 * (k + 1) + 1, 2 * k) = inv_beta * nlow;
    j3(2 * (k + 1) + 1, 2 * k + 1) = inv_beta * mlow;
  }
  return j3;
}

Matrix j3_even(const OscParams& params, const GaugeSeq& gauge) {
  const int n = params.level;
  const int m = n / 2;
  const double zeta = params.zeta();
  const double xi = params.xi();
  const double mx = params.mu_x;
  const double my = params.mu_y;
  Matrix j3 = Matrix::Zero(n + 1, n + 1);

  j3(0, 0) = xi * (n + zeta + 1.0) / (2.0 * (1.0 + zeta));
  if (m >= 1) {
    const double alpha1 = gauge.at(1);
    j3(0, 1) = alpha1;
    j3(0, 2) = alpha1;
    const double wn = (n / 2.0) * (1.0 + 2.0 * mx) * (1.0 + 2.0 * my) *
                      (n / 2.0 + zeta + 1.0) /
                      (2.0 * (1.0 + zeta) * (1.0 + zeta) * (2.0 + zeta));
    j3(1, 0) = wn / alpha1;
    j3(2, 0) = wn / alpha1;
  }
  for (int k = 1; k <= m; ++k) {  // central blocks C_k
    const double scale =
        (n + zeta + 1.0) /
        (2.0 * (2.0 * k - 1.0 + zeta) * (2.0 * k + 1.0 + zeta));
    const double diag = xi * zeta * scale;
    const double cross = -xi * scale;
    const int r = 2 * k - 1;
    j3(r, r) = diag;
    j3(r, r + 1) = cross;
    j3(r + 1, r) = cross;
    j3(r + 1, r + 1) = diag;
  }
  for (int k = 2; k <= m; ++k) {  // upper blocks U_k
    require_nonzero(zeta, "zeta in N_{k-1,k}");
    const double root = checked_sqrt(
        pochhammer(k - 1.0, 2) * pochhammer(k - 1.0 + zeta, 2), "U_k");
    const double nup =
        (zeta + 2.0 * (k - 1.0) * (k + zeta) - 2.0 * root) / zeta;
    const double alpha = gauge.at(k);
    const int r = 2 * (k - 1) - 1;
    const int c = 2 * k - 1;
    j3(r, c) = alpha;
    j3(r, c + 1) = alpha * nup;
    j3(r + 1, c) = alpha * nup;
    j3(r + 1, c + 1) = alpha;
  }
  for (int k = 1; k + 1 <= m; ++k) {  // lower blocks D_k
    const double root =
        checked_sqrt(pochhammer(k, 2) * pochhammer(k + zeta, 2), "D_k");
    const double bracket = zeta + 2.0 * k * (k + zeta + 1.0) + 2.0 * root;
    const double common = (n / 2.0 - k) * (n / 2.0 + k + 1.0 + zeta) *
                          (2.0 * k + 1.0 + 2.0 * mx) *
                          (2.0 * k + 1.0 + 2.0 * my) /
                          (4.0 * (2.0 * k + 1.0 + zeta) *
                           pochhammer(2.0 * k + zeta, 3));
    const double mlow = common * bracket;
    const double nlow = common * zeta;
    const double inv_alpha = 1.0 / gauge.at(k + 1);
    const int r = 2 * (k + 1) - 1;
    const int c = 2 * k - 1;
    j3(r, c) = inv_alpha * mlow;
    j3(r, c + 1) = inv_alpha * nlow;
    j3(r + 1, c) = inv_alpha * nlow;
    j3(r + 1, c + 1) = inv_alpha * mlow;
  }
  return j3;
}

}  // namespace

GeneratorSet build_j3_j2basis(const OscParams& params, const GaugeSeq& gauge,
                              const Tolerances& tol) {
  tol.validate();
  if (params.isotropic(tol.degeneracy_tol)) {
    throw std::invalid_argument(
        "build_j3_j2basis: mu_x = mu_y is degenerate for the J2 eigenbasis "
        "construction");
  }
  const int n = params.level;
  const int m = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
  if (static_cast<int>(gauge.values.size()) < m) {
    throw std::invalid_argument("build_j3_j2basis: gauge needs " +
                                std::to_string(m) + " entries");
  }
  for (double g : gauge.values) {
    if (g == 0.0) {
      throw std::invalid_argument("build_j3_j2basis: gauge entries must be "
                                  "nonzero");
    }
  }

  const Eigen::Index dim = n + 1;
  GeneratorSet gs;
  gs.ordering = BasisOrdering::J2Eigen;
  gs.params = params;
  gs.H = params.energy() * Matrix::Identity(dim, dim);

  gs.J2 = Matrix::Zero(dim, dim);
  gs.Rx = Matrix::Zero(dim, dim);
  gs.Ry = Matrix::Zero(dim, dim);
  if (n % 2 == 1) {
    for (int k = 0; k <= m; ++k) {
      const double lam =
          std::sqrt((k + params.mu_x + 0.5) * (k + params.mu_y + 0.5));
      gs.J2(2 * k, 2 * k) = lam;
      gs.J2(2 * k + 1, 2 * k + 1) = -lam;
      gs.Ry(2 * k, 2 * k + 1) = 1.0;
      gs.Ry(2 * k + 1, 2 * k) = 1.0;
    }
    gs.Rx = -gs.Ry;
    gs.J3 = j3_odd(params, gauge);
  } else {
    gs.J2(0, 0) = 0.0;
    gs.Rx(0, 0) = 1.0;
    for (int k = 1; k <= m; ++k) {
      const double lam = std::sqrt(k * (k + params.zeta()));
      const int r = 2 * k - 1;
      gs.J2(r, r) = lam;
      gs.J2(r + 1, r + 1) = -lam;
      gs.Rx(r, r + 1) = 1.0;
      gs.Rx(r + 1, r) = 1.0;
    }
    gs.Ry = gs.Rx;
    gs.J3 = j3_even(params, gauge);
  }

  gs.J1 = -kI * commutator(gs.J2, gs.J3);
  gs.Casimir = casimir_matrix(gs.J1, gs.J2, gs.J3, gs.Rx, gs.Ry, params);
  return gs;
}

J3SpectrumReport j3_spectrum_check(const GeneratorSet& gs,
                                   const Tolerances& tol) {
  J3SpectrumReport report;
  const int n = gs.params.level;
  for (int j = 0; j <= n; ++j) {
    report.expected.push_back(j + (gs.params.xi() - n) / 2.0);
  }
  std::sort(report.expected.begin(), report.expected.end());

  const auto eig = dense_eigen(gs.J3, tol);
  for (const Complex& lam : eig.eigenvalues) {
    report.max_imag = std::max(report.max_imag, std::abs(lam.imag()));
    report.computed.push_back(lam.real());
  }
  std::sort(report.computed.begin(), report.computed.end());

  for (std::size_t i = 0; i < report.expected.size(); ++i) {
    report.max_deviation =
        std::max(report.max_deviation,
                 std::abs(report.expected[i] - report.computed[i]));
  }
  report.match = report.max_deviation <= tol.eig_match_tol &&
                 report.max_imag <= tol.eig_match_tol;
  return report;
}

}  // namespace sd2
