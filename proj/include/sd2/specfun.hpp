#ifndef SD2_SPECFUN_HPP
#define SD2_SPECFUN_HPP

#include <vector>

#include "sd2/types.hpp"

namespace sd2 {

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
double pochhammer(double a, int n);

/// mu-number [n]_mu = n + mu (1 - (-1)^n), the parabosonic analogue of n.
double mu_number(int n, double mu);

/// Terminating generalized hypergeometric sum pFq evaluated by direct
/// summation.  At least one numerator parameter must be a non-positive
/// integer; a denominator parameter reaching a non-positive integer before
/// the terminating index raises SingularParameterError.
double hyp_terminating(const std::vector<double>& num_params,
                       const std::vector<double>& den_params, double z);

/// Monic Krawtchouk polynomial at p = 1/2:
///   K_{n+1} = (x - N/2) K_n - (1/4) n (N - n + 1) K_{n-1},  K_0 = 1.
double krawtchouk_monic(int n, double x, int level);

/// Complementary Bannai-Ito parameter set; g = rho1 + rho2 - r1 - r2.
struct CBIParams {
  double rho1 = 0.0;
  double rho2 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;

  double g() const { return rho1 + rho2 - r1 - r2; }

  /// Para-Krawtchouk specializations of the CBI family.
  static CBIParams para_krawtchouk_even(int k, double zeta) {
    return CBIParams{(zeta - 2.0) / 2.0, 0.0, (2.0 * k + zeta) / 2.0, 0.0};
  }
  static CBIParams para_krawtchouk_odd(int k, double zeta) {
    return CBIParams{(zeta - 1.0) / 2.0, 0.0, (2.0 * k + zeta + 1.0) / 2.0,
                     0.0};
  }
};

/// Recurrence coefficient tau_n of the monic CBI recurrence
///   I_{n+1} + (-1)^n rho2 I_n + tau_n I_{n-1} = x I_n.
double cbi_recurrence_coeff(int n, const CBIParams& p);

/// Monic CBI polynomial I_n(x) by the three-term recurrence above.
double cbi_monic(int n, double x, const CBIParams& p);

/// Hypergeometric (4F3) route to the monic CBI polynomial; independent of
/// the recurrence path.
double cbi_monic_hypergeometric(int n, double x, const CBIParams& p);

/// Heun equation parameters with the constraint
/// epsilon = alpha + beta + 1 - gamma - delta.
struct HeunParams {
  double a = 0.0;
  double q = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;

  double epsilon() const { return alpha + beta + 1.0 - gamma - delta; }
};

/// Maclaurin coefficients c_0..c_max_degree of the local Heun function,
/// from the three-term recurrence
///   R_n c_{n+1} = (Q_n + q) c_n - P_n c_{n-1},   c_{-1} = 0, c_0 = 1,
/// with R_n = a(n+1)(n+gamma), Q_n = n[(n-1+gamma)(1+a) + a delta + epsilon],
/// P_n = (n-1+alpha)(n-1+beta).  R_n = 0 below the requested degree raises
/// SingularParameterError naming n.
std::vector<double> heun_series(const HeunParams& p, int max_degree);

}  // namespace sd2

#endif  // SD2_SPECFUN_HPP
