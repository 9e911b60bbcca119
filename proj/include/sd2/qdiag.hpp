#ifndef SD2_QDIAG_HPP
#define SD2_QDIAG_HPP

#include <utility>
#include <vector>

#include "sd2/oscparams.hpp"
#include "sd2/types.hpp"

namespace sd2 {

enum class Parity { Even, Odd };

/// Solution of a sector recurrence system: the sequences a_n, b_n for
/// n = 0..k that build the Q-eigenvector components.  a[0] = b[0] = 1.
struct CoeffPair {
  std::vector<double> a_seq;
  std::vector<double> b_seq;
  int k = 0;
  Parity parity = Parity::Even;
};

/// One eigenvector of Q (or of J2 after mapping) in B2 coordinates.
struct BasisEigenvector {
  int k = 0;
  int sign = -1;             // +1 <-> nu_k^+ / lambda_k^+, -1 <-> minus
  double eigenvalue = 0.0;
  Vector coords;             // components in the CircularB2 ordering
};

struct EigvecTable {
  OscParams params;
  std::vector<BasisEigenvector> vectors;
};

/// Q <-> J2 change-of-basis data for sector k.
struct LinkCoeffs {
  Complex c;            // omega_k (N even) or upsilon_k (N odd); |c| = 1
  double lambda_plus;   // J2 eigenvalue pair of the sector
  double lambda_minus;
};

/// Prefactors combining the sector sequences into eigenvector components:
/// the anchor pair (alpha0, beta0) carries the terminating conditions
/// (-i, 1), and (gamma0, eps0) carries the other eigenvalue branch.
struct SectorConstants {
  Complex alpha0{1.0, -1.0};
  Complex beta0{1.0, 1.0};
  Complex gamma0;
  Complex eps0;

  static SectorConstants even(int k, const OscParams& params);
  static SectorConstants odd(int k, const OscParams& params);
};

/// Forward solution of the even-sector system:
///   b_n = (k - n) a_n / k,
///   a_n = 2k sum_{m<n} [(-1)^{n+m} mu_x + mu_y] b_m / (n (2k - n + zeta)).
CoeffPair solve_recurrence_even(int k, const OscParams& params);

/// Forward solution of the odd-sector coupled system; each step is a 2x2
/// linear solve for (a_n, b_n) given all earlier terms.
CoeffPair solve_recurrence_odd(int k, const OscParams& params);

/// Recurrence continuation past the sector cap (n up to n_max), for the
/// center-symmetry checks; requires k >= 1.
std::pair<std::vector<double>, std::vector<double>>
solve_recurrence_even_extended(int k, const OscParams& params, int n_max);
std::pair<std::vector<double>, std::vector<double>>
solve_recurrence_odd_extended(int k, const OscParams& params, int n_max);

/// Para-Krawtchouk (CBI) closed form for the even-sector a_n, n <= 2k;
/// mirrored as a_n = a_{2k-n} above the center.
double closed_form_even(int k, const OscParams& params, int n);

/// CBI closed form for the odd sector, n <= 2k + 1.  Returns (a_n, b_n);
/// b_n is obtained from the z <-> -z, mu_x <-> mu_y symmetry as
/// (-1)^n [P_n(-xi) + P_{n-1}(-xi)].
std::pair<double, double> closed_form_odd(int k, const OscParams& params,
                                          int n);

/// Heun coefficient of the odd-sector expansion (the P_r series) exposed for
/// cross-checks; r <= 2k + 1.
double heun_coefficient_odd(int k, const OscParams& params, int r);

/// Isotropic (mu_x = mu_y = mu) closed forms: Jacobi (even) and little -1
/// Jacobi (odd) coefficient formulas.
CoeffPair isotropic_coeffs(int k, double mu, Parity parity);

/// Components u_l^±(k), v_l^±(k) assembled into full Q-eigenvectors in B2.
EigvecTable assemble_q_eigvecs(const OscParams& params);

LinkCoeffs link_coeffs(int k, const OscParams& params);

/// Maps the Q-eigenvector table to J2-eigenvectors:
///   |k,+> = (|k,+>_Q + |k,->_Q)/sqrt(2),
///   |k,-> = -(|k,+>_Q - |k,->_Q)/(c_k sqrt(2)),
/// after rescaling the Q-eigenvectors to the canonical normalization in
/// which this change of basis is valid (the terminating-condition
/// normalization differs from it by a sector-dependent factor).
EigvecTable q_to_j2(const EigvecTable& table, const OscParams& params);

}  // namespace sd2

#endif  // SD2_QDIAG_HPP
