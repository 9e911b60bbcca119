#ifndef SD2_REPMAT_HPP
#define SD2_REPMAT_HPP

#include <utility>
#include <vector>

#include "sd2/fock.hpp"
#include "sd2/numerics.hpp"
#include "sd2/oscparams.hpp"
#include "sd2/types.hpp"

namespace sd2 {

enum class BasisOrdering {
  CartesianV,   // v_n = |n_x = n, n_y = N - n>, n = 0..N
  CircularB1,   // f_n = |n_L = n, n_R = N - n>, n = 0..N
  CircularB2,   // graded by l = floor(|n_L - n_R| / 2), sign(n_R - n_L)
  J2Eigen,      // eigenbasis of J2 (see j2rep)
};

enum class OperatorKind { J1, J2, J3, Q, H };

/// All sd(2) generators in one basis.  H = E_N * Id; the Casimir is the
/// polynomial J1^2 + J2^2 + J3^2 + mu_x Rx/2 + mu_y Ry/2 + mu_x mu_y Rx Ry.
struct GeneratorSet {
  Matrix J1, J2, J3, Rx, Ry, H, Casimir;
  BasisOrdering ordering = BasisOrdering::CartesianV;
  OscParams params;
};

/// Basis enumerations.
std::vector<CartesianState> cartesian_basis(int level);
std::vector<CircularState> circular_basis_b1(int level);
std::vector<CircularState> circular_basis_b2(int level);

/// (l, sign) label of a circular state in the B2 convention; sign 0 := -1.
std::pair<int, int> b2_label(const CircularState& s);

/// Generators assembled by pushing the Fock-space ladder actions through the
/// chosen basis ordering.
GeneratorSet build_cartesian(const OscParams& params);
GeneratorSet build_circular(const OscParams& params, BasisOrdering ordering);

/// Q = -2i J2 Rx - mu_x Ry - mu_y Rx - (1/2) Rx Ry in the B2 ordering.
Matrix build_q(const OscParams& params);

/// Closed-form spectra, sorted ascending.
std::vector<double> spectrum_closed_form(const OscParams& params,
                                         OperatorKind which);

/// Casimir polynomial in the generators.
Matrix casimir_matrix(const Matrix& j1, const Matrix& j2, const Matrix& j3,
                      const Matrix& rx, const Matrix& ry,
                      const OscParams& params);

/// Block forms transcribed from the closed-form matrix expressions; used as
/// an independent construction to cross-check the Fock route.
Matrix printed_j2_b2(const OscParams& params);
Matrix printed_q_b2(const OscParams& params);
Matrix printed_j3_b1(const OscParams& params);
Matrix printed_j2_cartesian(const OscParams& params);
Matrix printed_j3_cartesian(const OscParams& params);

/// True when every entry strictly below the 2x2-block diagonal (B2 grading)
/// is exactly zero.
bool is_block_upper_triangular_b2(const Matrix& m, int level);

}  // namespace sd2

#endif  // SD2_REPMAT_HPP
