#ifndef SD2_NUMERICS_HPP
#define SD2_NUMERICS_HPP

#include <vector>

#include "sd2/types.hpp"

namespace sd2 {

struct EigenDecomposition {
  std::vector<Complex> eigenvalues;  // sorted by (re, im)
  Matrix eigenvectors;               // column j pairs with eigenvalues[j]
};

bool all_finite(const Matrix& m);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);

/// Full eigendecomposition of a general complex dense matrix.  Each returned
/// pair satisfies ||M v - lambda v||_2 <= residual_tol * ||M||_F; failure to
/// converge or to meet the residual bound raises std::runtime_error.
EigenDecomposition dense_eigen(const Matrix& m,
                               const Tolerances& tol = Tolerances{});

/// Eigenvalues only, sorted by (re, im).
std::vector<Complex> eigenvalues_sorted(const Matrix& m,
                                        const Tolerances& tol = Tolerances{});

/// Relative residual ||A - B||_F / max(1, ||A||_F) used by identity checks.
double relative_deviation(const Matrix& a, const Matrix& b);

}  // namespace sd2

#endif  // SD2_NUMERICS_HPP
