#include "sd2/interbasis.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "sd2/specfun.hpp"

namespace sd2 {

double transition_coeff(int n, int j, int level) {
  if (n < 0 || n > level || j < 0 || j > level) {
    throw std::invalid_argument("transition_coeff: indices must lie in 0..N");
  }
  // P_n = 2^n K_n / n!; the 2^n rescaling turns the monic p = 1/2 recurrence
  // into the (2j - N) three-term form with P_1 = 2j - N.
  double scale = 1.0;
  for (int m = 1; m <= n; ++m) scale *= 2.0 / m;
  return scale * krawtchouk_monic(n, static_cast<double>(j), level);
}

TransitionMatrix build_transition(const OscParams& params) {
  const int n = params.level;
  TransitionMatrix out;
  out.T.resize(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) {
    RealVector col(n + 1);
    for (int row = 0; row <= n; ++row) col[row] = transition_coeff(row, j, n);
    col.normalize();
    // positive leading sign; the head entry is P_0 / norm and never zero
    if (col[0] < 0.0) col = -col;
    out.T.col(j) = col;
  }
  out.column_convention =
      "column j: unit-norm J3(B1) eigenvector for eigenvalue j + (xi - N)/2, "
      "leading entry positive";
  Eigen::JacobiSVD<RealMatrix> svd(out.T);
  const auto& sv = svd.singularValues();
  out.condition_number = sv(0) / sv(sv.size() - 1);
  return out;
}

}  // namespace sd2
