#ifndef SD2_TYPES_HPP
#define SD2_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace sd2 {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Thrown when a recurrence denominator or Pochhammer factor vanishes at a
/// non-generic parameter point instead of returning Inf/NaN.
class SingularParameterError : public std::domain_error {
 public:
  explicit SingularParameterError(const std::string& what)
      : std::domain_error(what) {}
};

/// Thrown on shape mismatches between matrix operands.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Tolerance policy shared by all modules.
struct Tolerances {
  double residual_tol = 1e-9;     // relative residual for algebraic identities
  double eig_match_tol = 1e-8;    // spectrum comparison after sorting
  double degeneracy_tol = 1e-7;   // isotropic-degeneracy exclusion margin

  void validate() const {
    if (!(residual_tol > 0.0) || !(eig_match_tol > 0.0) ||
        !(degeneracy_tol > 0.0)) {
      throw std::invalid_argument("Tolerances must be strictly positive");
    }
  }
};

}  // namespace sd2

#endif  // SD2_TYPES_HPP
