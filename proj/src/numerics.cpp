#include "sd2/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace sd2 {

bool all_finite(const Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Complex& z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions disagree (" +
                         std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + ")");
  }
  return a * b;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionError("commutator: operands must be square of equal size");
  }
  return a * b - b * a;
}

Matrix anticommutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionError(
        "anticommutator: operands must be square of equal size");
  }
  return a * b + b * a;
}

EigenDecomposition dense_eigen(const Matrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) {
    throw DimensionError("dense_eigen: matrix must be square");
  }
  tol.validate();

  Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("dense_eigen: eigensolver failed to converge");
  }

  const Eigen::Index n = m.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  const auto& vals = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    if (vals[i].real() != vals[j].real())
      return vals[i].real() < vals[j].real();
    return vals[i].imag() < vals[j].imag();
  });

  EigenDecomposition out;
  out.eigenvalues.reserve(static_cast<std::size_t>(n));
  out.eigenvectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.eigenvalues.push_back(vals[order[static_cast<std::size_t>(j)]]);
    out.eigenvectors.col(j) =
        solver.eigenvectors().col(order[static_cast<std::size_t>(j)]);
  }

  const double scale = m.norm();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double res =
        (m * out.eigenvectors.col(j) - out.eigenvalues[static_cast<std::size_t>(j)] * out.eigenvectors.col(j))
            .norm();
    if (!(res <= tol.residual_tol * scale)) {
      throw std::runtime_error(
          "dense_eigen: residual " + std::to_string(res) +
          " exceeds tolerance for eigenpair " + std::to_string(j));
    }
  }
  return out;
}

std::vector<Complex> eigenvalues_sorted(const Matrix& m,
                                        const Tolerances& tol) {
  return dense_eigen(m, tol).eigenvalues;
}

double relative_deviation(const Matrix& a, const Matrix& b) {
  return (a - b).norm() / std::max(1.0, a.norm());
}

}  // namespace sd2
