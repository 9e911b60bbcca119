#include "sd2/repmat.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sd2/specfun.hpp"

namespace sd2 {

namespace {

using Word = std::vector<OperatorId>;
using Realization = std::vector<std::pair<Complex, Word>>;

constexpr Complex kHalfOverI{0.0, -0.5};  // 1/(2i)

Realization cartesian_realization(OperatorKind which) {
  using Op = OperatorId;
  switch (which) {
    case OperatorKind::J1:
      return {{0.5, {Op::APlusX, Op::AMinusY}}, {0.5, {Op::AMinusX, Op::APlusY}}};
    case OperatorKind::J2:
      return {{kHalfOverI, {Op::APlusX, Op::AMinusY}},
              {-kHalfOverI, {Op::AMinusX, Op::APlusY}}};
    case OperatorKind::J3:
      return {{0.25, {Op::AMinusX, Op::APlusX}},
              {0.25, {Op::APlusX, Op::AMinusX}},
              {-0.25, {Op::AMinusY, Op::APlusY}},
              {-0.25, {Op::APlusY, Op::AMinusY}}};
    case OperatorKind::H:
      return {{0.5, {Op::APlusX, Op::AMinusX}},
              {0.5, {Op::AMinusX, Op::APlusX}},
              {0.5, {Op::APlusY, Op::AMinusY}},
              {0.5, {Op::AMinusY, Op::APlusY}}};
    default:
      throw std::invalid_argument("cartesian_realization: unsupported kind");
  }
}

Realization circular_realization(OperatorKind which) {
  using Op = OperatorId;
  const Complex iq{0.0, 0.25};  // i/4
  switch (which) {
    case OperatorKind::J1:
      return {{iq, {Op::APlusL, Op::AMinusR}},
              {iq, {Op::AMinusR, Op::APlusL}},
              {-iq, {Op::AMinusL, Op::APlusR}},
              {-iq, {Op::APlusR, Op::AMinusL}}};
    case OperatorKind::J2:
      return {{0.25, {Op::AMinusR, Op::APlusR}},
              {0.25, {Op::APlusR, Op::AMinusR}},
              {-0.25, {Op::AMinusL, Op::APlusL}},
              {-0.25, {Op::APlusL, Op::AMinusL}}};
    case OperatorKind::J3:
      return {{0.25, {Op::AMinusL, Op::APlusR}},
              {0.25, {Op::APlusR, Op::AMinusL}},
              {0.25, {Op::APlusL, Op::AMinusR}},
              {0.25, {Op::AMinusR, Op::APlusL}}};
    case OperatorKind::H:
      return {{0.5, {Op::AMinusL, Op::APlusL}},
              {0.5, {Op::APlusL, Op::AMinusL}},
              {0.5, {Op::AMinusR, Op::APlusR}},
              {0.5, {Op::APlusR, Op::AMinusR}}};
    default:
      throw std::invalid_argument("circular_realization: unsupported kind");
  }
}

template <class State>
Matrix operator_matrix(const Realization& realization,
                       const std::vector<State>& basis,
                       const OscParams& params) {
  std::map<State, int> index;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    index[basis[j]] = static_cast<int>(j);
  }
  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    StateSum<State> acc;
    for (const auto& [coeff, word] : realization) {
      StateSum<State> part =
          apply_word(word, basis[static_cast<std::size_t>(col)], params);
      for (const auto& t : part.terms) acc.add(coeff * t.coeff, t.state);
    }
    acc.canonicalize();
    for (const auto& t : acc.terms) {
      auto it = index.find(t.state);
      if (it == index.end()) {
        throw std::logic_error(
            "operator_matrix: action left the fixed-level subspace");
      }
      m(it->second, col) += t.coeff;
    }
  }
  return m;
}

template <class State>
Matrix reflection_matrix(OperatorId op, const std::vector<State>& basis,
                         const OscParams& params) {
  return operator_matrix<State>({{1.0, {op}}}, basis, params);
}

}  // namespace

std::vector<CartesianState> cartesian_basis(int level) {
  std::vector<CartesianState> basis;
  basis.reserve(static_cast<std::size_t>(level) + 1);
  for (int n = 0; n <= level; ++n) basis.push_back({n, level - n});
  return basis;
}

std::vector<CircularState> circular_basis_b1(int level) {
  std::vector<CircularState> basis;
  basis.reserve(static_cast<std::size_t>(level) + 1);
  for (int n = 0; n <= level; ++n) basis.push_back({n, level - n});
  return basis;
}

std::pair<int, int> b2_label(const CircularState& s) {
  const int l = std::abs(s.nl - s.nr) / 2;
  const int sign = (s.nr > s.nl) ? +1 : -1;  // sign 0 := -1
  return {l, sign};
}

std::vector<CircularState> circular_basis_b2(int level) {
  std::vector<CircularState> basis;
  basis.reserve(static_cast<std::size_t>(level) + 1);
  if (level % 2 == 0) {
    const int m = level / 2;
    basis.push_back({m, m});  // |0,->
    for (int l = 1; l <= m; ++l) {
      basis.push_back({m - l, m + l});  // |l,+>
      basis.push_back({m + l, m - l});  // |l,->
    }
  } else {
    const int m = (level - 1) / 2;
    for (int l = 0; l <= m; ++l) {
      basis.push_back({m - l, m + l + 1});  // |l,+>
      basis.push_back({m + l + 1, m - l});  // |l,->
    }
  }
  return basis;
}

GeneratorSet build_cartesian(const OscParams& params) {
  const auto basis = cartesian_basis(params.level);
  GeneratorSet gs;
  gs.ordering = BasisOrdering::CartesianV;
  gs.params = params;
  gs.J1 = operator_matrix(cartesian_realization(OperatorKind::J1), basis, params);
  gs.J2 = operator_matrix(cartesian_realization(OperatorKind::J2), basis, params);
  gs.J3 = operator_matrix(cartesian_realization(OperatorKind::J3), basis, params);
  gs.H = operator_matrix(cartesian_realization(OperatorKind::H), basis, params);
  gs.Rx = reflection_matrix(OperatorId::ReflX, basis, params);
  gs.Ry = reflection_matrix(OperatorId::ReflY, basis, params);
  gs.Casimir = casimir_matrix(gs.J1, gs.J2, gs.J3, gs.Rx, gs.Ry, params);
  return gs;
}

GeneratorSet build_circular(const OscParams& params, BasisOrdering ordering) {
  if (ordering != BasisOrdering::CircularB1 &&
      ordering != BasisOrdering::CircularB2) {
    throw std::invalid_argument("build_circular: ordering must be B1 or B2");
  }
  const auto basis = (ordering == BasisOrdering::CircularB1)
                         ? circular_basis_b1(params.level)
                         : circular_basis_b2(params.level);
  GeneratorSet gs;
  gs.ordering = ordering;
  gs.params = params;
  gs.J1 = operator_matrix(circular_realization(OperatorKind::J1), basis, params);
  gs.J2 = operator_matrix(circular_realization(OperatorKind::J2), basis, params);
  gs.J3 = operator_matrix(circular_realization(OperatorKind::J3), basis, params);
  gs.H = operator_matrix(circular_realization(OperatorKind::H), basis, params);
  gs.Rx = reflection_matrix(OperatorId::ReflX, basis, params);
  gs.Ry = reflection_matrix(OperatorId::ReflY, basis, params);
  gs.Casimir = casimir_matrix(gs.J1, gs.J2, gs.J3, gs.Rx, gs.Ry, params);
  return gs;
}

Matrix build_q(const OscParams& params) {
  const GeneratorSet gs = build_circular(params, BasisOrdering::CircularB2);
  const Complex m2i{0.0, -2.0};
  return m2i * (gs.J2 * gs.Rx) - params.mu_x * gs.Ry - params.mu_y * gs.Rx -
         0.5 * (gs.Rx * gs.Ry);
}

Matrix casimir_matrix(const Matrix& j1, const Matrix& j2, const Matrix& j3,
                      const Matrix& rx, const Matrix& ry,
                      const OscParams& params) {
  return j1 * j1 + j2 * j2 + j3 * j3 + 0.5 * params.mu_x * rx +
         0.5 * params.mu_y * ry + params.mu_x * params.mu_y * (rx * ry);
}

std::vector<double> spectrum_closed_form(const OscParams& params,
                                         OperatorKind which) {
  const int n = params.level;
  const double zeta = params.zeta();
  std::vector<double> out;
  switch (which) {
    case OperatorKind::J2:
      if (n % 2 == 0) {
        out.push_back(0.0);
        for (int k = 1; k <= n / 2; ++k) {
          const double lam = std::sqrt(k * (k + zeta));
          out.push_back(lam);
          out.push_back(-lam);
        }
      } else {
        for (int k = 0; k <= (n - 1) / 2; ++k) {
          const double lam =
              std::sqrt((k + params.mu_x + 0.5) * (k + params.mu_y + 0.5));
          out.push_back(lam);
          out.push_back(-lam);
        }
      }
      break;
    case OperatorKind::J3:
      for (int j = 0; j <= n; ++j) out.push_back(j + (params.xi() - n) / 2.0);
      break;
    case OperatorKind::Q:
      if (n % 2 == 0) {
        out.push_back(-zeta - 0.5);
        for (int k = 1; k <= n / 2; ++k) {
          out.push_back(2.0 * k + zeta - 0.5);
          out.push_back(-(2.0 * k + zeta + 0.5));
        }
      } else {
        for (int k = 0; k <= (n - 1) / 2; ++k) {
          out.push_back(2.0 * k + zeta + 1.5);
          out.push_back(-(2.0 * k + zeta + 0.5));
        }
      }
      break;
    case OperatorKind::H:
      out.assign(static_cast<std::size_t>(n) + 1, params.energy());
      break;
    default:
      throw std::invalid_argument(
          "spectrum_closed_form: no closed form for this operator");
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Index -> block number in the B2 grading.
int b2_block_of_index(int idx, int level) {
  if (level % 2 == 0) return (idx == 0) ? 0 : (idx + 1) / 2;
  return idx / 2;
}

}  // namespace

bool is_block_upper_triangular_b2(const Matrix& m, int level) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (b2_block_of_index(static_cast<int>(i), level) >
          b2_block_of_index(static_cast<int>(j), level)) {
        if (m(i, j) != Complex(0.0, 0.0)) return false;
      }
    }
  }
  return true;
}

Matrix printed_j2_b2(const OscParams& params) {
  const int n = params.level;
  const double zeta = params.zeta();
  const double xi = params.xi();
  Matrix m = Matrix::Zero(n + 1, n + 1);
  if (n % 2 == 0) {
    const int blocks = n / 2;
    auto omega = [&](int j) -> Eigen::Matrix2cd {
      Eigen::Matrix2cd w;
      if (j % 2 == 1) {
        w << -xi, xi, -xi, xi;
      } else {
        w << zeta, -zeta, zeta, -zeta;
      }
      return w;
    };
    for (int k = 1; k <= blocks; ++k) {
      const int r = 2 * k - 1;
      m(r, r) = k + zeta / 2.0;
      m(r, r + 1) = -zeta / 2.0;
      m(r + 1, r) = zeta / 2.0;
      m(r + 1, r + 1) = -k - zeta / 2.0;
      // top row of 1x2 blocks: lower part of Omega_k
      m(0, r) = omega(k)(1, 0);
      m(0, r + 1) = omega(k)(1, 1);
    }
    for (int k = 1; k <= blocks; ++k) {
      for (int j = 1; k + j <= blocks; ++j) {
        m.block<2, 2>(2 * k - 1, 2 * (k + j) - 1) = omega(j);
      }
    }
  } else {
    const int blocks = (n - 1) / 2;
    auto omega = [&](int j) -> Eigen::Matrix2cd {
      Eigen::Matrix2cd w;
      if (j % 2 == 1) {
        w << -xi, -zeta, zeta, xi;
      } else {
        w << zeta, xi, -xi, -zeta;
      }
      return w;
    };
    for (int k = 0; k <= blocks; ++k) {
      const int r = 2 * k;
      m(r, r) = (2.0 * k + 1.0 + zeta) / 2.0;
      m(r, r + 1) = xi / 2.0;
      m(r + 1, r) = -xi / 2.0;
      m(r + 1, r + 1) = -(2.0 * k + 1.0 + zeta) / 2.0;
      for (int j = 1; k + j <= blocks; ++j) {
        m.block<2, 2>(2 * k, 2 * (k + j)) = omega(j);
      }
    }
  }
  return m;
}

Matrix printed_q_b2(const OscParams& params) {
  const int n = params.level;
  const double zeta = params.zeta();
  const double xi = params.xi();
  Matrix m = Matrix::Zero(n + 1, n + 1);
  const Complex i = kI;
  if (n % 2 == 0) {
    const int blocks = n / 2;
    m(0, 0) = -zeta - 0.5;
    auto delta = [&](int j) -> Eigen::Matrix2cd {
      Eigen::Matrix2cd d;
      if (j % 2 == 1) {
        d << -2.0 * i * xi, 2.0 * i * xi, -2.0 * i * xi, 2.0 * i * xi;
      } else {
        d << 2.0 * i * zeta, -2.0 * i * zeta, 2.0 * i * zeta, -2.0 * i * zeta;
      }
      return d;
    };
    for (int k = 1; k <= blocks; ++k) {
      const int r = 2 * k - 1;
      m(r, r) = i * zeta - 0.5;
      m(r, r + 1) = -2.0 * i * static_cast<double>(k) - (1.0 + i) * zeta;
      m(r + 1, r) = 2.0 * i * static_cast<double>(k) - (1.0 - i) * zeta;
      m(r + 1, r + 1) = -i * zeta - 0.5;
      m(0, r) = delta(k)(1, 0);
      m(0, r + 1) = delta(k)(1, 1);
      for (int j = 1; k + j <= blocks; ++j) {
        m.block<2, 2>(2 * k - 1, 2 * (k + j) - 1) = delta(j);
      }
    }
  } else {
    const int blocks = (n - 1) / 2;
    auto delta = [&](int j) -> Eigen::Matrix2cd {
      Eigen::Matrix2cd d;
      if (j % 2 == 1) {
        d << -2.0 * i * zeta, -2.0 * i * xi, 2.0 * i * xi, 2.0 * i * zeta;
      } else {
        d << 2.0 * i * xi, 2.0 * i * zeta, -2.0 * i * zeta, -2.0 * i * xi;
      }
      return d;
    };
    for (int k = 0; k <= blocks; ++k) {
      const int r = 2 * k;
      m(r, r) = 0.5 + i * xi;
      m(r, r + 1) = i * (2.0 * k + zeta + 1.0) - xi;
      m(r + 1, r) = -i * (2.0 * k + zeta + 1.0) - xi;
      m(r + 1, r + 1) = 0.5 - i * xi;
      for (int j = 1; k + j <= blocks; ++j) {
        m.block<2, 2>(2 * k, 2 * (k + j)) = delta(j);
      }
    }
  }
  return m;
}

Matrix printed_j3_b1(const OscParams& params) {
  const int n = params.level;
  Matrix m = Matrix::Zero(n + 1, n + 1);
  for (int col = 0; col <= n; ++col) {
    m(col, col) = params.xi() / 2.0;
    if (col + 1 <= n) m(col + 1, col) = (n - col) / 2.0;
    if (col - 1 >= 0) m(col - 1, col) = col / 2.0;
  }
  return m;
}

Matrix printed_j2_cartesian(const OscParams& params) {
  const int n = params.level;
  Matrix m = Matrix::Zero(n + 1, n + 1);
  for (int col = 0; col <= n; ++col) {
    if (col + 1 <= n)
      m(col + 1, col) = kHalfOverI * mu_number(n - col, params.mu_y);
    if (col - 1 >= 0)
      m(col - 1, col) = -kHalfOverI * mu_number(col, params.mu_x);
  }
  return m;
}

Matrix printed_j3_cartesian(const OscParams& params) {
  const int n = params.level;
  Matrix m = Matrix::Zero(n + 1, n + 1);
  for (int col = 0; col <= n; ++col) {
    m(col, col) = col + (params.xi() - n) / 2.0;
  }
  return m;
}

}  // namespace sd2
