#include "sd2/qdiag.hpp"

#include <cmath>
#include <string>
#include <tuple>

#include "sd2/specfun.hpp"

namespace sd2 {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int m = 2; m <= n; ++m) f *= m;
  return f;
}

// Sector index bound: even sectors live in levels N = 2m with k <= m, odd in
// N = 2m+1 with k <= m.  The solvers only need k >= 0.
void require_nonneg(int k, const char* who) {
  if (k < 0) throw std::invalid_argument(std::string(who) + ": k must be >= 0");
}

}  // namespace

namespace {

std::pair<std::vector<double>, std::vector<double>> even_sequences(
    int k, const OscParams& params, int n_max) {
  std::vector<double> a(static_cast<std::size_t>(n_max) + 1, 0.0);
  std::vector<double> b(static_cast<std::size_t>(n_max) + 1, 0.0);
  a[0] = b[0] = 1.0;
  const double zeta = params.zeta();
  for (int n = 1; n <= n_max; ++n) {
    double s = 0.0;
    for (int m = 0; m < n; ++m) {
      const double parity = ((n + m) % 2 == 0) ? 1.0 : -1.0;
      s += (parity * params.mu_x + params.mu_y) * b[static_cast<std::size_t>(m)];
    }
    const double den = n * (2.0 * k - n + zeta);
    if (den == 0.0) {
      throw SingularParameterError(
          "even sector recurrence: vanishing denominator at n = " +
          std::to_string(n));
    }
    a[static_cast<std::size_t>(n)] = 2.0 * k * s / den;
    b[static_cast<std::size_t>(n)] = (k - n) * a[static_cast<std::size_t>(n)] / k;
  }
  return {std::move(a), std::move(b)};
}

std::pair<std::vector<double>, std::vector<double>> odd_sequences(
    int k, const OscParams& params, int n_max) {
  std::vector<double> a(static_cast<std::size_t>(n_max) + 1, 0.0);
  std::vector<double> b(static_cast<std::size_t>(n_max) + 1, 0.0);
  a[0] = b[0] = 1.0;
  const double px = params.mu_x + 0.5;
  const double py = params.mu_y + 0.5;
  for (int n = 1; n <= n_max; ++n) {
    double sum_b = 0.0;
    double sum_a = 0.0;
    for (int j = 0; j < n; ++j) {
      sum_b += b[static_cast<std::size_t>(j)];
      sum_a += ((j % 2 == 0) ? 1.0 : -1.0) * a[static_cast<std::size_t>(j)];
    }
    const double u = 2.0 * params.mu_y * sum_b;
    const double v = 2.0 * params.mu_x * ((n % 2 == 0) ? 1.0 : -1.0) * sum_a;
    // (k+py) a - (k-n+py) b = u ;  -(k-n+px) a + (k+px) b = v
    const double det = (k + py) * (k + px) - (k - n + py) * (k - n + px);
    if (det == 0.0) {
      throw SingularParameterError(
          "odd sector recurrence: singular 2x2 step at n = " +
          std::to_string(n));
    }
    a[static_cast<std::size_t>(n)] = ((k + px) * u + (k - n + py) * v) / det;
    b[static_cast<std::size_t>(n)] = ((k - n + px) * u + (k + py) * v) / det;
  }
  return {std::move(a), std::move(b)};
}

}  // namespace

CoeffPair solve_recurrence_even(int k, const OscParams& params) {
  require_nonneg(k, "solve_recurrence_even");
  CoeffPair cp;
  cp.k = k;
  cp.parity = Parity::Even;
  std::tie(cp.a_seq, cp.b_seq) = even_sequences(k, params, k);
  return cp;
}

CoeffPair solve_recurrence_odd(int k, const OscParams& params) {
  require_nonneg(k, "solve_recurrence_odd");
  CoeffPair cp;
  cp.k = k;
  cp.parity = Parity::Odd;
  std::tie(cp.a_seq, cp.b_seq) = odd_sequences(k, params, k);
  return cp;
}

std::pair<std::vector<double>, std::vector<double>>
solve_recurrence_even_extended(int k, const OscParams& params, int n_max) {
  if (k < 1) {
    throw std::invalid_argument(
        "solve_recurrence_even_extended: k must be >= 1");
  }
  return even_sequences(k, params, n_max);
}

std::pair<std::vector<double>, std::vector<double>>
solve_recurrence_odd_extended(int k, const OscParams& params, int n_max) {
  if (k < 1) {
    throw std::invalid_argument(
        "solve_recurrence_odd_extended: k must be >= 1");
  }
  return odd_sequences(k, params, n_max);
}

double closed_form_even(int k, const OscParams& params, int n) {
  require_nonneg(k, "closed_form_even");
  if (n < 0 || n > 2 * k) {
    throw std::invalid_argument("closed_form_even: need 0 <= n <= 2k");
  }
  if (n > k) return closed_form_even(k, params, 2 * k - n);
  const double zeta = params.zeta();
  const CBIParams p = CBIParams::para_krawtchouk_even(k, zeta);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double prefactor = sign * std::pow(4.0, n) / factorial(n) *
                           pochhammer(k + 1.0 - n, n) /
                           pochhammer(2.0 * k + zeta - n, n);
  return prefactor * cbi_monic(n, params.xi() / 2.0, p);
}

namespace {

// P_r series of the odd sector at a given xi; the CBI correspondence covers
// r <= k, the center mirror P_r = P_{2k-r} handles k < r <= 2k, and the
// polynomial truncates at degree 2k.
double odd_series_coeff(int k, double zeta, double xi, int r) {
  if (r < 0 || r > 2 * k) return 0.0;
  if (r > k) return odd_series_coeff(k, zeta, xi, 2 * k - r);
  const CBIParams p = CBIParams::para_krawtchouk_odd(k, zeta);
  const double sign = (r % 2 == 0) ? 1.0 : -1.0;
  const double prefactor = sign * std::pow(4.0, r) / factorial(r) *
                           pochhammer(k + 1.0 - r, r) /
                           pochhammer(2.0 * k + zeta + 1.0 - r, r);
  return prefactor * cbi_monic(r, (1.0 + xi) / 2.0, p);
}

}  // namespace

double heun_coefficient_odd(int k, const OscParams& params, int r) {
  require_nonneg(k, "heun_coefficient_odd");
  if (r < 0 || r > 2 * k + 1) {
    throw std::invalid_argument("heun_coefficient_odd: need 0 <= r <= 2k+1");
  }
  return odd_series_coeff(k, params.zeta(), params.xi(), r);
}

std::pair<double, double> closed_form_odd(int k, const OscParams& params,
                                          int n) {
  require_nonneg(k, "closed_form_odd");
  if (n < 0 || n > 2 * k + 1) {
    throw std::invalid_argument("closed_form_odd: need 0 <= n <= 2k+1");
  }
  const double zeta = params.zeta();
  const double xi = params.xi();
  const double a = odd_series_coeff(k, zeta, xi, n) +
                   odd_series_coeff(k, zeta, xi, n - 1);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double b = sign * (odd_series_coeff(k, zeta, -xi, n) +
                           odd_series_coeff(k, zeta, -xi, n - 1));
  return {a, b};
}

CoeffPair isotropic_coeffs(int k, double mu, Parity parity) {
  require_nonneg(k, "isotropic_coeffs");
  CoeffPair cp;
  cp.k = k;
  cp.parity = parity;
  cp.a_seq.assign(static_cast<std::size_t>(k) + 1, 0.0);
  cp.b_seq.assign(static_cast<std::size_t>(k) + 1, 0.0);
  cp.a_seq[0] = cp.b_seq[0] = 1.0;

  auto checked_pochhammer = [](double a, int n) {
    const double v = pochhammer(a, n);
    if (v == 0.0) {
      throw SingularParameterError(
          "isotropic_coeffs: Pochhammer denominator (" + std::to_string(a) +
          ")_" + std::to_string(n) + " vanishes");
    }
    return v;
  };

  if (parity == Parity::Even) {
    for (int n = 1; n <= k; ++n) {
      if (n % 2 == 1) continue;  // odd coefficients vanish
      const int m = n / 2;
      cp.a_seq[static_cast<std::size_t>(n)] =
          pochhammer(-static_cast<double>(k), m) * pochhammer(mu, m) /
          (checked_pochhammer(1.0 - k - mu, m) * factorial(m));
      cp.b_seq[static_cast<std::size_t>(n)] =
          (static_cast<double>(k - n) / k) *
          cp.a_seq[static_cast<std::size_t>(n)];
    }
  } else {
    for (int n = 1; n <= k; ++n) {
      if (n % 2 == 0) {
        const int m = n / 2;
        cp.a_seq[static_cast<std::size_t>(n)] =
            pochhammer(-static_cast<double>(k), m) * pochhammer(mu, m) /
            (factorial(m) * checked_pochhammer(-mu - k, m));
      } else {
        const int m = (n - 1) / 2;
        const double head = k + mu;
        if (head == 0.0) {
          throw SingularParameterError("isotropic_coeffs: k + mu vanishes");
        }
        cp.a_seq[static_cast<std::size_t>(n)] =
            (mu / head) * pochhammer(-static_cast<double>(k), m) *
            pochhammer(mu + 1.0, m) /
            (factorial(m) * checked_pochhammer(-k - mu + 1.0, m));
      }
      cp.b_seq[static_cast<std::size_t>(n)] =
          ((n % 2 == 0) ? 1.0 : -1.0) * cp.a_seq[static_cast<std::size_t>(n)];
    }
  }
  return cp;
}

SectorConstants SectorConstants::even(int k, const OscParams& params) {
  SectorConstants sc;
  const double zeta = params.zeta();
  const Complex denom = Complex(1.0, 1.0) * static_cast<double>(k) + kI * zeta;
  sc.gamma0 = 2.0 * kI * (k + zeta) / denom;
  sc.eps0 = 2.0 * static_cast<double>(k) / denom;
  return sc;
}

SectorConstants SectorConstants::odd(int k, const OscParams& params) {
  SectorConstants sc;
  const Complex denom{2.0 * k + 1.0 + params.zeta(), -params.xi()};
  sc.gamma0 = Complex(1.0, 1.0) * (2.0 * k + 1.0 + 2.0 * params.mu_y) / denom;
  sc.eps0 = Complex(1.0, -1.0) * (2.0 * k + 1.0 + 2.0 * params.mu_x) / denom;
  return sc;
}

namespace {

// B2 position of the |l,sigma> slot.
int b2_index(int level, int l, int sign) {
  if (level % 2 == 0) {
    if (l == 0) return 0;  // only |0,-> exists
    return (sign > 0) ? 2 * l - 1 : 2 * l;
  }
  return (sign > 0) ? 2 * l : 2 * l + 1;
}

}  // namespace

EigvecTable assemble_q_eigvecs(const OscParams& params) {
  const int n = params.level;
  const double zeta = params.zeta();
  const Eigen::Index dim = n + 1;
  const SectorConstants anchor{};  // alpha0, beta0 carry (-i, 1) termination
  const Complex alpha0 = anchor.alpha0;
  const Complex beta0 = anchor.beta0;

  EigvecTable table;
  table.params = params;

  if (n % 2 == 0) {
    const int m = n / 2;
    {
      BasisEigenvector ground;
      ground.k = 0;
      ground.sign = -1;
      ground.eigenvalue = -zeta - 0.5;
      ground.coords = Vector::Zero(dim);
      ground.coords[0] = 1.0;  // |0,->_Q = |0,->
      table.vectors.push_back(std::move(ground));
    }
    for (int k = 1; k <= m; ++k) {
      const CoeffPair cp = solve_recurrence_even(k, params);
      const SectorConstants sc = SectorConstants::even(k, params);
      const Complex gamma0 = sc.gamma0;
      const Complex eps0 = sc.eps0;

      BasisEigenvector plus, minus;
      plus.k = minus.k = k;
      plus.sign = +1;
      minus.sign = -1;
      plus.eigenvalue = 2.0 * k + zeta - 0.5;
      minus.eigenvalue = -(2.0 * k + zeta + 0.5);
      plus.coords = Vector::Zero(dim);
      minus.coords = Vector::Zero(dim);
      for (int l = 0; l <= k; ++l) {
        const double a = cp.a_seq[static_cast<std::size_t>(k - l)];
        const double b = cp.b_seq[static_cast<std::size_t>(k - l)];
        const int idx_minus = b2_index(n, l, -1);
        plus.coords[idx_minus] = (alpha0 * a + beta0 * b) / 2.0;
        minus.coords[idx_minus] = (gamma0 * a + eps0 * b) / 2.0;
        if (l >= 1) {
          const int idx_plus = b2_index(n, l, +1);
          plus.coords[idx_plus] = (alpha0 * a - beta0 * b) / 2.0;
          minus.coords[idx_plus] = (gamma0 * a - eps0 * b) / 2.0;
        }
      }
      table.vectors.push_back(std::move(plus));
      table.vectors.push_back(std::move(minus));
    }
  } else {
    const int m = (n - 1) / 2;
    for (int k = 0; k <= m; ++k) {
      const CoeffPair cp = solve_recurrence_odd(k, params);
      const SectorConstants sc = SectorConstants::odd(k, params);
      const Complex gamma0 = sc.gamma0;
      const Complex eps0 = sc.eps0;

      BasisEigenvector plus, minus;
      plus.k = minus.k = k;
      plus.sign = +1;
      minus.sign = -1;
      plus.eigenvalue = 2.0 * k + zeta + 1.5;
      minus.eigenvalue = -(2.0 * k + zeta + 0.5);
      plus.coords = Vector::Zero(dim);
      minus.coords = Vector::Zero(dim);
      for (int l = 0; l <= k; ++l) {
        const double a = cp.a_seq[static_cast<std::size_t>(k - l)];
        const double b = cp.b_seq[static_cast<std::size_t>(k - l)];
        minus.coords[b2_index(n, l, -1)] = (alpha0 * a + beta0 * b) / 2.0;
        minus.coords[b2_index(n, l, +1)] = (alpha0 * a - beta0 * b) / 2.0;
        plus.coords[b2_index(n, l, -1)] = (gamma0 * a + eps0 * b) / 2.0;
        plus.coords[b2_index(n, l, +1)] = (gamma0 * a - eps0 * b) / 2.0;
      }
      table.vectors.push_back(std::move(plus));
      table.vectors.push_back(std::move(minus));
    }
  }
  return table;
}

LinkCoeffs link_coeffs(int k, const OscParams& params) {
  require_nonneg(k, "link_coeffs");
  LinkCoeffs lc;
  if (params.level % 2 == 0) {
    const double zeta = params.zeta();
    const double lambda = std::sqrt(k * (k + zeta));
    lc.lambda_plus = lambda;
    lc.lambda_minus = -lambda;
    lc.c = Complex(zeta, -2.0 * lambda) / (2.0 * k + zeta);
  } else {
    const double lambda =
        std::sqrt((k + params.mu_x + 0.5) * (k + params.mu_y + 0.5));
    lc.lambda_plus = lambda;
    lc.lambda_minus = -lambda;
    lc.c = Complex(params.xi(), 2.0 * lambda) / (2.0 * k + params.zeta() + 1.0);
  }
  return lc;
}

EigvecTable q_to_j2(const EigvecTable& table, const OscParams& params) {
  const int n = params.level;
  const bool even = (n % 2 == 0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  auto find_vector = [&](int k, int sign) -> const BasisEigenvector& {
    for (const auto& v : table.vectors) {
      if (v.k == k && v.sign == sign) return v;
    }
    throw std::invalid_argument("q_to_j2: incomplete eigenvector table");
  };

  EigvecTable out;
  out.params = params;

  const int m = even ? n / 2 : (n - 1) / 2;
  for (int k = even ? 1 : 0; k <= m; ++k) {
    const LinkCoeffs lc = link_coeffs(k, params);
    // Canonical normalization factor: the assembled Q-eigenvectors carry the
    // terminating-condition scale, while the Q <-> J2 relation presumes the
    // pair (w_+, Rx w_+).  M is the unimodular mixing coefficient seen from
    // that pair; rho rescales the non-anchor sector accordingly.
    const Complex M = even ? lc.c : -lc.c;
    const Complex rho = Complex(1.0, M.real()) / M.imag();

    const Vector& anchor =
        find_vector(k, even ? +1 : -1).coords;  // terminating (-i, 1)
    const Vector& other = find_vector(k, even ? -1 : +1).coords;
    const Vector q_plus_canonical = even ? anchor : (rho * other).eval();
    const Vector q_minus_canonical = even ? (rho * other).eval() : anchor;

    BasisEigenvector plus, minus;
    plus.k = minus.k = k;
    plus.sign = +1;
    minus.sign = -1;
    plus.eigenvalue = lc.lambda_plus;
    minus.eigenvalue = lc.lambda_minus;
    plus.coords = inv_sqrt2 * (q_plus_canonical + q_minus_canonical);
    minus.coords =
        (-1.0 / (lc.c * std::sqrt(2.0))) * (q_plus_canonical - q_minus_canonical);
    out.vectors.push_back(std::move(plus));
    out.vectors.push_back(std::move(minus));
  }
  if (even) {
    // lambda = 0 eigenvector is the k = 0 Q-eigenvector itself
    BasisEigenvector zero;
    zero.k = 0;
    zero.sign = -1;
    zero.eigenvalue = 0.0;
    zero.coords = find_vector(0, -1).coords;
    out.vectors.push_back(std::move(zero));
  }
  return out;
}

}  // namespace sd2
