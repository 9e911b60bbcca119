#include "sd2/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>

namespace sd2 {

namespace {

constexpr double kIntegerSlack = 1e-12;

// Non-positive integers terminate the hypergeometric series.
std::optional<int> as_nonpositive_integer(double x) {
  const double r = std::round(x);
  if (r <= 0.0 && std::abs(x - r) < kIntegerSlack) {
    return static_cast<int>(-r);
  }
  return std::nullopt;
}

}  // namespace

double pochhammer(double a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be nonnegative");
  double prod = 1.0;
  for (int j = 0; j < n; ++j) prod *= a + j;
  return prod;
}

double mu_number(int n, double mu) {
  if (n < 0) throw std::invalid_argument("mu_number: n must be nonnegative");
  return n + mu * (1.0 - ((n % 2 == 0) ? 1.0 : -1.0));
}

double hyp_terminating(const std::vector<double>& num_params,
                       const std::vector<double>& den_params, double z) {
  std::optional<int> cutoff;
  for (double a : num_params) {
    if (auto m = as_nonpositive_integer(a)) {
      cutoff = cutoff ? std::min(*cutoff, *m) : *m;
    }
  }
  if (!cutoff) {
    throw std::invalid_argument(
        "hyp_terminating: no non-positive-integer numerator parameter; "
        "series does not terminate");
  }

  double sum = 1.0;
  double term = 1.0;
  for (int j = 0; j < *cutoff; ++j) {
    for (double a : num_params) term *= a + j;
    for (double b : den_params) {
      const double factor = b + j;
      if (factor == 0.0) {
        throw SingularParameterError(
            "hyp_terminating: denominator parameter " + std::to_string(b) +
            " vanishes at term " + std::to_string(j + 1) +
            " before termination");
      }
      term /= factor;
    }
    term *= z / (j + 1);
    sum += term;
  }
  return sum;
}

double krawtchouk_monic(int n, double x, int level) {
  if (n < 0 || level < 0 || n > level) {
    throw std::invalid_argument("krawtchouk_monic: need 0 <= n <= level");
  }
  double prev = 0.0;  // K_{-1}
  double cur = 1.0;   // K_0
  for (int m = 0; m < n; ++m) {
    const double next =
        (x - level / 2.0) * cur - 0.25 * m * (level - m + 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double cbi_recurrence_coeff(int n, const CBIParams& p) {
  if (n < 0) {
    throw std::invalid_argument("cbi_recurrence_coeff: n must be nonnegative");
  }
  if (n == 0) return 0.0;  // leading factor n kills the even branch
  const double g = p.g();
  if (n % 2 == 0) {
    const int m = n / 2;
    const double den = (2.0 * m + g) * (2.0 * m + g + 1.0);
    if (den == 0.0) {
      throw SingularParameterError(
          "cbi_recurrence_coeff: vanishing denominator at even index " +
          std::to_string(n));
    }
    return -(m * (m + p.rho1 - p.r1 + 0.5) * (m + p.rho1 - p.r2 + 0.5) *
             (m - p.r1 - p.r2)) /
           den;
  }
  const int m = (n - 1) / 2;
  const double den = (2.0 * m + g + 1.0) * (2.0 * m + g + 2.0);
  if (den == 0.0) {
    throw SingularParameterError(
        "cbi_recurrence_coeff: vanishing denominator at odd index " +
        std::to_string(n));
  }
  return -((m + g + 1.0) * (m + p.rho1 + p.rho2 + 1.0) *
           (m + p.rho2 - p.r1 + 0.5) * (m + p.rho2 - p.r2 + 0.5)) /
         den;
}

double cbi_monic(int n, double x, const CBIParams& p) {
  if (n < 0) throw std::invalid_argument("cbi_monic: n must be nonnegative");
  double prev = 0.0;  // I_{-1}
  double cur = 1.0;   // I_0
  for (int m = 0; m < n; ++m) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const double next =
        (x - sign * p.rho2) * cur - cbi_recurrence_coeff(m, p) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double cbi_monic_hypergeometric(int n, double x, const CBIParams& p) {
  if (n < 0) throw std::invalid_argument("cbi_monic_hypergeometric: n >= 0");
  const double g = p.g();
  if (n % 2 == 0) {
    const int m = n / 2;
    const double eta = pochhammer(p.rho1 + p.rho2 + 1.0, m) *
                       pochhammer(p.rho2 - p.r1 + 0.5, m) *
                       pochhammer(p.rho2 - p.r2 + 0.5, m) /
                       pochhammer(m + g + 1.0, m);
    return eta * hyp_terminating(
                     {static_cast<double>(-m), m + g + 1.0, p.rho2 + x,
                      p.rho2 - x},
                     {p.rho1 + p.rho2 + 1.0, p.rho2 - p.r1 + 0.5,
                      p.rho2 - p.r2 + 0.5},
                     1.0);
  }
  const int m = (n - 1) / 2;
  const double iota = pochhammer(p.rho1 + p.rho2 + 2.0, m) *
                      pochhammer(p.rho2 - p.r1 + 1.5, m) *
                      pochhammer(p.rho2 - p.r2 + 1.5, m) /
                      pochhammer(m + g + 2.0, m);
  return (x - p.rho2) * iota *
         hyp_terminating({static_cast<double>(-m), m + g + 2.0,
                          p.rho2 + x + 1.0, p.rho2 - x + 1.0},
                         {p.rho1 + p.rho2 + 2.0, p.rho2 - p.r1 + 1.5,
                          p.rho2 - p.r2 + 1.5},
                         1.0);
}

std::vector<double> heun_series(const HeunParams& p, int max_degree) {
  if (max_degree < 0) {
    throw std::invalid_argument("heun_series: max_degree must be nonnegative");
  }
  std::vector<double> c(static_cast<std::size_t>(max_degree) + 1, 0.0);
  c[0] = 1.0;
  const double eps = p.epsilon();
  double prev = 0.0;  // c_{-1}
  for (int n = 0; n < max_degree; ++n) {
    const double rn = p.a * (n + 1.0) * (n + p.gamma);
    const double qn = n * ((n - 1.0 + p.gamma) * (1.0 + p.a) + p.a * p.delta +
                           eps);
    const double pn = (n - 1.0 + p.alpha) * (n - 1.0 + p.beta);
    const double cur = c[static_cast<std::size_t>(n)];
    const double num = (qn + p.q) * cur - pn * prev;
    double next;
    if (rn == 0.0) {
      // Past the terminating degree of a polynomial solution the remaining
      // coefficients vanish identically, so a pole there is removable.  A
      // pole below the terminating degree leaves the tail undetermined.
      const auto degree = as_nonpositive_integer(p.alpha);
      const double scale = std::max({1.0, std::abs(cur), std::abs(prev)});
      if (degree && n >= *degree && std::abs(num) <= 1e-10 * scale) {
        next = 0.0;
      } else {
        throw SingularParameterError(
            "heun_series: R_n vanishes at n = " + std::to_string(n));
      }
    } else {
      next = num / rn;
    }
    prev = cur;
    c[static_cast<std::size_t>(n) + 1] = next;
  }
  return c;
}

}  // namespace sd2
