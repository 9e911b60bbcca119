// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.  Exit code 0 iff all pass.
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "sd2/interbasis.hpp"
#include "sd2/j2rep.hpp"
#include "sd2/numerics.hpp"
#include "sd2/qdiag.hpp"
#include "sd2/repmat.hpp"
#include "sd2/specfun.hpp"
#include "sd2/verify.hpp"

using namespace sd2;

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

struct Criterion {
  int number;
  std::string description;
  std::function<bool(std::string&)> check;
};

const std::vector<std::pair<double, double>>& grid() {
  static const auto g = default_mu_grid();
  return g;
}

bool isotropic_pair(double mx, double my) { return mx == my; }

double spectrum_deviation(const Matrix& built,
                          const std::vector<double>& predicted) {
  const auto eig = eigenvalues_sorted(built);
  double dev = 0.0;
  std::vector<double> reals;
  for (const Complex& lam : eig) {
    dev = std::max(dev, std::abs(lam.imag()));
    reals.push_back(lam.real());
  }
  std::sort(reals.begin(), reals.end());
  std::vector<double> pred = predicted;
  std::sort(pred.begin(), pred.end());
  for (std::size_t i = 0; i < pred.size(); ++i) {
    dev = std::max(dev, std::abs(pred[i] - reals[i]));
  }
  return dev;
}

// 1. sd(2) closure in all four bases, residual <= 1e-9, N <= 12.
bool criterion_algebra_closure(std::string& note) {
  const double tol = 1e-9;
  double worst = 0.0;
  std::string worst_at;
  for (const auto& [mx, my] : grid()) {
    for (int n = 1; n <= 12; ++n) {
      const OscParams p(n, mx, my);
      std::vector<std::pair<std::string, GeneratorSet>> sets;
      sets.emplace_back("cartesian", build_cartesian(p));
      sets.emplace_back("b1", build_circular(p, BasisOrdering::CircularB1));
      sets.emplace_back("b2", build_circular(p, BasisOrdering::CircularB2));
      if (!isotropic_pair(mx, my)) {
        const int m = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
        sets.emplace_back("j2-eigen", build_j3_j2basis(p, GaugeSeq::ones(m)));
      }
      for (const auto& [name, gs] : sets) {
        const RelationResiduals r = check_sd2_relations(gs);
        if (r.max() > worst) {
          worst = r.max();
          worst_at = name + " N=" + std::to_string(n);
        }
      }
    }
  }
  note = "max relative residual " + fmt(worst) + " (" + worst_at +
         "); isotropic pairs excluded from the j2-eigen basis";
  return worst <= tol;
}

// 2. closed-form spectra match dense eigenvalues, <= 1e-8, N <= 12.
bool criterion_spectra(std::string& note) {
  const double tol = 1e-8;
  double worst = 0.0;
  for (const auto& [mx, my] : grid()) {
    for (int n = 1; n <= 12; ++n) {
      const OscParams p(n, mx, my);
      const GeneratorSet b2 = build_circular(p, BasisOrdering::CircularB2);
      const GeneratorSet cart = build_cartesian(p);
      worst = std::max(worst, spectrum_deviation(
                                  b2.J2, spectrum_closed_form(p, OperatorKind::J2)));
      worst = std::max(worst,
                       spectrum_deviation(cart.J3,
                                          spectrum_closed_form(p, OperatorKind::J3)));
      worst = std::max(worst, spectrum_deviation(
                                  build_q(p), spectrum_closed_form(p, OperatorKind::Q)));
      worst = std::max(worst,
                       spectrum_deviation(cart.H,
                                          spectrum_closed_form(p, OperatorKind::H)));
    }
  }
  note = "max pairwise deviation " + fmt(worst);
  return worst <= tol;
}

// 3. exact block structure, N <= 11.
bool criterion_block_structure(std::string& note) {
  for (const auto& [mx, my] : grid()) {
    for (int n = 1; n <= 11; ++n) {
      const OscParams p(n, mx, my);
      if (!is_block_upper_triangular_b2(
              build_circular(p, BasisOrdering::CircularB2).J2, n)) {
        note = "[J2]_B2 not exactly block upper-triangular at N=" +
               std::to_string(n);
        return false;
      }
      if (!is_block_upper_triangular_b2(build_q(p), n)) {
        note = "[Q]_B2 not exactly block upper-triangular at N=" +
               std::to_string(n);
        return false;
      }
      if (!isotropic_pair(mx, my)) {
        const int m = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
        const Matrix j3 = build_j3_j2basis(p, GaugeSeq::ones(m)).J3;
        auto block_of = [&](int idx) {
          return (n % 2 == 1) ? idx / 2 : ((idx == 0) ? 0 : (idx + 1) / 2);
        };
        for (Eigen::Index i = 0; i < j3.rows(); ++i) {
          for (Eigen::Index j = 0; j < j3.cols(); ++j) {
            if (std::abs(block_of(static_cast<int>(i)) -
                         block_of(static_cast<int>(j))) > 1 &&
                j3(i, j) != Complex(0.0, 0.0)) {
              note = "J3 in the J2 eigenbasis not exactly block tridiagonal";
              return false;
            }
          }
        }
      }
    }
  }
  note = "all entries outside the block patterns are exactly zero";
  return true;
}

// 4. interbasis transition, residual <= 1e-9, invertible, mu-independent.
bool criterion_interbasis(std::string& note) {
  const double tol = 1e-9;
  double worst = 0.0;
  double worst_cond = 0.0;
  for (int n = 1; n <= 12; ++n) {
    RealMatrix reference;
    for (const auto& [mx, my] : grid()) {
      const OscParams p(n, mx, my);
      const TransitionMatrix t = build_transition(p);
      const Matrix j3 = build_circular(p, BasisOrdering::CircularB1).J3;
      const Matrix tc = t.T.cast<Complex>();
      Matrix lambda = Matrix::Zero(n + 1, n + 1);
      for (int j = 0; j <= n; ++j) lambda(j, j) = j + (p.xi() - n) / 2.0;
      worst = std::max(worst, (j3 * tc - tc * lambda).norm() /
                                  std::max(1.0, j3.norm()));
      if (!std::isfinite(t.condition_number) || t.condition_number > 1e12) {
        note = "transition matrix numerically singular at N=" +
               std::to_string(n);
        return false;
      }
      worst_cond = std::max(worst_cond, t.condition_number);
      if (reference.size() == 0) {
        reference = t.T;
      } else if ((reference - t.T).norm() != 0.0) {
        note = "transition matrix depends on mu at N=" + std::to_string(n);
        return false;
      }
    }
  }
  note = "max eigen-relation residual " + fmt(worst) +
         ", max condition number " + fmt(worst_cond);
  return worst <= tol;
}

// 5. eigenvector pipeline residuals <= 1e-9, N <= 11.
bool criterion_eigvec_pipeline(std::string& note) {
  const double tol = 1e-9;
  double worst_q = 0.0;
  double worst_j2 = 0.0;
  for (const auto& [mx, my] : grid()) {
    for (int n = 1; n <= 11; ++n) {
      const OscParams p(n, mx, my);
      const Matrix q = build_q(p);
      const Matrix j2 = build_circular(p, BasisOrdering::CircularB2).J2;
      const EigvecTable q_table = assemble_q_eigvecs(p);
      for (const auto& v : q_table.vectors) {
        worst_q = std::max(worst_q,
                           (q * v.coords - v.eigenvalue * v.coords).norm() /
                               (std::max(1.0, q.norm()) * v.coords.norm()));
      }
      for (const auto& v : q_to_j2(q_table, p).vectors) {
        worst_j2 = std::max(worst_j2,
                            (j2 * v.coords - v.eigenvalue * v.coords).norm() /
                                (std::max(1.0, j2.norm()) * v.coords.norm()));
      }
    }
  }
  note = "max Q residual " + fmt(worst_q) + ", max J2 residual " +
         fmt(worst_j2);
  return worst_q <= tol && worst_j2 <= tol;
}

// 6. closed forms vs solvers (1e-9), Heun route (1e-9), isotropic (1e-10).
bool criterion_closed_forms(std::string& note) {
  double worst_cbi = 0.0;
  double worst_heun = 0.0;
  double worst_iso = 0.0;
  for (const auto& [mx, my] : grid()) {
    for (int k = 0; k <= 6; ++k) {
      {
        const OscParams p(2 * k, mx, my);
        const CoeffPair cp = solve_recurrence_even(k, p);
        for (int n = 0; n <= k; ++n) {
          const double ref = cp.a_seq[static_cast<std::size_t>(n)];
          worst_cbi = std::max(worst_cbi,
                               std::abs(closed_form_even(k, p, n) - ref) /
                                   std::max(1.0, std::abs(ref)));
        }
      }
      {
        const OscParams p(2 * k + 1, mx, my);
        const CoeffPair cp = solve_recurrence_odd(k, p);
        for (int n = 0; n <= k; ++n) {
          const auto [a, b] = closed_form_odd(k, p, n);
          worst_cbi = std::max(
              worst_cbi,
              std::abs(a - cp.a_seq[static_cast<std::size_t>(n)]) /
                  std::max(1.0, std::abs(cp.a_seq[static_cast<std::size_t>(n)])));
          worst_cbi = std::max(
              worst_cbi,
              std::abs(b - cp.b_seq[static_cast<std::size_t>(n)]) /
                  std::max(1.0, std::abs(cp.b_seq[static_cast<std::size_t>(n)])));
        }
      }
      if (k >= 1) {  // Heun generating-series route
        const double zeta = mx + my;
        try {
          const OscParams p(2 * k, mx, my);
          const CoeffPair cp = solve_recurrence_even(k, p);
          const HeunParams hp{-1.0, 2.0 * k * (my - mx), -2.0 * k, zeta,
                              1.0 - 2.0 * k - zeta, 2.0 * my};
          const auto c = heun_series(hp, 2 * k);
          for (int n = 0; n <= 2 * k; ++n) {
            const double ref =
                cp.a_seq[static_cast<std::size_t>(n <= k ? n : 2 * k - n)];
            worst_heun = std::max(worst_heun,
                                  std::abs(c[static_cast<std::size_t>(n)] - ref) /
                                      std::max(1.0, std::abs(ref)));
          }
          const OscParams po(2 * k + 1, mx, my);
          const auto [a_ext, b_ext] =
              solve_recurrence_odd_extended(k, po, 2 * k + 1);
          const HeunParams hpo{-1.0, 2.0 * k * (my - mx - 1.0), -2.0 * k,
                               zeta + 1.0, -2.0 * k - zeta, 2.0 * my};
          const auto co = heun_series(hpo, 2 * k);
          for (int n = 0; n <= 2 * k + 1; ++n) {
            const double conv =
                (n <= 2 * k ? co[static_cast<std::size_t>(n)] : 0.0) +
                (n > 0 ? co[static_cast<std::size_t>(n - 1)] : 0.0);
            const double ref = a_ext[static_cast<std::size_t>(n)];
            worst_heun = std::max(worst_heun, std::abs(conv - ref) /
                                                  std::max(1.0, std::abs(ref)));
          }
        } catch (const SingularParameterError&) {
          // Heun normalization undefined on this lattice point; the CBI and
          // solver routes still cover it.
        }
      }
    }
    if (isotropic_pair(mx, my)) {
      for (int k = 0; k <= 6; ++k) {
        const CoeffPair ge = solve_recurrence_even(k, OscParams(2 * k, mx, mx));
        const CoeffPair ie = isotropic_coeffs(k, mx, Parity::Even);
        const CoeffPair go =
            solve_recurrence_odd(k, OscParams(2 * k + 1, mx, mx));
        const CoeffPair io = isotropic_coeffs(k, mx, Parity::Odd);
        for (int n = 0; n <= k; ++n) {
          worst_iso = std::max(worst_iso,
                               std::abs(ge.a_seq[static_cast<std::size_t>(n)] -
                                        ie.a_seq[static_cast<std::size_t>(n)]));
          worst_iso = std::max(worst_iso,
                               std::abs(ge.b_seq[static_cast<std::size_t>(n)] -
                                        ie.b_seq[static_cast<std::size_t>(n)]));
          worst_iso = std::max(worst_iso,
                               std::abs(go.a_seq[static_cast<std::size_t>(n)] -
                                        io.a_seq[static_cast<std::size_t>(n)]));
          worst_iso = std::max(worst_iso,
                               std::abs(go.b_seq[static_cast<std::size_t>(n)] -
                                        io.b_seq[static_cast<std::size_t>(n)]));
        }
      }
    }
  }
  note = "CBI " + fmt(worst_cbi) + ", Heun " +
         fmt(worst_heun) + ", isotropic " + fmt(worst_iso);
  return worst_cbi <= 1e-9 && worst_heun <= 1e-9 && worst_iso <= 1e-10;
}

// 7. |omega_k| = |upsilon_k| = 1 to 1e-12.
bool criterion_unimodularity(std::string& note) {
  double worst = 0.0;
  for (const auto& [mx, my] : grid()) {
    for (int k = 0; k <= 6; ++k) {
      if (k >= 1) {
        worst = std::max(worst, std::abs(std::abs(link_coeffs(
                                             k, OscParams(2 * k, mx, my)).c) -
                                         1.0));
      }
      worst = std::max(worst, std::abs(std::abs(link_coeffs(
                                           k, OscParams(2 * k + 1, mx, my)).c) -
                                       1.0));
    }
  }
  note = "max | |c| - 1 | = " + fmt(worst);
  return worst <= 1e-12;
}

// 8. u(2) reduction at mu = 0 to 1e-12.
bool criterion_u2_reduction(std::string& note) {
  double worst = 0.0;
  for (int n = 1; n <= 12; ++n) {
    const OscParams p(n, 0.0, 0.0);
    const GeneratorSet b2 = build_circular(p, BasisOrdering::CircularB2);
    Matrix offdiag = b2.J2;
    offdiag.diagonal().setZero();
    worst = std::max(worst, offdiag.norm());

    const GeneratorSet cart = build_cartesian(p);
    Matrix j1(n + 1, n + 1), j2(n + 1, n + 1), j3(n + 1, n + 1);
    j1.setZero();
    j2.setZero();
    j3.setZero();
    for (int col = 0; col <= n; ++col) {
      j3(col, col) = col - n / 2.0;
      if (col + 1 <= n) {
        j1(col + 1, col) = 0.5 * (n - col);
        j2(col + 1, col) = Complex(0.0, -0.5) * static_cast<double>(n - col);
      }
      if (col - 1 >= 0) {
        j1(col - 1, col) = 0.5 * col;
        j2(col - 1, col) = Complex(0.0, 0.5) * static_cast<double>(col);
      }
    }
    worst = std::max(worst, (cart.J1 - j1).norm());
    worst = std::max(worst, (cart.J2 - j2).norm());
    worst = std::max(worst, (cart.J3 - j3).norm());

    // half-integer su(2) lattice spectra
    std::vector<double> lattice;
    for (int m = 0; m <= n; ++m) lattice.push_back(m - n / 2.0);
    worst = std::max(worst, spectrum_deviation(cart.J1, lattice));
    worst = std::max(worst, spectrum_deviation(b2.J2, lattice));
    worst = std::max(worst, spectrum_deviation(cart.J3, lattice));
  }
  note = "max deviation from the su(2) module " + fmt(worst);
  return worst <= 1e-12;
}

// 9. spectrum of the block-tridiagonal J3 vs the Cartesian lattice (reported).
bool criterion_j3_spectrum(std::string& note) {
  double worst = 0.0;
  bool ok = true;
  std::string detail;
  for (const auto& [mx, my] : grid()) {
    if (isotropic_pair(mx, my)) continue;
    for (int n = 1; n <= 11; ++n) {
      const OscParams p(n, mx, my);
      const int m = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
      const GeneratorSet gs = build_j3_j2basis(p, GaugeSeq::ones(m));
      const J3SpectrumReport rep = j3_spectrum_check(gs);
      worst = std::max(worst, std::max(rep.max_deviation, rep.max_imag));
      if (!rep.match) {
        ok = false;
        detail += " N=" + std::to_string(n) + " mux=" + fmt(mx) +
                  " muy=" + fmt(my) + " dev=" +
                  fmt(rep.max_deviation) + " relations[" +
                  check_sd2_relations(gs).breakdown() + "]";
      }
    }
  }
  note = ok ? ("max deviation " + fmt(worst) +
               " (isotropic pairs excluded)")
            : ("failures with per-relation residuals:" + detail);
  return ok;
}

// 10. negative controls: perturbations must break at least one check.
bool criterion_negative_controls(std::string& note) {
  const OscParams p(4, 0.3, 0.7);
  double weakest = std::numeric_limits<double>::infinity();
  for (const std::string name : {"J1", "J2", "J3", "Rx", "Ry", "H"}) {
    GeneratorSet gs = build_circular(p, BasisOrdering::CircularB2);
    Matrix& target = (name == "J1")   ? gs.J1
                     : (name == "J2") ? gs.J2
                     : (name == "J3") ? gs.J3
                     : (name == "Rx") ? gs.Rx
                     : (name == "Ry") ? gs.Ry
                                      : gs.H;
    target(0, 0) += 1e-3;
    weakest = std::min(weakest, check_sd2_relations(gs).max());
  }
  note = "weakest detection residual " + fmt(weakest);
  return weakest > 1e-9;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "algebra closure (<= 1e-9, N <= 12)", criterion_algebra_closure},
      {2, "closed-form spectra (<= 1e-8, N <= 12)", criterion_spectra},
      {3, "exact block structure (N <= 11)", criterion_block_structure},
      {4, "interbasis transition (<= 1e-9)", criterion_interbasis},
      {5, "eigenvector pipeline (<= 1e-9, N <= 11)", criterion_eigvec_pipeline},
      {6, "closed-form equivalence (1e-9 / 1e-10)", criterion_closed_forms},
      {7, "link unimodularity (<= 1e-12)", criterion_unimodularity},
      {8, "u(2) reduction at mu = 0 (<= 1e-12)", criterion_u2_reduction},
      {9, "J3 spectrum in the J2 eigenbasis (<= 1e-8)", criterion_j3_spectrum},
      {10, "negative controls (1e-3 perturbations)",
       criterion_negative_controls},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string note;
    bool ok = false;
    try {
      ok = c.check(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": "
              << c.description << " -- " << note << "\n";
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                              : std::to_string(failures) + " CRITERIA FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
