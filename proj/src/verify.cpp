#include "sd2/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "sd2/interbasis.hpp"
#include "sd2/numerics.hpp"
#include "sd2/qdiag.hpp"
#include "sd2/specfun.hpp"

namespace sd2 {

namespace {

double rel_residual(const Matrix& lhs, const Matrix& rhs) {
  return (lhs - rhs).norm() / std::max({1.0, lhs.norm(), rhs.norm()});
}

std::string param_tag(const OscParams& p) {
  std::ostringstream ss;
  ss << "N=" << p.level << " mux=" << p.mu_x << " muy=" << p.mu_y;
  return ss.str();
}

std::string mu_tag(double mx, double my) {
  std::ostringstream ss;
  ss << "mux=" << mx << " muy=" << my;
  return ss.str();
}

template <class State>
StateSum<State> combine(const StateSum<State>& a, Complex cb,
                        const StateSum<State>& b) {
  StateSum<State> out;
  for (const auto& t : a.terms) out.add(t.coeff, t.state);
  for (const auto& t : b.terms) out.add(cb * t.coeff, t.state);
  out.canonicalize();
  return out;
}

template <class State>
double max_abs_coeff(const StateSum<State>& s) {
  double m = 0.0;
  for (const auto& t : s.terms) m = std::max(m, std::abs(t.coeff));
  return m;
}

}  // namespace

double RelationResiduals::max() const {
  return std::max({anti_j1_rx, anti_j1_ry, anti_j2_rx, anti_j2_ry, comm_j3_rx,
                   comm_j3_ry, rx_involution, ry_involution, comm_j2_j3,
                   comm_j3_j1, comm_j1_j2, casimir_vs_h, casimir_commutes,
                   h_scalar});
}

std::string RelationResiduals::breakdown() const {
  std::ostringstream ss;
  ss << "{J1,Rx}=" << anti_j1_rx << " {J1,Ry}=" << anti_j1_ry
     << " {J2,Rx}=" << anti_j2_rx << " {J2,Ry}=" << anti_j2_ry
     << " [J3,Rx]=" << comm_j3_rx << " [J3,Ry]=" << comm_j3_ry
     << " Rx^2=" << rx_involution << " Ry^2=" << ry_involution
     << " [J2,J3]=" << comm_j2_j3 << " [J3,J1]=" << comm_j3_j1
     << " [J1,J2]=" << comm_j1_j2 << " C-(H^2-1)/4=" << casimir_vs_h
     << " [C,.]=" << casimir_commutes << " H-E_N=" << h_scalar;
  return ss.str();
}

RelationResiduals check_sd2_relations(const GeneratorSet& gs) {
  const Eigen::Index dim = gs.J1.rows();
  const Matrix id = Matrix::Identity(dim, dim);
  const double mx = gs.params.mu_x;
  const double my = gs.params.mu_y;

  // Residuals are relative to the Frobenius norms of what was multiplied;
  // a product identity A B (+/-) B A = RHS is scaled by max(1, |A||B|, |RHS|).
  auto product_residual = [&](const Matrix& lhs, const Matrix& rhs,
                              const Matrix& a, const Matrix& b) {
    return (lhs - rhs).norm() /
           std::max({1.0, a.norm() * b.norm(), rhs.norm()});
  };
  const Matrix zero = Matrix::Zero(dim, dim);

  RelationResiduals r;
  r.anti_j1_rx = product_residual(anticommutator(gs.J1, gs.Rx), zero, gs.J1, gs.Rx);
  r.anti_j1_ry = product_residual(anticommutator(gs.J1, gs.Ry), zero, gs.J1, gs.Ry);
  r.anti_j2_rx = product_residual(anticommutator(gs.J2, gs.Rx), zero, gs.J2, gs.Rx);
  r.anti_j2_ry = product_residual(anticommutator(gs.J2, gs.Ry), zero, gs.J2, gs.Ry);
  r.comm_j3_rx = product_residual(commutator(gs.J3, gs.Rx), zero, gs.J3, gs.Rx);
  r.comm_j3_ry = product_residual(commutator(gs.J3, gs.Ry), zero, gs.J3, gs.Ry);
  r.rx_involution = product_residual(gs.Rx * gs.Rx, id, gs.Rx, gs.Rx);
  r.ry_involution = product_residual(gs.Ry * gs.Ry, id, gs.Ry, gs.Ry);
  r.comm_j2_j3 =
      product_residual(commutator(gs.J2, gs.J3), kI * gs.J1, gs.J2, gs.J3);
  r.comm_j3_j1 =
      product_residual(commutator(gs.J3, gs.J1), kI * gs.J2, gs.J3, gs.J1);
  const Matrix mixed = gs.J3 + gs.J3 * (mx * gs.Rx + my * gs.Ry) -
                       0.5 * gs.H * (mx * gs.Rx - my * gs.Ry);
  r.comm_j1_j2 =
      product_residual(commutator(gs.J1, gs.J2), kI * mixed, gs.J1, gs.J2);
  r.casimir_vs_h = (gs.Casimir - 0.25 * (gs.H * gs.H - id)).norm() /
                   std::max({1.0, gs.Casimir.norm(), 0.25 * gs.H.norm() *
                                                         gs.H.norm()});
  r.casimir_commutes = std::max(
      {product_residual(commutator(gs.Casimir, gs.J1), zero, gs.Casimir, gs.J1),
       product_residual(commutator(gs.Casimir, gs.J2), zero, gs.Casimir, gs.J2),
       product_residual(commutator(gs.Casimir, gs.J3), zero, gs.Casimir, gs.J3),
       product_residual(commutator(gs.Casimir, gs.Rx), zero, gs.Casimir, gs.Rx),
       product_residual(commutator(gs.Casimir, gs.Ry), zero, gs.Casimir,
                        gs.Ry)});
  r.h_scalar = rel_residual(gs.H, gs.params.energy() * id);
  return r;
}

std::vector<std::pair<double, double>> default_mu_grid() {
  const std::vector<double> values = {-0.4, 0.0, 0.3, 0.7, 1.5};
  std::vector<std::pair<double, double>> grid;
  for (double mx : values) {
    for (double my : values) grid.emplace_back(mx, my);
  }
  return grid;
}

void Report::add(CheckRecord record) {
  overall = overall && record.pass;
  records.push_back(std::move(record));
}

nlohmann::json Report::to_json() const {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records) {
    recs.push_back({{"id", r.id},
                    {"params", r.params},
                    {"max_residual", r.max_residual},
                    {"pass", r.pass},
                    {"notes", r.notes}});
  }
  nlohmann::json grid_json = nlohmann::json::array();
  for (const auto& [mx, my] : grid) grid_json.push_back({mx, my});
  return {{"overall", overall},
          {"n_max", n_max},
          {"seed", seed},
          {"grid", std::move(grid_json)},
          {"tolerances",
           {{"residual_tol", tol.residual_tol},
            {"eig_match_tol", tol.eig_match_tol},
            {"degeneracy_tol", tol.degeneracy_tol}}},
          {"records", std::move(recs)}};
}

CheckRecord check_spectrum_match(const Matrix& built,
                                 const std::vector<double>& predicted,
                                 const Tolerances& tol, std::string id,
                                 std::string params) {
  CheckRecord rec;
  rec.id = std::move(id);
  rec.params = std::move(params);
  if (static_cast<std::size_t>(built.rows()) != predicted.size()) {
    rec.pass = false;
    rec.notes = "dimension mismatch";
    rec.max_residual = std::numeric_limits<double>::infinity();
    return rec;
  }
  std::vector<Complex> eig;
  try {
    eig = eigenvalues_sorted(built, tol);
  } catch (const std::exception& e) {
    rec.pass = false;
    rec.notes = e.what();
    rec.max_residual = std::numeric_limits<double>::infinity();
    return rec;
  }
  double max_imag = 0.0;
  std::vector<double> real_parts;
  real_parts.reserve(eig.size());
  for (const Complex& lam : eig) {
    max_imag = std::max(max_imag, std::abs(lam.imag()));
    real_parts.push_back(lam.real());
  }
  std::sort(real_parts.begin(), real_parts.end());
  std::vector<double> sorted_pred = predicted;
  std::sort(sorted_pred.begin(), sorted_pred.end());
  double dev = max_imag;
  for (std::size_t i = 0; i < sorted_pred.size(); ++i) {
    dev = std::max(dev, std::abs(sorted_pred[i] - real_parts[i]));
  }
  rec.max_residual = dev;
  rec.pass = dev <= tol.eig_match_tol;
  if (!rec.pass) {
    std::ostringstream ss;
    ss << "max deviation " << dev << " (imag part " << max_imag << ")";
    rec.notes = ss.str();
  }
  return rec;
}

namespace {

// ---- Fock-level checks ----------------------------------------------------

using Combo = std::vector<std::pair<Complex, OperatorId>>;

// Circular operators as combinations of Cartesian ones (left/right split).
Combo cartesian_combo(OperatorId op) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (op) {
    case OperatorId::APlusL:
      return {{s, OperatorId::APlusX}, {-s * kI, OperatorId::APlusY}};
    case OperatorId::APlusR:
      return {{s, OperatorId::APlusX}, {s * kI, OperatorId::APlusY}};
    case OperatorId::AMinusL:
      return {{s, OperatorId::AMinusX}, {s * kI, OperatorId::AMinusY}};
    case OperatorId::AMinusR:
      return {{s, OperatorId::AMinusX}, {-s * kI, OperatorId::AMinusY}};
    case OperatorId::ReflX:
      return {{1.0, OperatorId::ReflX}};
    case OperatorId::ReflY:
      return {{1.0, OperatorId::ReflY}};
    default:
      throw std::invalid_argument("cartesian_combo: not a circular operator");
  }
}

CartesianSum apply_combo(const Combo& combo, const CartesianSum& s,
                         const OscParams& params) {
  CartesianSum out;
  for (const auto& [coeff, op] : combo) {
    CartesianSum part = apply_cartesian(op, s, params);
    for (const auto& t : part.terms) out.add(coeff * t.coeff, t.state);
  }
  out.canonicalize();
  return out;
}

// Expansion of the circular level-N basis (B1 order) over the Cartesian
// level-N basis, by building (A_+^L)^{nl} (A_+^R)^{nr} |0,0> from Cartesian
// ladder words.
Matrix circular_expansion(int level, const OscParams& params) {
  Matrix e = Matrix::Zero(level + 1, level + 1);
  const auto circ = circular_basis_b1(level);
  for (int c = 0; c <= level; ++c) {
    CartesianSum acc;
    acc.add(1.0, CartesianState{0, 0});
    for (int i = 0; i < circ[static_cast<std::size_t>(c)].nr; ++i) {
      acc = apply_combo(cartesian_combo(OperatorId::APlusR), acc, params);
    }
    for (int i = 0; i < circ[static_cast<std::size_t>(c)].nl; ++i) {
      acc = apply_combo(cartesian_combo(OperatorId::APlusL), acc, params);
    }
    for (const auto& t : acc.terms) {
      e(t.state.nx, c) = t.coeff;  // row index: Cartesian nx
    }
  }
  return e;
}

// Matrix of a circular operator between B1 levels, from apply_circular.
Matrix circular_op_matrix(OperatorId op, int level_from, int level_to,
                          const OscParams& params) {
  Matrix m = Matrix::Zero(level_to + 1, level_from + 1);
  const auto from = circular_basis_b1(level_from);
  for (int c = 0; c <= level_from; ++c) {
    const CircularSum out =
        apply_circular(op, from[static_cast<std::size_t>(c)], params);
    for (const auto& t : out.terms) {
      if (t.state.total() != level_to) {
        throw std::logic_error("circular_op_matrix: level leak");
      }
      m(t.state.nl, c) = t.coeff;
    }
  }
  return m;
}

// Matrix of a Cartesian operator combo between Cartesian levels.
Matrix cartesian_op_matrix(const Combo& combo, int level_from, int level_to,
                           const OscParams& params) {
  Matrix m = Matrix::Zero(level_to + 1, level_from + 1);
  const auto from = cartesian_basis(level_from);
  for (int c = 0; c <= level_from; ++c) {
    CartesianSum s;
    s.add(1.0, from[static_cast<std::size_t>(c)]);
    const CartesianSum out = apply_combo(combo, s, params);
    for (const auto& t : out.terms) {
      m(t.state.nx, c) = t.coeff;
    }
  }
  return m;
}

void run_fock_state_checks(Report& report, int level, const OscParams& params) {
  using Op = OperatorId;
  double worst = 0.0;
  std::string worst_note;
  const auto basis = cartesian_basis(level);

  auto word2 = [&](Op a, Op b, const CartesianState& s) {
    return apply_word({a, b}, s, params);
  };

  for (const auto& s : basis) {
    // [A_-, A_+] = I + 2 mu R per coordinate
    for (int axis = 0; axis < 2; ++axis) {
      const Op plus = (axis == 0) ? Op::APlusX : Op::APlusY;
      const Op minus = (axis == 0) ? Op::AMinusX : Op::AMinusY;
      const Op refl = (axis == 0) ? Op::ReflX : Op::ReflY;
      const double mu = (axis == 0) ? params.mu_x : params.mu_y;
      CartesianSum lhs =
          combine(word2(minus, plus, s), -1.0, word2(plus, minus, s));
      CartesianSum rhs;
      rhs.add(1.0, s);
      rhs = combine(rhs, 2.0 * mu, apply_cartesian(refl, s, params));
      const double d = max_abs_coeff(combine(lhs, -1.0, rhs));
      if (d > worst) {
        worst = d;
        worst_note = "commutation axis " + std::to_string(axis);
      }
      // {A_+/-, R} = 0
      for (Op ladder : {plus, minus}) {
        const double anti = max_abs_coeff(
            combine(word2(ladder, refl, s), 1.0, word2(refl, ladder, s)));
        if (anti > worst) {
          worst = anti;
          worst_note = "ladder-reflection anticommutator";
        }
      }
    }
    // cross-coordinate commutators vanish
    const std::vector<std::pair<Op, Op>> cross = {
        {Op::APlusX, Op::APlusY},   {Op::AMinusX, Op::AMinusY},
        {Op::APlusX, Op::AMinusY},  {Op::AMinusX, Op::APlusY},
        {Op::APlusX, Op::ReflY},    {Op::AMinusX, Op::ReflY},
        {Op::APlusY, Op::ReflX},    {Op::AMinusY, Op::ReflX},
        {Op::ReflX, Op::ReflY}};
    for (const auto& [a, b] : cross) {
      const double d =
          max_abs_coeff(combine(word2(a, b, s), -1.0, word2(b, a, s)));
      if (d > worst) {
        worst = d;
        worst_note = "cross-coordinate commutator";
      }
    }
  }

  CheckRecord rec;
  rec.id = "fock/cartesian-relations";
  rec.params = param_tag(params) + " level=" + std::to_string(level);
  rec.max_residual = worst;
  rec.pass = worst <= 1e-12 * std::max(1.0, static_cast<double>(level));
  rec.notes = rec.pass ? "" : worst_note;
  report.add(std::move(rec));
}

void run_fock_circular_checks(Report& report, int level,
                              const OscParams& params,
                              const Tolerances& tol) {
  // circular lowering keeps exactly one level below
  {
    double worst = 0.0;
    bool level_ok = true;
    for (const auto& s : circular_basis_b1(level)) {
      for (OperatorId op : {OperatorId::AMinusL, OperatorId::AMinusR}) {
        for (const auto& t : apply_circular(op, s, params).terms) {
          if (t.state.total() != level - 1) level_ok = false;
        }
      }
      // reflection relations Rx A_L = -A_R Rx etc.
      const CircularSum lhs =
          apply_word({OperatorId::ReflX, OperatorId::APlusL}, s, params);
      const CircularSum rhs =
          apply_word({OperatorId::APlusR, OperatorId::ReflX}, s, params);
      worst = std::max(worst, max_abs_coeff(combine(lhs, 1.0, rhs)));
      const CircularSum lhs2 =
          apply_word({OperatorId::ReflY, OperatorId::AMinusL}, s, params);
      const CircularSum rhs2 =
          apply_word({OperatorId::AMinusR, OperatorId::ReflY}, s, params);
      worst = std::max(worst, max_abs_coeff(combine(lhs2, -1.0, rhs2)));
    }
    CheckRecord rec;
    rec.id = "fock/circular-grading";
    rec.params = param_tag(params) + " level=" + std::to_string(level);
    rec.max_residual = worst;
    rec.pass = level_ok && worst <= 1e-12;
    if (!level_ok) rec.notes = "lowering left the expected level";
    report.add(std::move(rec));
  }

  // conjugation through the left/right linear map
  {
    const Matrix e_n = circular_expansion(level, params);
    double worst = 0.0;
    for (OperatorId op : {OperatorId::AMinusL, OperatorId::AMinusR,
                          OperatorId::ReflX, OperatorId::ReflY}) {
      const int target = is_reflection(op) ? level : level - 1;
      if (target < 0) continue;
      const Matrix circ = circular_op_matrix(op, level, target, params);
      const Matrix cart =
          cartesian_op_matrix(cartesian_combo(op), level, target, params);
      const Matrix e_target =
          is_reflection(op) ? e_n : circular_expansion(target, params);
      worst = std::max(worst, rel_residual(e_target * circ, cart * e_n));
    }
    CheckRecord rec;
    rec.id = "fock/circular-conjugation";
    rec.params = param_tag(params) + " level=" + std::to_string(level);
    rec.max_residual = worst;
    rec.pass = worst <= tol.residual_tol;
    report.add(std::move(rec));
  }
}

// ---- repmat checks --------------------------------------------------------

void run_repmat_checks(Report& report, const OscParams& params,
                       const Tolerances& tol) {
  const std::string tag = param_tag(params);
  const GeneratorSet cart = build_cartesian(params);
  const GeneratorSet b1 = build_circular(params, BasisOrdering::CircularB1);
  const GeneratorSet b2 = build_circular(params, BasisOrdering::CircularB2);

  const std::vector<std::pair<std::string, const GeneratorSet*>> sets = {
      {"cartesian", &cart}, {"circular-b1", &b1}, {"circular-b2", &b2}};
  for (const auto& [name, gs] : sets) {
    const RelationResiduals r = check_sd2_relations(*gs);
    CheckRecord rec;
    rec.id = "repmat/sd2-relations/" + name;
    rec.params = tag;
    rec.max_residual = r.max();
    rec.pass = r.max() <= tol.residual_tol;
    if (!rec.pass) rec.notes = r.breakdown();
    report.add(std::move(rec));

    // J1 rebuilt from the commutator route
    CheckRecord rec2;
    rec2.id = "repmat/j1-rebuild/" + name;
    rec2.params = tag;
    rec2.max_residual =
        rel_residual(gs->J1, -kI * commutator(gs->J2, gs->J3));
    rec2.pass = rec2.max_residual <= tol.residual_tol;
    report.add(std::move(rec2));
  }

  // Casimir scalar value in the Cartesian module
  {
    const double expected =
        0.25 * (params.level + params.zeta()) * (params.level + 2.0 + params.zeta());
    CheckRecord rec;
    rec.id = "repmat/casimir-scalar";
    rec.params = tag;
    rec.max_residual = rel_residual(
        cart.Casimir, expected * Matrix::Identity(cart.Casimir.rows(),
                                                  cart.Casimir.cols()));
    rec.pass = rec.max_residual <= tol.residual_tol;
    report.add(std::move(rec));
  }

  // printed forms against the Fock route
  {
    const std::vector<std::tuple<std::string, Matrix, Matrix>> pairs = {
        {"j2-cartesian", cart.J2, printed_j2_cartesian(params)},
        {"j3-cartesian", cart.J3, printed_j3_cartesian(params)},
        {"j3-b1", b1.J3, printed_j3_b1(params)},
        {"j2-b2", b2.J2, printed_j2_b2(params)},
        {"q-b2", build_q(params), printed_q_b2(params)}};
    for (const auto& [name, built, printed] : pairs) {
      CheckRecord rec;
      rec.id = "repmat/printed-form/" + name;
      rec.params = tag;
      rec.max_residual = rel_residual(built, printed);
      rec.pass = rec.max_residual <= tol.residual_tol;
      report.add(std::move(rec));
    }
  }

  // exact block upper-triangular structure in B2
  {
    CheckRecord rec;
    rec.id = "repmat/block-upper-triangular";
    rec.params = tag;
    const bool j2_ok = is_block_upper_triangular_b2(b2.J2, params.level);
    const bool q_ok =
        is_block_upper_triangular_b2(build_q(params), params.level);
    rec.pass = j2_ok && q_ok;
    rec.max_residual = rec.pass ? 0.0 : 1.0;
    if (!rec.pass) rec.notes = "nonzero entry below the block diagonal";
    report.add(std::move(rec));
  }

  // spectra against closed forms
  report.add(check_spectrum_match(b2.J2, spectrum_closed_form(params, OperatorKind::J2),
                                  tol, "repmat/spectrum/j2", tag));
  report.add(check_spectrum_match(cart.J3, spectrum_closed_form(params, OperatorKind::J3),
                                  tol, "repmat/spectrum/j3-cartesian", tag));
  report.add(check_spectrum_match(b1.J3, spectrum_closed_form(params, OperatorKind::J3),
                                  tol, "repmat/spectrum/j3-b1", tag));
  report.add(check_spectrum_match(build_q(params),
                                  spectrum_closed_form(params, OperatorKind::Q),
                                  tol, "repmat/spectrum/q", tag));
  report.add(check_spectrum_match(cart.H, spectrum_closed_form(params, OperatorKind::H),
                                  tol, "repmat/spectrum/h", tag));

  // u(2) reduction
  if (params.mu_x == 0.0 && params.mu_y == 0.0) {
    CheckRecord rec;
    rec.id = "repmat/u2-reduction";
    rec.params = tag;
    double worst = 0.0;
    Matrix offdiag = b2.J2;
    offdiag.diagonal().setZero();
    worst = std::max(worst, offdiag.norm());
    // the Cartesian module at mu = 0 is the standard su(2) module
    const int n = params.level;
    Matrix j1(n + 1, n + 1), j2(n + 1, n + 1);
    j1.setZero();
    j2.setZero();
    for (int col = 0; col <= n; ++col) {
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
    rec.max_residual = worst;
    rec.pass = worst <= 1e-12;
    report.add(std::move(rec));
  }
}

// ---- interbasis checks ----------------------------------------------------

void run_interbasis_checks(Report& report, const OscParams& params,
                           const Tolerances& tol) {
  const std::string tag = param_tag(params);
  const TransitionMatrix t = build_transition(params);
  const Matrix j3b1 = build_circular(params, BasisOrdering::CircularB1).J3;
  const int n = params.level;

  Matrix lambda = Matrix::Zero(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) lambda(j, j) = j + (params.xi() - n) / 2.0;
  const Matrix tc = t.T.cast<Complex>();

  CheckRecord rec;
  rec.id = "interbasis/eigen-relation";
  rec.params = tag;
  rec.max_residual = (j3b1 * tc - tc * lambda).norm() /
                     std::max(1.0, j3b1.norm());
  rec.pass = rec.max_residual <= tol.residual_tol;
  report.add(std::move(rec));

  CheckRecord rec2;
  rec2.id = "interbasis/invertibility";
  rec2.params = tag;
  rec2.max_residual = t.condition_number;
  rec2.pass = std::isfinite(t.condition_number) && t.condition_number < 1e12;
  rec2.notes = "condition number " + std::to_string(t.condition_number);
  report.add(std::move(rec2));

  // mu-independence: identical to the transition matrix at a reference mu
  CheckRecord rec3;
  rec3.id = "interbasis/mu-independence";
  rec3.params = tag;
  const TransitionMatrix ref =
      build_transition(OscParams(params.level, 0.0, 0.0));
  rec3.max_residual = (t.T - ref.T).norm();
  rec3.pass = rec3.max_residual == 0.0;
  report.add(std::move(rec3));
}

// ---- qdiag checks ---------------------------------------------------------

void run_qdiag_residual_checks(Report& report, const OscParams& params,
                               const Tolerances& tol) {
  const std::string tag = param_tag(params);
  const Matrix q = build_q(params);
  const Matrix j2 = build_circular(params, BasisOrdering::CircularB2).J2;
  const EigvecTable q_table = assemble_q_eigvecs(params);
  const EigvecTable j2_table = q_to_j2(q_table, params);

  double worst_q = 0.0;
  for (const auto& v : q_table.vectors) {
    const double res = (q * v.coords - v.eigenvalue * v.coords).norm() /
                       (std::max(1.0, q.norm()) * v.coords.norm());
    worst_q = std::max(worst_q, res);
  }
  CheckRecord rec;
  rec.id = "qdiag/q-eigvec-residual";
  rec.params = tag;
  rec.max_residual = worst_q;
  rec.pass = worst_q <= tol.residual_tol;
  report.add(std::move(rec));

  double worst_j2 = 0.0;
  for (const auto& v : j2_table.vectors) {
    const double res = (j2 * v.coords - v.eigenvalue * v.coords).norm() /
                       (std::max(1.0, j2.norm()) * v.coords.norm());
    worst_j2 = std::max(worst_j2, res);
  }
  CheckRecord rec2;
  rec2.id = "qdiag/j2-eigvec-residual";
  rec2.params = tag;
  rec2.max_residual = worst_j2;
  rec2.pass = worst_j2 <= tol.residual_tol;
  report.add(std::move(rec2));

  // unimodularity of the link coefficient
  double worst_c = 0.0;
  const int m = (params.level % 2 == 0) ? params.level / 2
                                        : (params.level - 1) / 2;
  for (int k = (params.level % 2 == 0) ? 1 : 0; k <= m; ++k) {
    worst_c = std::max(worst_c,
                       std::abs(std::abs(link_coeffs(k, params).c) - 1.0));
  }
  CheckRecord rec3;
  rec3.id = "qdiag/link-unimodular";
  rec3.params = tag;
  rec3.max_residual = worst_c;
  rec3.pass = worst_c <= 1e-12;
  report.add(std::move(rec3));
}

void run_qdiag_coefficient_checks(Report& report, double mx, double my,
                                  int k_max, const Tolerances& tol) {
  const std::string tag = mu_tag(mx, my);

  // Closed forms vs the recurrence solvers (both parities).
  {
    double worst = 0.0;
    for (int k = 0; k <= k_max; ++k) {
      const OscParams even_params(2 * k, mx, my);
      const CoeffPair cp = solve_recurrence_even(k, even_params);
      for (int n = 0; n <= k; ++n) {
        const double closed = closed_form_even(k, even_params, n);
        const double ref = cp.a_seq[static_cast<std::size_t>(n)];
        worst = std::max(worst,
                         std::abs(closed - ref) / std::max(1.0, std::abs(ref)));
        // mirrored upper half against the solver value
        const double mirrored = closed_form_even(k, even_params, 2 * k - n);
        worst = std::max(worst, std::abs(mirrored - ref) /
                                    std::max(1.0, std::abs(ref)));
      }
    }
    CheckRecord rec;
    rec.id = "qdiag/closed-form-even";
    rec.params = tag;
    rec.max_residual = worst;
    rec.pass = worst <= tol.residual_tol;
    report.add(std::move(rec));
  }
  {
    double worst = 0.0;
    for (int k = 0; k <= k_max; ++k) {
      const OscParams odd_params(2 * k + 1, mx, my);
      const CoeffPair cp = solve_recurrence_odd(k, odd_params);
      for (int n = 0; n <= k; ++n) {
        const auto [a, b] = closed_form_odd(k, odd_params, n);
        worst = std::max(
            worst, std::abs(a - cp.a_seq[static_cast<std::size_t>(n)]) /
                       std::max(1.0, std::abs(cp.a_seq[static_cast<std::size_t>(n)])));
        worst = std::max(
            worst, std::abs(b - cp.b_seq[static_cast<std::size_t>(n)]) /
                       std::max(1.0, std::abs(cp.b_seq[static_cast<std::size_t>(n)])));
      }
    }
    CheckRecord rec;
    rec.id = "qdiag/closed-form-odd";
    rec.params = tag;
    rec.max_residual = worst;
    rec.pass = worst <= tol.residual_tol;
    report.add(std::move(rec));
  }

  // Heun series route (skipped where the coefficient recurrence hits a pole).
  {
    CheckRecord rec;
    rec.id = "qdiag/heun-route";
    rec.params = tag;
    double worst = 0.0;
    bool applicable = true;
    try {
      for (int k = 1; k <= k_max; ++k) {
        const double zeta = mx + my;
        {
          const OscParams p(2 * k, mx, my);
          const CoeffPair cp = solve_recurrence_even(k, p);
          const HeunParams hp{-1.0, 2.0 * k * (my - mx), -2.0 * k, zeta,
                              1.0 - 2.0 * k - zeta, 2.0 * my};
          const auto c = heun_series(hp, 2 * k);
          for (int n = 0; n <= 2 * k; ++n) {
            const double ref = cp.a_seq[static_cast<std::size_t>(
                n <= k ? n : 2 * k - n)];
            worst = std::max(worst, std::abs(c[static_cast<std::size_t>(n)] - ref) /
                                        std::max(1.0, std::abs(ref)));
          }
        }
        {
          const OscParams p(2 * k + 1, mx, my);
          const auto [a_ext, b_ext] =
              solve_recurrence_odd_extended(k, p, 2 * k + 1);
          const HeunParams hp{-1.0, 2.0 * k * (my - mx - 1.0), -2.0 * k,
                              zeta + 1.0, -2.0 * k - zeta, 2.0 * my};
          const auto c = heun_series(hp, 2 * k);
          // a_n = c_n + c_{n-1} after the (1+z) prefactor
          for (int n = 0; n <= 2 * k + 1; ++n) {
            const double conv =
                (n <= 2 * k ? c[static_cast<std::size_t>(n)] : 0.0) +
                (n > 0 ? c[static_cast<std::size_t>(n - 1)] : 0.0);
            const double ref = a_ext[static_cast<std::size_t>(n)];
            worst = std::max(worst, std::abs(conv - ref) /
                                        std::max(1.0, std::abs(ref)));
          }
        }
      }
    } catch (const SingularParameterError& e) {
      applicable = false;
      rec.notes = std::string("skipped: ") + e.what();
    }
    rec.max_residual = applicable ? worst : 0.0;
    rec.pass = !applicable || worst <= tol.residual_tol;
    report.add(std::move(rec));
  }

  // Center symmetry of the solver outputs.
  {
    CheckRecord rec;
    rec.id = "qdiag/center-symmetry";
    rec.params = tag;
    double worst = 0.0;
    try {
      for (int k = 1; k <= k_max; ++k) {
        {
          const OscParams p(2 * k, mx, my);
          const auto [a, b] = solve_recurrence_even_extended(k, p, 2 * k);
          for (int n = 0; n <= 2 * k; ++n) {
            worst = std::max(worst, std::abs(a[static_cast<std::size_t>(n)] -
                                             a[static_cast<std::size_t>(2 * k - n)]));
          }
        }
        {
          const OscParams p(2 * k + 1, mx, my);
          const auto [a, b] =
              solve_recurrence_odd_extended(k, p, 2 * k + 1);
          // P_r reconstructed from a_n = P_n + P_{n-1}
          std::vector<double> pr(a.size());
          double carry = 0.0;
          for (std::size_t n = 0; n < a.size(); ++n) {
            pr[n] = a[n] - carry;
            carry = pr[n];
          }
          for (int r = k + 1; r <= 2 * k; ++r) {
            worst = std::max(
                worst, std::abs(pr[static_cast<std::size_t>(r)] -
                                pr[static_cast<std::size_t>(2 * k - r)]));
          }
          worst = std::max(worst, std::abs(pr[static_cast<std::size_t>(2 * k + 1)]));
        }
      }
      rec.max_residual = worst;
      rec.pass = worst <= tol.residual_tol;
    } catch (const SingularParameterError& e) {
      rec.notes = std::string("skipped: ") + e.what();
      rec.pass = true;
    }
    report.add(std::move(rec));
  }
}

void run_qdiag_isotropic_checks(Report& report, double mu, int k_max) {
  CheckRecord rec;
  rec.id = "qdiag/isotropic-limit";
  rec.params = "mu=" + std::to_string(mu);
  double worst = 0.0;
  try {
    for (int k = 0; k <= k_max; ++k) {
      const OscParams pe(2 * k, mu, mu);
      const CoeffPair ge = solve_recurrence_even(k, pe);
      const CoeffPair ie = isotropic_coeffs(k, mu, Parity::Even);
      const OscParams po(2 * k + 1, mu, mu);
      const CoeffPair go = solve_recurrence_odd(k, po);
      const CoeffPair io = isotropic_coeffs(k, mu, Parity::Odd);
      for (int n = 0; n <= k; ++n) {
        worst = std::max(worst, std::abs(ge.a_seq[static_cast<std::size_t>(n)] -
                                         ie.a_seq[static_cast<std::size_t>(n)]));
        worst = std::max(worst, std::abs(ge.b_seq[static_cast<std::size_t>(n)] -
                                         ie.b_seq[static_cast<std::size_t>(n)]));
        worst = std::max(worst, std::abs(go.a_seq[static_cast<std::size_t>(n)] -
                                         io.a_seq[static_cast<std::size_t>(n)]));
        worst = std::max(worst, std::abs(go.b_seq[static_cast<std::size_t>(n)] -
                                         io.b_seq[static_cast<std::size_t>(n)]));
      }
    }
    rec.max_residual = worst;
    rec.pass = worst <= 1e-10;
  } catch (const SingularParameterError& e) {
    rec.notes = std::string("skipped: ") + e.what();
    rec.pass = true;
  }
  report.add(std::move(rec));
}

// ---- j2rep checks ---------------------------------------------------------

Matrix gauge_conjugation_matrix(const OscParams& params, const GaugeSeq& gauge) {
  const int n = params.level;
  Matrix g = Matrix::Zero(n + 1, n + 1);
  if (n % 2 == 1) {
    const int m = (n - 1) / 2;
    double gamma = 1.0;
    for (int k = 0; k <= m; ++k) {
      if (k >= 1) gamma /= gauge.at(k);
      g(2 * k, 2 * k) = gamma;
      g(2 * k + 1, 2 * k + 1) = gamma;
    }
  } else {
    const int m = n / 2;
    double gamma = 1.0;
    g(0, 0) = gamma;
    for (int k = 1; k <= m; ++k) {
      gamma /= gauge.at(k);
      g(2 * k - 1, 2 * k - 1) = gamma;
      g(2 * k, 2 * k) = gamma;
    }
  }
  return g;
}

bool is_block_tridiagonal_j2basis(const Matrix& m, int level) {
  auto block_of = [&](int idx) {
    return (level % 2 == 1) ? idx / 2 : ((idx == 0) ? 0 : (idx + 1) / 2);
  };
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (std::abs(block_of(static_cast<int>(i)) -
                   block_of(static_cast<int>(j))) > 1) {
        if (m(i, j) != Complex(0.0, 0.0)) return false;
      }
    }
  }
  return true;
}

void run_j2rep_checks(Report& report, const OscParams& params,
                      const Tolerances& tol, std::mt19937& rng) {
  const std::string tag = param_tag(params);
  const int m = (params.level % 2 == 0) ? params.level / 2
                                        : (params.level - 1) / 2;

  std::vector<GaugeSeq> gauges;
  gauges.push_back(GaugeSeq::ones(m));
  std::uniform_real_distribution<double> dist(0.25, 2.0);
  for (int trial = 0; trial < 3; ++trial) {
    GaugeSeq g = GaugeSeq::ones(m);
    for (double& v : g.values) v = dist(rng);
    gauges.push_back(std::move(g));
  }

  double worst_rel = 0.0;
  std::string worst_note;
  bool tridiag = true;
  for (const auto& gauge : gauges) {
    const GeneratorSet gs = build_j3_j2basis(params, gauge, tol);
    const RelationResiduals r = check_sd2_relations(gs);
    if (r.max() > worst_rel) {
      worst_rel = r.max();
      worst_note = r.breakdown();
    }
    tridiag = tridiag && is_block_tridiagonal_j2basis(gs.J3, params.level);
  }

  CheckRecord rec;
  rec.id = "j2rep/sd2-relations";
  rec.params = tag;
  rec.max_residual = worst_rel;
  rec.pass = worst_rel <= tol.residual_tol;
  if (!rec.pass) rec.notes = worst_note;
  report.add(std::move(rec));

  CheckRecord rec2;
  rec2.id = "j2rep/block-tridiagonal";
  rec2.params = tag;
  rec2.pass = tridiag;
  rec2.max_residual = tridiag ? 0.0 : 1.0;
  report.add(std::move(rec2));

  // gauge covariance against the unit-gauge conjugation
  {
    const GeneratorSet unit = build_j3_j2basis(params, GaugeSeq::ones(m), tol);
    const GaugeSeq& gauge = gauges.back();
    const GeneratorSet gauged = build_j3_j2basis(params, gauge, tol);
    const Matrix g = gauge_conjugation_matrix(params, gauge);
    const Matrix conj = g * unit.J3 * g.inverse();
    CheckRecord rec3;
    rec3.id = "j2rep/gauge-covariance";
    rec3.params = tag;
    rec3.max_residual = rel_residual(gauged.J3, conj);
    rec3.pass = rec3.max_residual <= 1e-12;
    report.add(std::move(rec3));
  }

  // spectrum equivalence with the Cartesian J3 lattice (reported)
  {
    const GeneratorSet unit = build_j3_j2basis(params, GaugeSeq::ones(m), tol);
    CheckRecord rec4;
    rec4.id = "j2rep/j3-spectrum";
    rec4.params = tag;
    try {
      const J3SpectrumReport sr = j3_spectrum_check(unit, tol);
      rec4.max_residual = std::max(sr.max_deviation, sr.max_imag);
      rec4.pass = sr.match;
      if (!sr.match) {
        rec4.notes =
            "per-relation residuals: " + check_sd2_relations(unit).breakdown();
      }
    } catch (const std::exception& e) {
      rec4.pass = false;
      rec4.max_residual = std::numeric_limits<double>::infinity();
      rec4.notes = e.what();
    }
    report.add(std::move(rec4));
  }
}

// ---- negative controls ----------------------------------------------------

void run_negative_controls(Report& report, const Tolerances& tol) {
  const OscParams params(4, 0.3, 0.7);
  const GeneratorSet base = build_circular(params, BasisOrdering::CircularB2);
  const std::vector<std::string> names = {"J1", "J2", "J3", "Rx", "Ry", "H"};
  bool all_detected = true;
  std::string missed;
  for (const auto& name : names) {
    GeneratorSet gs = base;
    Matrix& target = (name == "J1")   ? gs.J1
                     : (name == "J2") ? gs.J2
                     : (name == "J3") ? gs.J3
                     : (name == "Rx") ? gs.Rx
                     : (name == "Ry") ? gs.Ry
                                      : gs.H;
    target(0, 0) += 1e-3;
    const RelationResiduals r = check_sd2_relations(gs);
    if (r.max() <= tol.residual_tol) {
      all_detected = false;
      missed += name + " ";
    }
  }
  CheckRecord rec;
  rec.id = "verify/negative-control";
  rec.params = param_tag(params);
  rec.pass = all_detected;
  rec.max_residual = all_detected ? 1.0 : 0.0;
  rec.notes = all_detected ? "all perturbations detected"
                           : ("undetected perturbations: " + missed);
  report.add(std::move(rec));
}

}  // namespace

Report run_suite(int n_max, const std::vector<std::pair<double, double>>& grid,
                 const Tolerances& tol) {
  if (n_max < 1) throw std::invalid_argument("run_suite: n_max must be >= 1");
  tol.validate();
  for (const auto& [mx, my] : grid) {
    if (!(mx > -0.5) || !(my > -0.5)) {
      throw std::invalid_argument(
          "run_suite: grid point outside the (-1/2, inf) domain");
    }
  }

  Report report;
  report.tol = tol;
  report.n_max = n_max;
  report.grid = grid;
  report.seed = 20240915u;
  std::mt19937 rng(report.seed);

  for (const auto& [mx, my] : grid) {
    for (int n = 1; n <= n_max; ++n) {
      const OscParams params(n, mx, my);
      if (n <= std::min(n_max, 10)) run_fock_state_checks(report, n, params);
      if (n >= 1 && n <= std::min(n_max, 8)) {
        run_fock_circular_checks(report, n, params, tol);
      }
      run_repmat_checks(report, params, tol);
      run_interbasis_checks(report, params, tol);
      if (n <= std::min(n_max, 11)) {
        run_qdiag_residual_checks(report, params, tol);
        if (!params.isotropic(tol.degeneracy_tol)) {
          run_j2rep_checks(report, params, tol, rng);
        } else {
          CheckRecord rec;
          rec.id = "j2rep/excluded";
          rec.params = param_tag(params);
          rec.pass = true;
          rec.notes = "mu_x = mu_y excluded by the J2-eigenbasis precondition";
          report.add(std::move(rec));
        }
      }
    }
    run_qdiag_coefficient_checks(report, mx, my, 6, tol);
    if (mx == my) run_qdiag_isotropic_checks(report, mx, 6);
  }

  // seeded random off-grid sample
  {
    std::uniform_real_distribution<double> dist(-0.45, 1.5);
    for (int trial = 0; trial < 3; ++trial) {
      const double mx = dist(rng);
      const double my = dist(rng);
      for (int n : {3, 4}) {
        if (n > n_max) continue;
        const OscParams params(n, mx, my);
        run_repmat_checks(report, params, tol);
        run_qdiag_residual_checks(report, params, tol);
      }
    }
  }

  run_negative_controls(report, tol);
  return report;
}

}  // namespace sd2
