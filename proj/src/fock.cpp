#include "sd2/fock.hpp"

#include "sd2/specfun.hpp"

namespace sd2 {

bool is_reflection(OperatorId op) {
  return op == OperatorId::ReflX || op == OperatorId::ReflY;
}

bool acts_on_cartesian(OperatorId op) {
  switch (op) {
    case OperatorId::APlusX:
    case OperatorId::AMinusX:
    case OperatorId::APlusY:
    case OperatorId::AMinusY:
    case OperatorId::ReflX:
    case OperatorId::ReflY:
      return true;
    default:
      return false;
  }
}

bool acts_on_circular(OperatorId op) {
  switch (op) {
    case OperatorId::APlusL:
    case OperatorId::AMinusL:
    case OperatorId::APlusR:
    case OperatorId::AMinusR:
    case OperatorId::ReflX:
    case OperatorId::ReflY:
      return true;
    default:
      return false;
  }
}

CartesianSum apply_cartesian(OperatorId op, const CartesianState& s,
                             const OscParams& params) {
  if (!acts_on_cartesian(op)) {
    throw std::invalid_argument(
        "apply_cartesian: circular operator applied to Cartesian state");
  }
  CartesianSum out;
  switch (op) {
    case OperatorId::ReflX:
      out.add((s.nx % 2 == 0) ? 1.0 : -1.0, s);
      break;
    case OperatorId::ReflY:
      out.add((s.ny % 2 == 0) ? 1.0 : -1.0, s);
      break;
    case OperatorId::APlusX:
      out.add(1.0, {s.nx + 1, s.ny});
      break;
    case OperatorId::APlusY:
      out.add(1.0, {s.nx, s.ny + 1});
      break;
    case OperatorId::AMinusX:
      if (s.nx > 0) out.add(mu_number(s.nx, params.mu_x), {s.nx - 1, s.ny});
      break;
    case OperatorId::AMinusY:
      if (s.ny > 0) out.add(mu_number(s.ny, params.mu_y), {s.nx, s.ny - 1});
      break;
    default:
      break;
  }
  out.canonicalize();
  return out;
}

namespace {

// Shared mu-weighted spreading term of the circular lowering operators.
// sign_y = +1 for the left lowering operator, -1 for the right one.
void add_lowering_tail(CircularSum& out, const CircularState& s,
                       const OscParams& params, double sign_y) {
  if (s.nl == s.nr) return;
  const int lo = std::min(s.nl, s.nr);
  const int hi = std::max(s.nl, s.nr);
  const double overall = (s.nl > s.nr) ? 1.0 : -1.0;
  for (int j = lo; j <= hi - 1; ++j) {
    const double parity = ((s.nr + j) % 2 == 0) ? 1.0 : -1.0;
    const double w = parity * params.mu_x + sign_y * params.mu_y;
    out.add(overall * w, {s.nl + s.nr - j - 1, j});
  }
}

}  // namespace

CircularSum apply_circular(OperatorId op, const CircularState& s,
                           const OscParams& params) {
  if (!acts_on_circular(op)) {
    throw std::invalid_argument(
        "apply_circular: Cartesian operator applied to circular state");
  }
  CircularSum out;
  switch (op) {
    case OperatorId::ReflX:
      out.add(((s.nl + s.nr) % 2 == 0) ? 1.0 : -1.0, {s.nr, s.nl});
      break;
    case OperatorId::ReflY:
      out.add(1.0, {s.nr, s.nl});
      break;
    case OperatorId::APlusL:
      out.add(1.0, {s.nl + 1, s.nr});
      break;
    case OperatorId::APlusR:
      out.add(1.0, {s.nl, s.nr + 1});
      break;
    case OperatorId::AMinusL:
      if (s.nl > 0) out.add(static_cast<double>(s.nl), {s.nl - 1, s.nr});
      add_lowering_tail(out, s, params, +1.0);
      break;
    case OperatorId::AMinusR:
      if (s.nr > 0) out.add(static_cast<double>(s.nr), {s.nl, s.nr - 1});
      add_lowering_tail(out, s, params, -1.0);
      break;
    default:
      break;
  }
  out.canonicalize();
  return out;
}

namespace {

template <class State, class Apply>
StateSum<State> apply_to_sum(OperatorId op, const StateSum<State>& s,
                             const OscParams& params, Apply apply_one) {
  StateSum<State> out;
  for (const auto& term : s.terms) {
    StateSum<State> part = apply_one(op, term.state, params);
    for (const auto& t : part.terms) out.add(term.coeff * t.coeff, t.state);
  }
  out.canonicalize();
  return out;
}

template <class State, class Apply>
StateSum<State> word_impl(const std::vector<OperatorId>& ops, const State& s,
                          const OscParams& params, Apply apply_one) {
  StateSum<State> acc;
  acc.add(1.0, s);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    acc = apply_to_sum(*it, acc, params, apply_one);
  }
  return acc;
}

}  // namespace

CartesianSum apply_cartesian(OperatorId op, const CartesianSum& s,
                             const OscParams& params) {
  return apply_to_sum(
      op, s, params,
      [](OperatorId o, const CartesianState& st, const OscParams& p) {
        return apply_cartesian(o, st, p);
      });
}

CircularSum apply_circular(OperatorId op, const CircularSum& s,
                           const OscParams& params) {
  return apply_to_sum(
      op, s, params,
      [](OperatorId o, const CircularState& st, const OscParams& p) {
        return apply_circular(o, st, p);
      });
}

CartesianSum apply_word(const std::vector<OperatorId>& ops,
                        const CartesianState& s, const OscParams& params) {
  return word_impl(ops, s, params,
                   [](OperatorId o, const CartesianState& st,
                      const OscParams& p) { return apply_cartesian(o, st, p); });
}

CircularSum apply_word(const std::vector<OperatorId>& ops,
                       const CircularState& s, const OscParams& params) {
  return word_impl(ops, s, params,
                   [](OperatorId o, const CircularState& st,
                      const OscParams& p) { return apply_circular(o, st, p); });
}

}  // namespace sd2
