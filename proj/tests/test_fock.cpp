#include <doctest.h>

#include <cmath>
#include <map>

#include "sd2/fock.hpp"
#include "sd2/repmat.hpp"

using namespace sd2;

namespace {

using Op = OperatorId;

Complex coeff_of(const CircularSum& s, int nl, int nr) {
  for (const auto& t : s.terms) {
    if (t.state.nl == nl && t.state.nr == nr) return t.coeff;
  }
  return 0.0;
}

template <class Sum>
double diff_norm(const Sum& a, const Sum& b) {
  double m = 0.0;
  for (const auto& t : a.terms) m = std::max(m, std::abs(t.coeff));
  Sum d;
  for (const auto& t : a.terms) d.add(t.coeff, t.state);
  for (const auto& t : b.terms) d.add(-t.coeff, t.state);
  d.canonicalize();
  double out = 0.0;
  for (const auto& t : d.terms) out = std::max(out, std::abs(t.coeff));
  return out;
}

}  // namespace

TEST_CASE("Cartesian ladder actions") {
  const OscParams params(3, 0.5, 0.2);

  const auto vac = apply_cartesian(Op::AMinusX, CartesianState{0, 2}, params);
  CHECK(vac.terms.empty());

  // [3]_{0.5} = 4
  const auto low = apply_cartesian(Op::AMinusX, CartesianState{3, 0}, params);
  REQUIRE(low.terms.size() == 1);
  CHECK(low.terms[0].coeff == Complex(4.0, 0.0));
  CHECK(low.terms[0].state == CartesianState{2, 0});

  const auto refl = apply_cartesian(Op::ReflX, CartesianState{1, 2}, params);
  REQUIRE(refl.terms.size() == 1);
  CHECK(refl.terms[0].coeff == Complex(-1.0, 0.0));

  const auto raised = apply_cartesian(Op::APlusY, CartesianState{1, 2}, params);
  CHECK(raised.terms[0].state == CartesianState{1, 3});

  CHECK_THROWS_AS(apply_cartesian(Op::APlusL, CartesianState{0, 0}, params),
                  std::invalid_argument);
}

TEST_CASE("circular ladder actions") {
  const OscParams params(4, 0.3, 0.7);

  // balanced case: no mu tail
  const auto bal = apply_circular(Op::AMinusL, CircularState{2, 2}, params);
  REQUIRE(bal.terms.size() == 1);
  CHECK(bal.terms[0].coeff == Complex(2.0, 0.0));
  CHECK(bal.terms[0].state == CircularState{1, 2});

  const auto swap = apply_circular(Op::ReflY, CircularState{1, 2}, params);
  REQUIRE(swap.terms.size() == 1);
  CHECK(swap.terms[0].coeff == Complex(1.0, 0.0));
  CHECK(swap.terms[0].state == CircularState{2, 1});

  const auto sgn = apply_circular(Op::ReflX, CircularState{1, 2}, params);
  CHECK(sgn.terms[0].coeff == Complex(-1.0, 0.0));

  // A_-^L |2,0> = 3|1,0> + 0.4|0,1> at (mu_x, mu_y) = (0.3, 0.7)
  const auto spread = apply_circular(Op::AMinusL, CircularState{2, 0}, params);
  CHECK(coeff_of(spread, 1, 0) == Complex(3.0, 0.0));
  CHECK(std::abs(coeff_of(spread, 0, 1) - Complex(0.4, 0.0)) < 1e-15);

  // lowering from n_L = 0 still spreads over the level below
  const auto zero_l = apply_circular(Op::AMinusL, CircularState{0, 2}, params);
  CHECK(!zero_l.terms.empty());
  for (const auto& t : zero_l.terms) CHECK(t.state.total() == 1);

  CHECK_THROWS_AS(apply_circular(Op::APlusX, CircularState{0, 0}, params),
                  std::invalid_argument);
}

TEST_CASE("operator words compose right to left") {
  const OscParams params(2, 0.4, 0.1);
  const CartesianState s{1, 1};

  const auto identity = apply_word({}, s, params);
  REQUIRE(identity.terms.size() == 1);
  CHECK(identity.terms[0].coeff == Complex(1.0, 0.0));

  // [A_-^x, A_+^x] = I + 2 mu_x Rx on every state of a small module
  for (int nx = 0; nx <= 2; ++nx) {
    for (int ny = 0; ny + nx <= 2; ++ny) {
      const CartesianState st{nx, ny};
      CartesianSum lhs;
      for (const auto& t :
           apply_word({Op::AMinusX, Op::APlusX}, st, params).terms) {
        lhs.add(t.coeff, t.state);
      }
      for (const auto& t :
           apply_word({Op::APlusX, Op::AMinusX}, st, params).terms) {
        lhs.add(-t.coeff, t.state);
      }
      lhs.canonicalize();
      CartesianSum rhs;
      rhs.add(1.0, st);
      for (const auto& t : apply_cartesian(Op::ReflX, st, params).terms) {
        rhs.add(2.0 * params.mu_x * t.coeff, t.state);
      }
      rhs.canonicalize();
      CHECK(diff_norm(lhs, rhs) < 1e-14);
    }
  }

  // Rx A_+^L = -A_+^R Rx on circular states
  for (int nl = 0; nl <= 2; ++nl) {
    for (int nr = 0; nr + nl <= 2; ++nr) {
      const CircularState st{nl, nr};
      const auto lhs = apply_word({Op::ReflX, Op::APlusL}, st, params);
      auto rhs = apply_word({Op::APlusR, Op::ReflX}, st, params);
      for (auto& t : rhs.terms) t.coeff = -t.coeff;
      CHECK(diff_norm(lhs, rhs) == 0.0);
    }
  }
}

namespace {

// Independent conjugation oracle: expand circular states over the Cartesian
// module via the left/right linear map and compare operator actions.
using LinearCombo = std::vector<std::pair<Complex, Op>>;

LinearCombo left_right_split(Op op) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (op) {
    case Op::APlusL:
      return {{s, Op::APlusX}, {Complex(0.0, -s), Op::APlusY}};
    case Op::APlusR:
      return {{s, Op::APlusX}, {Complex(0.0, s), Op::APlusY}};
    case Op::AMinusL:
      return {{s, Op::AMinusX}, {Complex(0.0, s), Op::AMinusY}};
    case Op::AMinusR:
      return {{s, Op::AMinusX}, {Complex(0.0, -s), Op::AMinusY}};
    default:
      return {{1.0, op}};
  }
}

CartesianSum apply_split(const LinearCombo& combo, const CartesianSum& s,
                         const OscParams& params) {
  CartesianSum out;
  for (const auto& [c, op] : combo) {
    for (const auto& t : s.terms) {
      for (const auto& r : apply_cartesian(op, t.state, params).terms) {
        out.add(c * t.coeff * r.coeff, r.state);
      }
    }
  }
  out.canonicalize();
  return out;
}

CartesianSum expand_circular(const CircularState& st, const OscParams& params) {
  CartesianSum acc;
  acc.add(1.0, CartesianState{0, 0});
  for (int i = 0; i < st.nr; ++i) {
    acc = apply_split(left_right_split(Op::APlusR), acc, params);
  }
  for (int i = 0; i < st.nl; ++i) {
    acc = apply_split(left_right_split(Op::APlusL), acc, params);
  }
  return acc;
}

}  // namespace

TEST_CASE("circular actions agree with the Cartesian conjugation oracle") {
  for (const auto& [mx, my] : {std::pair{0.3, 0.7}, std::pair{-0.4, 1.5},
                              std::pair{0.0, 0.0}}) {
    for (int level = 1; level <= 8; ++level) {
      const OscParams params(level, mx, my);
      for (int nl = 0; nl <= level; ++nl) {
        const CircularState st{nl, level - nl};
        const CartesianSum expanded = expand_circular(st, params);
        for (Op op : {Op::AMinusL, Op::AMinusR, Op::ReflX, Op::ReflY}) {
          // route 1: circular action, then expansion of each term
          CartesianSum via_circular;
          for (const auto& t : apply_circular(op, st, params).terms) {
            for (const auto& e : expand_circular(t.state, params).terms) {
              via_circular.add(t.coeff * e.coeff, e.state);
            }
          }
          via_circular.canonicalize();
          // route 2: Cartesian action on the expansion
          const CartesianSum via_cartesian =
              apply_split(left_right_split(op), expanded, params);
          CHECK(diff_norm(via_circular, via_cartesian) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("circular lowering lands exactly one level down") {
  const OscParams params(6, 1.5, -0.4);
  for (int nl = 0; nl <= 6; ++nl) {
    const CircularState st{nl, 6 - nl};
    for (Op op : {Op::AMinusL, Op::AMinusR}) {
      for (const auto& t : apply_circular(op, st, params).terms) {
        CHECK(t.state.total() == 5);
      }
    }
  }
}

TEST_CASE("StateSum canonicalization merges and cancels exactly") {
  CartesianSum s;
  s.add(0.25, {1, 0});
  s.add(Complex(0.0, 1.0), {0, 1});
  s.add(-0.25, {1, 0});
  s.add(Complex(0.0, -1.0), {0, 1});
  s.add(2.0, {2, 2});
  s.canonicalize();
  REQUIRE(s.terms.size() == 1);
  CHECK(s.terms[0].state == CartesianState{2, 2});
}
