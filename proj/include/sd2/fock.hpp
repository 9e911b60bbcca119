#ifndef SD2_FOCK_HPP
#define SD2_FOCK_HPP

#include <algorithm>
#include <compare>
#include <vector>

#include "sd2/oscparams.hpp"
#include "sd2/types.hpp"

namespace sd2 {

struct CartesianState {
  int nx = 0;
  int ny = 0;
  auto operator<=>(const CartesianState&) const = default;
  int total() const { return nx + ny; }
};

struct CircularState {
  int nl = 0;
  int nr = 0;
  auto operator<=>(const CircularState&) const = default;
  int total() const { return nl + nr; }
};

enum class OperatorId {
  APlusX,
  AMinusX,
  APlusY,
  AMinusY,
  APlusL,
  AMinusL,
  APlusR,
  AMinusR,
  ReflX,
  ReflY,
};

bool is_reflection(OperatorId op);
bool acts_on_cartesian(OperatorId op);
bool acts_on_circular(OperatorId op);

/// Formal complex combination of basis states.  Canonical form: terms sorted
/// lexicographically on the state labels, duplicates merged, zero
/// coefficients dropped.  Merging cancels bitwise-opposite contributions
/// before accumulating, so structurally zero entries come out exactly zero.
template <class State>
struct StateSum {
  struct Term {
    Complex coeff;
    State state;
  };
  std::vector<Term> terms;

  void add(Complex c, const State& s) { terms.push_back({c, s}); }

  void canonicalize() {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return a.state < b.state;
    });
    std::vector<Term> merged;
    std::size_t i = 0;
    while (i < terms.size()) {
      std::size_t j = i;
      while (j < terms.size() && terms[j].state == terms[i].state) ++j;
      // exact +/- pair cancellation within the group
      std::vector<Complex> kept;
      for (std::size_t t = i; t < j; ++t) {
        const Complex c = terms[t].coeff;
        auto match = std::find_if(kept.begin(), kept.end(), [&](Complex k) {
          return k == -c;
        });
        if (match != kept.end()) {
          kept.erase(match);
        } else {
          kept.push_back(c);
        }
      }
      Complex sum = 0.0;
      for (Complex c : kept) sum += c;
      if (sum != Complex(0.0, 0.0)) merged.push_back({sum, terms[i].state});
      i = j;
    }
    terms = std::move(merged);
  }
};

using CartesianSum = StateSum<CartesianState>;
using CircularSum = StateSum<CircularState>;

/// Ladder/reflection action on a Cartesian basis state.
CartesianSum apply_cartesian(OperatorId op, const CartesianState& s,
                             const OscParams& params);

/// Ladder/reflection action on a circular basis state; lowering operators
/// spread over the whole level below.
CircularSum apply_circular(OperatorId op, const CircularState& s,
                           const OscParams& params);

CartesianSum apply_cartesian(OperatorId op, const CartesianSum& s,
                             const OscParams& params);
CircularSum apply_circular(OperatorId op, const CircularSum& s,
                           const OscParams& params);

/// Left-to-right operator word; the rightmost operator acts first.
CartesianSum apply_word(const std::vector<OperatorId>& ops,
                        const CartesianState& s, const OscParams& params);
CircularSum apply_word(const std::vector<OperatorId>& ops,
                       const CircularState& s, const OscParams& params);

}  // namespace sd2

#endif  // SD2_FOCK_HPP
