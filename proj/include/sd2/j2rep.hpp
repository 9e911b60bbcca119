#ifndef SD2_J2REP_HPP
#define SD2_J2REP_HPP

#include <vector>

#include "sd2/repmat.hpp"

namespace sd2 {

/// Free nonzero scalars parametrizing the similarity freedom of J3 in the
/// J2 eigenbasis (beta_k for N odd, alpha_k for N even), indexed 1..m.
struct GaugeSeq {
  std::vector<double> values;

  static GaugeSeq ones(int m) {
    return GaugeSeq{std::vector<double>(static_cast<std::size_t>(std::max(m, 0)), 1.0)};
  }

  double at(int k) const {  // 1-based
    return values.at(static_cast<std::size_t>(k) - 1);
  }
};

/// Generators in the J2 eigenbasis: J2 diagonal with the closed-form
/// eigenvalues, reflections in their block form, J3 assembled from the
/// block-tridiagonal matrix-element formulas, J1 := -i [J2, J3].
/// Requires mu_x != mu_y (within degeneracy_tol) and a nonzero gauge.
GeneratorSet build_j3_j2basis(const OscParams& params, const GaugeSeq& gauge,
                              const Tolerances& tol = Tolerances{});

struct J3SpectrumReport {
  std::vector<double> expected;  // Cartesian lattice n + (xi - N)/2, sorted
  std::vector<double> computed;  // dense eigenvalues of the built J3, sorted
  double max_deviation = 0.0;
  double max_imag = 0.0;
  bool match = false;
};

/// Compares the spectrum of the block-tridiagonal J3 against the Cartesian
/// J3 lattice; reports rather than asserts.
J3SpectrumReport j3_spectrum_check(const GeneratorSet& gs,
                                   const Tolerances& tol = Tolerances{});

}  // namespace sd2

#endif  // SD2_J2REP_HPP
