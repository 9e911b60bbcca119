#ifndef SD2_INTERBASIS_HPP
#define SD2_INTERBASIS_HPP

#include <string>

#include "sd2/oscparams.hpp"
#include "sd2/types.hpp"

namespace sd2 {

/// Circular(B1) -> Cartesian transition matrix.  Column j is the J3
/// eigenvector with eigenvalue j + (xi - N)/2, normalized to unit Euclidean
/// norm with positive leading entry.  The coefficient lattice is
/// mu-independent.
struct TransitionMatrix {
  RealMatrix T;
  std::string column_convention;
  double condition_number = 0.0;
};

/// Normalized Krawtchouk lattice value P_n(j) = K_n(j; N) / n! obeying
///   (2j - N) P_n = (n+1) P_{n+1} + (N - n + 1) P_{n-1},  P_0 = 1.
double transition_coeff(int n, int j, int level);

TransitionMatrix build_transition(const OscParams& params);

}  // namespace sd2

#endif  // SD2_INTERBASIS_HPP
