#ifndef SD2_OSCPARAMS_HPP
#define SD2_OSCPARAMS_HPP

#include <stdexcept>
#include <string>

namespace sd2 {

/// Representation label (N, mu_x, mu_y) of the planar Dunkl oscillator.
/// Irreducibility requires mu_x, mu_y > -1/2.
struct OscParams {
  int level = 0;      // total excitation number N
  double mu_x = 0.0;  // reflection weight in x
  double mu_y = 0.0;  // reflection weight in y

  OscParams() = default;
  OscParams(int n, double mux, double muy) : level(n), mu_x(mux), mu_y(muy) {
    if (n < 0) throw std::invalid_argument("OscParams: level must be >= 0");
    if (!(mux > -0.5) || !(muy > -0.5)) {
      throw std::invalid_argument(
          "OscParams: mu_x and mu_y must lie in (-1/2, inf), got mu_x = " +
          std::to_string(mux) + ", mu_y = " + std::to_string(muy));
    }
  }

  double zeta() const { return mu_x + mu_y; }
  double xi() const { return mu_x - mu_y; }
  double energy() const { return level + mu_x + mu_y + 1.0; }

  bool isotropic(double tol) const {
    return std::abs(mu_x - mu_y) <= tol;
  }
};

}  // namespace sd2

#endif  // SD2_OSCPARAMS_HPP
