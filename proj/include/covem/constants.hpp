#pragma once

#include <stdexcept>
#include <string>

namespace covem {

/// Physical constants used throughout. The vacuum permeability is derived
/// from c and eps0 so that mu0 * eps0 * c^2 == 1 holds by construction.
class Constants {
 public:
  Constants(double c, double eps0) : c_(c), eps0_(eps0) {
    if (!(c > 0.0) || !(eps0 > 0.0)) {
      throw std::invalid_argument("Constants: c and eps0 must be positive");
    }
  }

  /// SI values (CODATA 2018 eps0).
  static Constants si() { return Constants(299792458.0, 8.8541878128e-12); }
  /// c = eps0 = 1.
  static Constants natural() { return Constants(1.0, 1.0); }

  double c() const { return c_; }
  double eps0() const { return eps0_; }
  double mu0() const { return 1.0 / (eps0_ * c_ * c_); }

  bool operator==(const Constants&) const = default;

 private:
  double c_;
  double eps0_;
};

}  // namespace covem
