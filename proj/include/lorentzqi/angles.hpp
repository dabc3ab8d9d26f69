#pragma once

#include <cmath>
#include <cstddef>

namespace lorentzqi {

/// Per-particle Wigner rotation angles in radians. Any finite value is
/// accepted; the rotation has period 4*pi.
struct WignerAngles {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double omega3 = 0.0;

  constexpr double operator[](std::size_t i) const noexcept {
    return i == 0 ? omega1 : (i == 1 ? omega2 : omega3);
  }
  constexpr WignerAngles operator-() const noexcept { return {-omega1, -omega2, -omega3}; }
  friend constexpr WignerAngles operator+(const WignerAngles& a, const WignerAngles& b) noexcept {
    return {a.omega1 + b.omega1, a.omega2 + b.omega2, a.omega3 + b.omega3};
  }
  bool finite() const noexcept {
    return std::isfinite(omega1) && std::isfinite(omega2) && std::isfinite(omega3);
  }
};

}  // namespace lorentzqi
