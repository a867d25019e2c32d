#include "nhscat/lattice.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nhscat/errors.hpp"

namespace nhscat {

EnergyAngle::EnergyAngle(double phi) : phi_(phi) {
  if (!(phi > 0.0 && phi < std::numbers::pi)) {
    throw BandError("Bloch angle " + std::to_string(phi) +
                    " outside the open band (0, pi)");
  }
}

SiteWindow::SiteWindow(int half_width, double spacing)
    : half_width_(half_width), spacing_(spacing) {
  if (half_width < 1) {
    throw WindowError("site window half width must be >= 1");
  }
  if (!(spacing > 0.0)) {
    throw DomainError("lattice spacing must be positive");
  }
}

std::size_t SiteWindow::index(int site) const {
  if (!contains(site)) {
    throw WindowError("site " + std::to_string(site) +
                      " outside window of half width " +
                      std::to_string(half_width_));
  }
  return static_cast<std::size_t>(site + half_width_);
}

WaveSample::WaveSample(SiteWindow window, std::vector<complex> values)
    : window_(window), values_(std::move(values)) {
  if (values_.size() != window_.size()) {
    throw WindowError("wave sample length does not match its window");
  }
}

double energy_from_phi(EnergyAngle phi, double h) {
  if (!(h > 0.0)) throw DomainError("lattice spacing must be positive");
  // 2 - 2cos(phi) == 4 sin^2(phi/2), without the cancellation at small phi.
  double const s = std::sin(0.5 * phi.value());
  return 4.0 * s * s / (h * h);
}

EnergyAngle phi_from_energy(double energy, double h) {
  if (!(h > 0.0)) throw DomainError("lattice spacing must be positive");
  double const x = 0.25 * (energy * (h * h));  // sin^2(phi/2)
  if (!(x > 0.0 && x < 1.0)) {
    throw BandError("energy " + std::to_string(energy) +
                    " outside the lattice band (0, 4/h^2)");
  }
  // Take asin on whichever half keeps its argument away from 1.
  if (x <= 0.5) return EnergyAngle(2.0 * std::asin(std::sqrt(x)));
  return EnergyAngle(std::numbers::pi - 2.0 * std::asin(std::sqrt(1.0 - x)));
}

complex left_wave(int site, EnergyAngle phi, complex reflection) {
  double const arg = site * phi.value();
  return std::polar(1.0, arg) + reflection * std::polar(1.0, -arg);
}

complex right_wave(int site, EnergyAngle phi, complex transmission) {
  return transmission * std::polar(1.0, site * phi.value());
}

complex asymptotic_left(int m, EnergyAngle phi, complex reflection) {
  if (m < 1) throw DomainError("asymptotic index m must be >= 1");
  return left_wave(-m, phi, reflection);
}

complex asymptotic_right(int m, EnergyAngle phi, complex transmission) {
  if (m < 1) throw DomainError("asymptotic index m must be >= 1");
  return right_wave(m, phi, transmission);
}

}  // namespace nhscat
