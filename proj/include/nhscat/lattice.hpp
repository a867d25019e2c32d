#pragma once

#include <complex>
#include <span>
#include <vector>

namespace nhscat {

using complex = std::complex<double>;

/// Bloch angle phi in the open interval (0, pi).
///
/// Lattice energies are E = (2 - 2 cos phi) / h^2 and the free plane waves
/// are exp(+-i k phi). The band edges 0 and pi are rejected.
class EnergyAngle {
 public:
  explicit EnergyAngle(double phi);

  [[nodiscard]] double value() const noexcept { return phi_; }

  friend bool operator==(EnergyAngle, EnergyAngle) = default;

 private:
  double phi_;
};

/// Symmetric window of lattice sites k in [-half_width, half_width].
class SiteWindow {
 public:
  explicit SiteWindow(int half_width, double spacing = 1.0);

  [[nodiscard]] int half_width() const noexcept { return half_width_; }
  [[nodiscard]] double spacing() const noexcept { return spacing_; }
  [[nodiscard]] int first() const noexcept { return -half_width_; }
  [[nodiscard]] int last() const noexcept { return half_width_; }
  [[nodiscard]] std::size_t size() const noexcept {
    return static_cast<std::size_t>(2 * half_width_ + 1);
  }
  [[nodiscard]] bool contains(int site) const noexcept {
    return site >= -half_width_ && site <= half_width_;
  }
  /// Rows at the two window ends miss an outside neighbour.
  [[nodiscard]] bool is_edge(int site) const noexcept {
    return site == -half_width_ || site == half_width_;
  }
  /// Storage offset of a site; throws WindowError outside the window.
  [[nodiscard]] std::size_t index(int site) const;
  [[nodiscard]] double coordinate(int site) const noexcept {
    return site * spacing_;
  }

  friend bool operator==(const SiteWindow&, const SiteWindow&) = default;

 private:
  int half_width_;
  double spacing_;
};

/// Discrete wavefunction psi_k sampled over a site window.
class WaveSample {
 public:
  WaveSample(SiteWindow window, std::vector<complex> values);

  [[nodiscard]] const SiteWindow& window() const noexcept { return window_; }
  [[nodiscard]] std::span<const complex> values() const& noexcept {
    return values_;
  }
  std::span<const complex> values() const&& = delete;
  [[nodiscard]] complex at(int site) const {
    return values_[window_.index(site)];
  }

 private:
  SiteWindow window_;
  std::vector<complex> values_;
};

/// E = (2 - 2 cos phi) / h^2. Throws DomainError for h <= 0.
double energy_from_phi(EnergyAngle phi, double h);

/// Inverse of energy_from_phi. Throws BandError unless 0 < E h^2 < 4.
EnergyAngle phi_from_energy(double energy, double h);

/// Left-side wave e^{i k phi} + R e^{-i k phi} at any site k.
complex left_wave(int site, EnergyAngle phi, complex reflection);

/// Right-side wave T e^{i k phi} at any site k.
complex right_wave(int site, EnergyAngle phi, complex transmission);

/// U_{-m} = e^{-i m phi} + R e^{i m phi}, for m >= 1.
complex asymptotic_left(int m, EnergyAngle phi, complex reflection);

/// L_m = T e^{i m phi}, for m >= 1.
complex asymptotic_right(int m, EnergyAngle phi, complex transmission);

}  // namespace nhscat
