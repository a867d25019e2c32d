#include "nhscat/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <variant>

#include "nhscat/errors.hpp"
#include "nhscat/metric.hpp"

namespace nhscat {

Amplitudes make_amplitudes(complex reflection, complex transmission,
                           EnergyAngle phi) {
  Amplitudes amp{reflection, transmission, 0.0, phi};
  amp.unitarity_defect = unitarity_defect(amp);
  return amp;
}

double unitarity_defect(const Amplitudes& amp) noexcept {
  return std::abs(std::norm(amp.reflection) + std::norm(amp.transmission) - 1.0);
}

double flux_defect(const Amplitudes& amp, double theta_left,
                   double theta_right) noexcept {
  return std::abs(std::norm(amp.reflection) +
                  theta_right / theta_left * std::norm(amp.transmission) - 1.0);
}

void matching_rows(const BandedOperator& potential, int& first_row,
                   int& last_row) {
  if (!potential.row_support(first_row, last_row)) {
    first_row = -1;
    last_row = 1;
  } else if (first_row == last_row) {
    ++last_row;
  }
}

MatchingSystem build_matching_system(const BandedOperator& hamiltonian,
                                     int first_row, int last_row,
                                     EnergyAngle phi) {
  SiteWindow const& w = hamiltonian.window();
  if (first_row >= last_row) {
    throw DomainError("matching rows must span at least two sites");
  }
  if (!w.contains(first_row - 1) || !w.contains(last_row + 1) ||
      w.is_edge(first_row - 1) || w.is_edge(last_row + 1)) {
    throw WindowError("matching rows reach the window edge");
  }

  int const n = last_row - first_row + 1;
  MatchingSystem system{first_row, last_row, phi, BandMatrix(n, 1, 1),
                        std::vector<complex>(static_cast<std::size_t>(n))};
  // Rows of H - E with E = 2 - 2cos(phi): the diagonal becomes
  // H_kk - 2 + 2cos(phi), which is 2cos(phi) for a kinetic-only diagonal.
  double const shift = 2.0 - 2.0 * std::cos(phi.value());

  for (int row = 0; row < n; ++row) {
    int const k = first_row + row;
    for (int site = k - 1; site <= k + 1; ++site) {
      complex coeff = hamiltonian.at(k, site);
      if (site == k) coeff -= shift;
      if (coeff == complex{}) continue;
      if (site <= first_row) {
        system.matrix(row, 0) += coeff * std::polar(1.0, -site * phi.value());
        system.rhs[row] -= coeff * std::polar(1.0, site * phi.value());
      } else if (site >= last_row) {
        system.matrix(row, n - 1) += coeff * std::polar(1.0, site * phi.value());
      } else {
        system.matrix(row, site - first_row) += coeff;
      }
    }
  }
  return system;
}

std::vector<complex> matching_unknowns(const MatchingSystem& system,
                                       complex reflection,
                                       complex transmission,
                                       const WaveSample& wave) {
  std::vector<complex> x(static_cast<std::size_t>(system.size()));
  x.front() = reflection;
  x.back() = transmission;
  for (int k = system.first_row + 1; k < system.last_row; ++k) {
    x[k - system.first_row] = wave.at(k);
  }
  return x;
}

double matching_residual(const MatchingSystem& system,
                         const std::vector<complex>& unknowns) {
  int const n = system.size();
  std::vector<complex> const ax = system.matrix.multiply(unknowns);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    double scale = std::abs(system.rhs[i]);
    for (int j = std::max(0, i - 1); j <= std::min(n - 1, i + 1); ++j) {
      scale += std::abs(system.matrix.at(i, j) * unknowns[j]);
    }
    double const r = std::abs(ax[i] - system.rhs[i]);
    worst = std::max(worst, scale > 0.0 ? r / scale : r);
  }
  return worst;
}

NumericSolution solve_numeric(const ScattererLayout& layout, EnergyAngle phi) {
  validate(layout);
  SiteWindow const window = fitting_window(layout);
  BandedOperator const potential = build_potential(layout, window);
  BandedOperator const hamiltonian = assemble_hamiltonian(potential, window);

  int first_row = 0;
  int last_row = 0;
  matching_rows(potential, first_row, last_row);
  MatchingSystem system =
      build_matching_system(hamiltonian, first_row, last_row, phi);
  std::vector<complex> const x = solve_banded(system.matrix, system.rhs);

  complex const r = x.front();
  complex const t = x.back();
  std::vector<complex> psi(window.size());
  for (int k = window.first(); k <= window.last(); ++k) {
    complex value;
    if (k <= first_row) {
      value = left_wave(k, phi, r);
    } else if (k >= last_row) {
      value = right_wave(k, phi, t);
    } else {
      value = x[k - first_row];
    }
    psi[window.index(k)] = value;
  }

  Amplitudes const amp = make_amplitudes(r, t, phi);
  DiagonalMetric const metric = layout_metric(layout, window);
  double const defect =
      flux_defect(amp, metric.at(window.first()), metric.at(window.last()));
  return NumericSolution{amp, WaveSample(window, std::move(psi)),
                         matching_residual(system, x), defect};
}

PlaneWaveFit interior_plane_wave_fit(const WaveSample& wave, int gap,
                                     EnergyAngle phi) {
  if (gap < 1) {
    throw DomainError("interior plane-wave fit needs gap N >= 1");
  }
  if (!wave.window().contains(-gap) || !wave.window().contains(gap)) {
    throw WindowError("wave sample does not cover the interior sites");
  }

  // Two-column least squares by modified Gram-Schmidt.
  std::vector<complex> a;
  std::vector<complex> b;
  std::vector<complex> y;
  for (int k = -gap; k <= gap; ++k) {
    a.push_back(std::polar(1.0, k * phi.value()));
    b.push_back(std::polar(1.0, -k * phi.value()));
    y.push_back(wave.at(k));
  }
  auto dot = [](const std::vector<complex>& u, const std::vector<complex>& v) {
    complex s;
    for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
    return s;
  };
  double const r11 = std::sqrt(dot(a, a).real());
  std::vector<complex> q1(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) q1[i] = a[i] / r11;
  complex const r12 = dot(q1, b);
  std::vector<complex> q2(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) q2[i] = b[i] - r12 * q1[i];
  double const r22 = std::sqrt(dot(q2, q2).real());
  for (complex& z : q2) z /= r22;

  complex const d = dot(q2, y) / r22;
  complex const c = (dot(q1, y) - r12 * d) / r11;

  double residual = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    residual = std::max(residual, std::abs(y[i] - c * a[i] - d * b[i]));
  }
  return PlaneWaveFit{c, d, residual};
}

}  // namespace nhscat
