#include "nhscat/probe.hpp"

#include <cmath>
#include <numbers>

#include "nhscat/closed_form.hpp"
#include "nhscat/errors.hpp"
#include "nhscat/scattering.hpp"

namespace nhscat {

ProbeTable continuum_probe(double g, double kappa,
                           std::span<const double> spacings) {
  if (!(kappa > 0.0)) throw DomainError("kappa must be positive");
  if (spacings.size() < 2) {
    throw DomainError("continuum probe needs at least two spacings");
  }
  for (std::size_t i = 0; i < spacings.size(); ++i) {
    double const h = spacings[i];
    if (!(h > 0.0)) throw DomainError("spacings must be positive");
    if (i > 0 && !(h < spacings[i - 1])) {
      throw DomainError("spacings must be strictly decreasing");
    }
    if (!(kappa * h < std::numbers::pi)) {
      throw DomainError("kappa * h must stay below pi");
    }
  }

  TwoCenterSpec const spec{g, -1};
  ProbeTable table{g, kappa, {}, 0.0, 0.0};
  std::vector<double> abs_t;
  std::vector<double> abs_psi0;
  for (double h : spacings) {
    EnergyAngle const phi(kappa * h);
    ClosedFormResult const closed = closed_form_n_minus1(g, phi);
    NumericSolution const numeric = solve_numeric(spec, phi);
    ProbeRow const row{h,
                       phi.value(),
                       std::abs(closed.amplitudes.transmission),
                       std::abs(closed.amplitudes.reflection),
                       std::abs(numeric.amplitudes.transmission),
                       std::abs(numeric.wave.at(0))};
    table.rows.push_back(row);
    abs_t.push_back(row.abs_t_closed);
    abs_psi0.push_back(row.abs_psi0);
  }
  table.t_exponent = fit_power_law_exponent(spacings, abs_t);
  table.psi0_exponent = fit_power_law_exponent(spacings, abs_psi0);
  return table;
}

double fit_power_law_exponent(std::span<const double> x,
                              std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DomainError("power-law fit needs matching samples, at least two");
  }
  double const n = static_cast<double>(x.size());
  double sx = 0.0;
  double sy = 0.0;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double const lx = std::log(x[i]);
    double const ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> halving_sequence(double h0, int halvings) {
  if (!(h0 > 0.0) || halvings < 1) {
    throw DomainError("halving sequence needs h0 > 0 and at least one halving");
  }
  std::vector<double> h{h0};
  for (int i = 0; i < halvings; ++i) h.push_back(h.back() / 2.0);
  return h;
}

}  // namespace nhscat
