#pragma once

#include <span>
#include <vector>

namespace nhscat {

struct ProbeRow {
  double h;
  double phi;  // kappa * h
  double abs_t_closed;
  double abs_r_closed;
  double abs_t_numeric;
  double abs_psi0;  // |psi_0| from the numeric solve
};

struct ProbeTable {
  double g;
  double kappa;
  std::vector<ProbeRow> rows;
  double t_exponent;     // slope of log|T| against log h
  double psi0_exponent;  // slope of log|psi_0| against log h
};

/// Runs the merged (N = -1) model at phi = kappa h for each spacing, using
/// both the closed form and the numeric solve. As h -> 0 with g != 0 the
/// scatterer turns into an opaque wall: |T| and |psi_0| vanish like h.
///
/// Throws DomainError unless kappa > 0, the spacings are positive and
/// strictly decreasing, and kappa h < pi for all of them.
ProbeTable continuum_probe(double g, double kappa,
                           std::span<const double> spacings);

/// Least-squares slope of log y against log x.
double fit_power_law_exponent(std::span<const double> x,
                              std::span<const double> y);

/// h0, h0/2, ..., h0/2^halvings.
std::vector<double> halving_sequence(double h0, int halvings);

}  // namespace nhscat
