#pragma once

#include <optional>

#include "nhscat/lattice.hpp"
#include "nhscat/potential.hpp"
#include "nhscat/scattering.hpp"

namespace nhscat {

/// Intermediates of the closed-form two-center amplitudes.
///
/// For N = -1 and N = 0 the amplitudes come from two unimodular numbers,
/// T - R = e^{i alpha} = (1 - i lambda)/(1 + i lambda) and
/// T + R = e^{i beta}, the latter built from mu. For N >= 1 they come from
/// u and v through R - T = -u*/u and R + T = -v*/v. `lambda` and `mu` are
/// +-inf at a pole of their Moebius form.
struct ClosedFormBreakdown {
  std::optional<double> lambda;
  std::optional<double> mu;
  double alpha = 0.0;  // arg(T - R)
  double beta = 0.0;   // arg(T + R)
  // General-N only.
  std::optional<complex> a_phi;
  std::optional<complex> b_phi;
  std::optional<complex> u_phi;
  std::optional<complex> v_phi;
  std::optional<complex> interior_c;
  std::optional<complex> interior_d;
};

struct ClosedFormResult {
  Amplitudes amplitudes;
  ClosedFormBreakdown breakdown;
};

/// Denominator magnitude below which lambda, mu or u, v count as a pole.
inline constexpr double kPoleTolerance = 1e-13;
/// Trigonometric resonance guard for the general-N formulas.
inline constexpr double kResonanceGuard = 1e-10;

/// Merged scatterers (N = -1):
///   lambda = g^2 sin 2phi / (1 + g^2 cos 2phi),
///   mu = (1 - g^2) sin 2phi / (1 - 3g^2 - cos 2phi - g^2 cos 2phi),
///   T + R = -e^{-2i phi} (1 - i mu)/(1 + i mu).
ClosedFormResult closed_form_n_minus1(double g, EnergyAngle phi);

/// Adjacent scatterers (N = 0):
///   lambda' = g^2 (2 sin 2phi + sin 4phi) / (1 + g^2 (2 cos 2phi + cos 4phi)),
///   mu' = [-2 sin phi + g^2 (2 sin phi + sin 3phi + sin 5phi)]
///         / [g^2 (2 cos phi + cos 3phi + cos 5phi)],
///   T + R = -(1 - i mu')/(1 + i mu').
/// mu' follows from the central matching row
///   (U_{-1} + L_1) + g^2 (U_{-3} + L_3)
///     = cos(phi) [U_0 + L_0 + g^2 (2U_{-2} + 2L_2 + U_{-4} + L_4)].
ClosedFormResult closed_form_n0(double g, EnergyAngle phi);

/// Any gap N >= 1, via the free interior wave C e^{ik phi} + D e^{-ik phi}:
///   A = e^{iN phi} + g^2 (2 e^{i(N+2) phi} + e^{i(N+4) phi}),
///   B = e^{i(N+1) phi} + g^2 e^{i(N+3) phi},
///   u = B / sin((N+1) phi) - A / sin(N phi),
///   v = B / cos((N+1) phi) - A / cos(N phi).
/// Throws ResonantAngleError when a sine or cosine above falls within
/// kResonanceGuard of zero, or |u|, |v| < kPoleTolerance.
ClosedFormResult closed_form_general_n(double g, int gap, EnergyAngle phi);

/// Dispatches on spec.gap.
ClosedFormResult closed_form(const TwoCenterSpec& spec, EnergyAngle phi);

/// Full wavefunction implied by a closed-form result, on `window`: the
/// asymptotic forms outside the scatterers, psi = U/(1+g) and L/(1+g) at
/// the block centres, and the interior from the matching relations.
WaveSample closed_form_wave(const TwoCenterSpec& spec, EnergyAngle phi,
                            const ClosedFormResult& result, SiteWindow window);

}  // namespace nhscat
