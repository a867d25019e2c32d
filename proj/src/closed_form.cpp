#include "nhscat/closed_form.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "nhscat/errors.hpp"

namespace nhscat {

namespace {

constexpr complex kI{0.0, 1.0};

struct Moebius {
  complex value;  // (1 - i x)/(1 + i x) with x = numerator / denominator
  double x;
};

// (den - i num)/(den + i num); tends to -1 as |x| -> inf.
Moebius unit_ratio(double numerator, double denominator) {
  if (std::abs(denominator) < kPoleTolerance) {
    double const inf = std::numeric_limits<double>::infinity();
    return {complex(-1.0, 0.0), numerator >= 0.0 ? inf : -inf};
  }
  complex const z(denominator, numerator);
  return {std::conj(z) / z, numerator / denominator};
}

void check_inputs(double g) {
  if (!std::isfinite(g) || std::abs(g) >= 1.0) {
    throw PositivityError("coupling g " + std::to_string(g) +
                          " outside (-1, 1)");
  }
}

ClosedFormResult from_sum_and_difference(complex t_minus_r, complex t_plus_r,
                                         EnergyAngle phi,
                                         ClosedFormBreakdown breakdown) {
  breakdown.alpha = std::arg(t_minus_r);
  breakdown.beta = std::arg(t_plus_r);
  complex const t = 0.5 * (t_plus_r + t_minus_r);
  complex const r = 0.5 * (t_plus_r - t_minus_r);
  return {make_amplitudes(r, t, phi), breakdown};
}

}  // namespace

ClosedFormResult closed_form_n_minus1(double g, EnergyAngle phi) {
  check_inputs(g);
  double const p = phi.value();
  double const g2 = g * g;
  double const s2 = std::sin(2 * p);
  double const c2 = std::cos(2 * p);

  Moebius const alpha = unit_ratio(g2 * s2, 1.0 + g2 * c2);
  Moebius const beta =
      unit_ratio((1.0 - g2) * s2, 1.0 - 3.0 * g2 - c2 - g2 * c2);

  ClosedFormBreakdown breakdown;
  breakdown.lambda = alpha.x;
  breakdown.mu = beta.x;
  return from_sum_and_difference(
      alpha.value, -std::polar(1.0, -2 * p) * beta.value, phi, breakdown);
}

ClosedFormResult closed_form_n0(double g, EnergyAngle phi) {
  check_inputs(g);
  double const p = phi.value();
  double const g2 = g * g;
  using std::cos;
  using std::sin;

  Moebius const alpha =
      unit_ratio(g2 * (2 * sin(2 * p) + sin(4 * p)),
                 1.0 + g2 * (2 * cos(2 * p) + cos(4 * p)));
  Moebius const beta =
      unit_ratio(-2 * sin(p) + g2 * (2 * sin(p) + sin(3 * p) + sin(5 * p)),
                 g2 * (2 * cos(p) + cos(3 * p) + cos(5 * p)));

  ClosedFormBreakdown breakdown;
  breakdown.lambda = alpha.x;
  breakdown.mu = beta.x;
  return from_sum_and_difference(alpha.value, -beta.value, phi, breakdown);
}

ClosedFormResult closed_form_general_n(double g, int gap, EnergyAngle phi) {
  check_inputs(g);
  if (gap < 1) {
    throw DomainError("general-N closed form needs N >= 1, got " +
                      std::to_string(gap));
  }
  double const p = phi.value();
  int const n = gap;
  double const g2 = g * g;

  double const sin_n = std::sin(n * p);
  double const sin_n1 = std::sin((n + 1) * p);
  double const cos_n = std::cos(n * p);
  double const cos_n1 = std::cos((n + 1) * p);
  for (double trig : {sin_n, sin_n1, cos_n, cos_n1}) {
    if (std::abs(trig) <= kResonanceGuard) {
      throw ResonantAngleError("resonant angle phi = " + std::to_string(p) +
                               " for N = " + std::to_string(n));
    }
  }

  auto e = [p](int m) { return std::polar(1.0, m * p); };
  complex const a = e(n) + g2 * (2.0 * e(n + 2) + e(n + 4));
  complex const b = e(n + 1) + g2 * e(n + 3);
  complex const u = b / sin_n1 - a / sin_n;
  complex const v = b / cos_n1 - a / cos_n;
  if (std::abs(u) < kPoleTolerance || std::abs(v) < kPoleTolerance) {
    throw ResonantAngleError("vanishing u or v at phi = " + std::to_string(p));
  }

  complex const r_minus_t = -std::conj(u) / u;
  complex const r_plus_t = -std::conj(v) / v;

  // C + D from the cos(N phi) relation, C - D from the sin(N phi) one.
  double const scale = 2.0 * (1.0 - g2);
  complex const c_plus_d = (std::conj(a) + a * r_plus_t) / (scale * cos_n);
  complex const c_minus_d = (std::conj(a) + a * r_minus_t) / (-kI * scale * sin_n);

  ClosedFormBreakdown breakdown;
  breakdown.a_phi = a;
  breakdown.b_phi = b;
  breakdown.u_phi = u;
  breakdown.v_phi = v;
  breakdown.interior_c = 0.5 * (c_plus_d + c_minus_d);
  breakdown.interior_d = 0.5 * (c_plus_d - c_minus_d);
  return from_sum_and_difference(-r_minus_t, r_plus_t, phi, breakdown);
}

ClosedFormResult closed_form(const TwoCenterSpec& spec, EnergyAngle phi) {
  validate(spec);
  if (spec.gap == -1) return closed_form_n_minus1(spec.g, phi);
  if (spec.gap == 0) return closed_form_n0(spec.g, phi);
  return closed_form_general_n(spec.g, spec.gap, phi);
}

WaveSample closed_form_wave(const TwoCenterSpec& spec, EnergyAngle phi,
                            const ClosedFormResult& result, SiteWindow window) {
  validate(spec);
  int const n = spec.gap;
  int const center = n + 2;
  if (window.half_width() < center + 1) {
    throw WindowError("window too small for the closed-form wave");
  }
  double const g = spec.g;
  double const g2 = g * g;
  complex const r = result.amplitudes.reflection;
  complex const t = result.amplitudes.transmission;
  auto U = [&](int k) { return left_wave(k, phi, r); };
  auto L = [&](int k) { return right_wave(k, phi, t); };

  std::vector<complex> psi(window.size());
  for (int k = window.first(); k <= window.last(); ++k) {
    complex value;
    if (k <= -center - 1) {
      value = U(k);
    } else if (k >= center + 1) {
      value = L(k);
    } else if (k == -center) {
      value = U(k) / (1.0 + g);
    } else if (k == center) {
      value = L(k) / (1.0 + g);
    } else if (n == -1) {
      // Only site 0 remains between the merged centres.
      value = (L(0) + g2 * L(2)) / (1.0 - g2);
    } else if (k == -n - 1) {
      value = (U(k) + g2 * U(k - 2)) / (1.0 - g2);
    } else if (k == n + 1) {
      value = (L(k) + g2 * L(k + 2)) / (1.0 - g2);
    } else if (n == 0) {
      value = (L(0) + g2 * (2.0 * L(2) + L(4))) / (1.0 - g2);
    } else {
      value = *result.breakdown.interior_c * std::polar(1.0, k * phi.value()) +
              *result.breakdown.interior_d * std::polar(1.0, -k * phi.value());
    }
    psi[window.index(k)] = value;
  }
  return WaveSample(window, std::move(psi));
}

}  // namespace nhscat
