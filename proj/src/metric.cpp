#include "nhscat/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <variant>

#include "nhscat/errors.hpp"

namespace nhscat {

DiagonalMetric::DiagonalMetric(SiteWindow window, std::vector<double> theta)
    : window_(window), theta_(std::move(theta)) {
  if (theta_.size() != window_.size()) {
    throw WindowError("metric length does not match its window");
  }
}

DiagonalMetric identity_metric(SiteWindow window) {
  return DiagonalMetric(window, std::vector<double>(window.size(), 1.0));
}

DiagonalMetric chain_metric(const ChainSpec& spec, SiteWindow window) {
  validate(spec);
  auto const& gamma = spec.couplings;
  int const count = static_cast<int>(gamma.size());
  if (window.half_width() < count + 1) {
    throw WindowError("window half width " +
                      std::to_string(window.half_width()) + " cannot hold " +
                      std::to_string(count) + " chain couplings");
  }

  // Label 2m+1 on the right is site m+1; on the left it is site -m.
  auto theta_at = [&](int m, double sign) {
    double value = 1.0 + sign * gamma[0];
    for (int j = 2; j <= count; ++j) {
      double const c = gamma[j - 1];
      value *= (j <= m + 1) ? (1.0 + sign * c) * (1.0 + sign * c)
                            : (1.0 - c * c);
    }
    return value;
  };

  std::vector<double> theta(window.size());
  for (int k = window.first(); k <= window.last(); ++k) {
    theta[window.index(k)] = k >= 1 ? theta_at(k - 1, +1.0) : theta_at(-k, -1.0);
  }
  return DiagonalMetric(window, std::move(theta));
}

DiagonalMetric multi_center_metric(const MultiCenterSpec& spec,
                                   SiteWindow window) {
  validate(spec);
  std::vector<double> theta(window.size(), 1.0);
  for (const Scatterer& s : spec.scatterers) {
    if (!window.contains(s.center)) {
      throw WindowError("scatterer centre " + std::to_string(s.center) +
                        " outside the metric window");
    }
    theta[window.index(s.center)] = (1.0 + s.g) / (1.0 - s.g);
  }
  return DiagonalMetric(window, std::move(theta));
}

DiagonalMetric two_center_metric(const TwoCenterSpec& spec, SiteWindow window) {
  validate(spec);
  return multi_center_metric(as_multi_center(spec), window);
}

DiagonalMetric layout_metric(const ScattererLayout& layout, SiteWindow window) {
  if (auto const* s = std::get_if<TwoCenterSpec>(&layout)) {
    return two_center_metric(*s, window);
  }
  if (auto const* s = std::get_if<ChainSpec>(&layout)) {
    return chain_metric(*s, window);
  }
  return multi_center_metric(std::get<MultiCenterSpec>(layout), window);
}

double quasi_hermiticity_residual(const BandedOperator& hamiltonian,
                                  const DiagonalMetric& metric) {
  SiteWindow const& w = hamiltonian.window();
  if (!(w == metric.window())) {
    throw WindowError("metric and Hamiltonian live on different windows");
  }
  double worst = 0.0;
  for (int i = w.first() + 1; i < w.last(); ++i) {
    for (int j = std::max(w.first() + 1, i - 1);
         j <= std::min(w.last() - 1, i + 1); ++j) {
      complex const lhs = std::conj(hamiltonian.at(j, i)) * metric.at(j);
      complex const rhs = metric.at(i) * hamiltonian.at(i, j);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

double asymmetry_ratio(const ChainSpec& spec) {
  validate(spec);
  double ratio = 1.0;
  for (std::size_t j = 0; j < spec.couplings.size(); ++j) {
    double const c = spec.couplings[j];
    double const factor = (1.0 - c) / (1.0 + c);
    ratio *= j == 0 ? factor : factor * factor;
  }
  return ratio;
}

bool positivity_check(const DiagonalMetric& metric) noexcept {
  auto const theta = metric.theta();
  return std::all_of(theta.begin(), theta.end(),
                     [](double t) { return t > 0.0; });
}

}  // namespace nhscat
