#pragma once

#include <span>
#include <vector>

#include "nhscat/banded.hpp"
#include "nhscat/lattice.hpp"
#include "nhscat/potential.hpp"

namespace nhscat {

/// Diagonal metric operator Theta = diag(theta_k) over a site window.
///
/// Builders return strictly positive entries. The type itself accepts any
/// values so that positivity_check can reject bad candidates.
class DiagonalMetric {
 public:
  DiagonalMetric(SiteWindow window, std::vector<double> theta);

  [[nodiscard]] const SiteWindow& window() const noexcept { return window_; }
  [[nodiscard]] std::span<const double> theta() const& noexcept {
    return theta_;
  }
  std::span<const double> theta() const&& = delete;
  [[nodiscard]] double at(int site) const { return theta_[window_.index(site)]; }

 private:
  SiteWindow window_;
  std::vector<double> theta_;
};

DiagonalMetric identity_metric(SiteWindow window);

/// Closed-form chain metric. The odd label 2m+1 on either side gets
///   (1 +- a) * prod_{j=2}^{m+1} (1 +- gamma_j)^2 * prod_{j>m+1} (1 - gamma_j^2),
/// which saturates to a constant past the last coupling.
DiagonalMetric chain_metric(const ChainSpec& spec, SiteWindow window);

/// Identity except theta = (1+g)/(1-g) at the two block centres.
DiagonalMetric two_center_metric(const TwoCenterSpec& spec, SiteWindow window);

/// Identity except theta = (1+g_c)/(1-g_c) at every block centre c.
DiagonalMetric multi_center_metric(const MultiCenterSpec& spec,
                                   SiteWindow window);

DiagonalMetric layout_metric(const ScattererLayout& layout, SiteWindow window);

/// max |conj(H_ji) theta_j - theta_i H_ij| over index pairs inside the
/// window, excluding the two truncated edge rows. Zero iff H^dagger Theta =
/// Theta H on that block.
double quasi_hermiticity_residual(const BandedOperator& hamiltonian,
                                  const DiagonalMetric& metric);

/// Saturated theta_{-k} / theta_{+k} far from the chain:
/// (1-a)(1-b)^2(1-c)^2... / ((1+a)(1+b)^2(1+c)^2...).
double asymmetry_ratio(const ChainSpec& spec);

/// True iff every theta_k > 0.
bool positivity_check(const DiagonalMetric& metric) noexcept;

}  // namespace nhscat
