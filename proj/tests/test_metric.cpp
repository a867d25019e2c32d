#include <doctest.h>

#include <cmath>

#include "nhscat/errors.hpp"
#include "nhscat/metric.hpp"
#include "nhscat/potential.hpp"
#include "oracles.hpp"

using namespace nhscat;

namespace {

BandedOperator hamiltonian(const ScattererLayout& layout, SiteWindow w) {
  return assemble_hamiltonian(build_potential(layout, w), w);
}

// Chain potential entry by entry, for the oracle: bond (k, k+1) carries
// +c below and -c above the diagonal.
oracle::Potential chain_v(const std::vector<double>& couplings) {
  return [couplings](int i, int j) {
    if (std::abs(i - j) != 1) return 0.0;
    int const k = std::min(i, j);
    int const index = k >= 0 ? k + 1 : 1 - k;
    if (index > static_cast<int>(couplings.size())) return 0.0;
    double const c = couplings[index - 1];
    return i > j ? c : -c;
  };
}

}  // namespace

TEST_CASE("two-center metric entries") {
  SiteWindow const w(9);
  DiagonalMetric const m = two_center_metric({0.5, 3}, w);
  for (int k = -9; k <= 9; ++k) {
    if (std::abs(k) == 5) {
      CHECK(m.at(k) == doctest::Approx(3.0).epsilon(1e-15));
    } else {
      CHECK(m.at(k) == 1.0);
    }
  }
  DiagonalMetric const neg = two_center_metric({-0.5, 0}, w);
  CHECK(neg.at(2) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(neg.at(-2) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(neg.at(0) == 1.0);

  DiagonalMetric const free = two_center_metric({0.0, 4}, w);
  for (double t : free.theta()) CHECK(t == 1.0);

  DiagonalMetric const strong = two_center_metric({0.9, 1}, w);
  CHECK(strong.at(3) == doctest::Approx(19.0).epsilon(1e-14));
  CHECK(positivity_check(strong));

  // N = -1: the two merged centres sit at +-1.
  DiagonalMetric const merged = two_center_metric({0.2, -1}, w);
  CHECK(merged.at(1) == doctest::Approx(1.5));
  CHECK(merged.at(-1) == doctest::Approx(1.5));
  CHECK(merged.at(0) == 1.0);

  CHECK_THROWS_AS(two_center_metric({1.0, 1}, w), PositivityError);
}

TEST_CASE("two-center quasi-hermiticity") {
  for (double g : {-0.9, -0.7, -0.5, -0.3, -0.1, 0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (int gap : {-1, 0, 1, 2, 5, 10, 25, 50}) {
      TwoCenterSpec const spec{g, gap};
      SiteWindow const w = fitting_window(spec);
      double const r =
          quasi_hermiticity_residual(hamiltonian(spec, w), two_center_metric(spec, w));
      CAPTURE(g);
      CAPTURE(gap);
      CHECK(r <= 1e-14);
    }
  }
  SiteWindow const w(8);
  BandedOperator const h = hamiltonian(TwoCenterSpec{0.5, 1}, w);
  CHECK(quasi_hermiticity_residual(h, identity_metric(w)) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(quasi_hermiticity_residual(build_laplacian(w), identity_metric(w)) == 0.0);
}

TEST_CASE("brute-force metric oracle, two-center") {
  for (double g : {-0.8, 0.35}) {
    for (int gap : {-1, 0, 2}) {
      SiteWindow const w(7);
      auto const theta = oracle::brute_force_metric(
          [&](int i, int j) { return oracle::two_center_v(g, gap, i, j); },
          w.first(), w.last());
      DiagonalMetric const m = two_center_metric({g, gap}, w);
      for (int k = w.first(); k <= w.last(); ++k) {
        CHECK(std::abs(m.at(k) - theta[w.index(k)]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("chain metric closed form") {
  double const a = 0.3;
  double const b = -0.6;
  double const c = 0.45;
  SiteWindow const w(5);
  DiagonalMetric const m = chain_metric({{a, b, c}}, w);
  // Label 2k-1 sits at site k: theta_{+1} at site 1, theta_{-1} at site 0.
  CHECK(m.at(1) == doctest::Approx((1 + a) * (1 - b * b) * (1 - c * c)).epsilon(1e-15));
  CHECK(m.at(0) == doctest::Approx((1 - a) * (1 - b * b) * (1 - c * c)).epsilon(1e-15));
  CHECK(m.at(2) == doctest::Approx((1 + a) * (1 + b) * (1 + b) * (1 - c * c)).epsilon(1e-15));
  CHECK(m.at(-1) == doctest::Approx((1 - a) * (1 - b) * (1 - b) * (1 - c * c)).epsilon(1e-15));
  CHECK(m.at(3) == doctest::Approx((1 + a) * (1 + b) * (1 + b) * (1 + c) * (1 + c)).epsilon(1e-15));
  CHECK(m.at(-2) == doctest::Approx((1 - a) * (1 - b) * (1 - b) * (1 - c) * (1 - c)).epsilon(1e-15));
  // Saturated beyond the last coupling.
  CHECK(m.at(5) == m.at(3));
  CHECK(m.at(-4) == m.at(-2));

  DiagonalMetric const half = chain_metric({{0.5}}, SiteWindow(3));
  CHECK(half.at(1) / half.at(0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(half.at(-3) / half.at(3) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  DiagonalMetric const free = chain_metric({{0.0, 0.0, 0.0}}, w);
  for (double t : free.theta()) CHECK(t == 1.0);
  CHECK_THROWS_AS(chain_metric({{0.2, 1.0}}, w), PositivityError);
  CHECK_THROWS_AS(chain_metric({{0.2, 0.1, 0.1, 0.1, 0.1}}, w), WindowError);
}

TEST_CASE("chain metric against the brute-force oracle") {
  std::vector<std::vector<double>> const sets{
      {0.5}, {0.5, 0.3}, {-0.7, 0.2, 0.8}, {0.85, -0.3, 0.6, -0.85},
      {0.89, 0.89, 0.89, 0.89}, {-0.89, 0.1, -0.89, 0.4}};
  for (const auto& couplings : sets) {
    ChainSpec const spec{couplings};
    SiteWindow const w(7);  // 15 sites
    DiagonalMetric const m = chain_metric(spec, w);
    auto const theta = oracle::brute_force_metric(chain_v(couplings), w.first(), w.last());
    // The oracle starts from 1; carry it over to the product-form scale.
    double const scale = m.at(w.first());
    for (int k = w.first(); k <= w.last(); ++k) {
      CHECK(std::abs(m.at(k) - scale * theta[w.index(k)]) <= 1e-12);
    }
    BandedOperator const h = hamiltonian(spec, w);
    CHECK(quasi_hermiticity_residual(h, m) <= 1e-13);
    CHECK(positivity_check(m));
  }
}

TEST_CASE("asymmetry ratio") {
  CHECK(asymmetry_ratio({{0.5}}) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(asymmetry_ratio({{0.0, 0.0}}) == 1.0);
  double const a = 0.2;
  double const b = -0.4;
  CHECK(asymmetry_ratio({{a, b}}) ==
        doctest::Approx((1 - a) * (1 - b) * (1 - b) / ((1 + a) * (1 + b) * (1 + b)))
            .epsilon(1e-15));
  // Agrees with the saturated metric entries.
  DiagonalMetric const m = chain_metric({{a, b}}, SiteWindow(5));
  CHECK(m.at(-5) / m.at(5) == doctest::Approx(asymmetry_ratio({{a, b}})).epsilon(1e-15));
  CHECK(asymmetry_ratio({{0.999999}}) < 1e-6);
  CHECK(asymmetry_ratio({{-0.999999}}) > 1e6);
}

TEST_CASE("positivity check") {
  SiteWindow const w(2);
  CHECK(positivity_check(identity_metric(w)));
  CHECK_FALSE(positivity_check(DiagonalMetric(w, {1, 1, 0, 1, 1})));
  CHECK_FALSE(positivity_check(DiagonalMetric(w, {1, 1, -2, 1, 1})));
}

TEST_CASE("g sign maps the centre entry to its reciprocal") {
  for (double g : {0.1, 0.5, 0.9}) {
    SiteWindow const w(6);
    DiagonalMetric const plus = two_center_metric({g, 1}, w);
    DiagonalMetric const minus = two_center_metric({-g, 1}, w);
    CHECK(plus.at(3) * minus.at(3) == doctest::Approx(1.0).epsilon(1e-15));
  }
}
