#include "nhscat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "nhscat/closed_form.hpp"
#include "nhscat/metric.hpp"
#include "nhscat/potential.hpp"
#include "nhscat/scattering.hpp"

namespace nhscat {

namespace {

constexpr double kMetricTwoCenterTol = 1e-14;
constexpr double kMetricChainTol = 1e-13;
constexpr double kUnitarityTol = 1e-11;
constexpr double kClosedNumericTol = 1e-10;

class Tracker {
 public:
  Tracker(std::string name, double tolerance) {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
  }

  void record(double value, const std::string& where) {
    ++result_.checks;
    if (result_.checks == 1 || value > result_.worst || std::isnan(value)) {
      result_.worst = std::isnan(value) ? INFINITY : value;
      result_.worst_case = where;
    }
  }
  void skip() { ++result_.skipped; }
  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string short_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.10g", value);
  return buffer;
}

std::string two_center_tuple(double g, int gap, double phi) {
  return "g=" + short_number(g) + " N=" + std::to_string(gap) +
         " phi=" + short_number(phi);
}

std::string chain_tuple(const ChainSpec& spec) {
  std::string out = "couplings=";
  for (std::size_t i = 0; i < spec.couplings.size(); ++i) {
    if (i > 0) out += ',';
    out += short_number(spec.couplings[i]);
  }
  return out;
}

double metric_residual(const ScattererLayout& layout) {
  SiteWindow const window = fitting_window(layout);
  BandedOperator const h =
      assemble_hamiltonian(build_potential(layout, window), window);
  return quasi_hermiticity_residual(h, layout_metric(layout, window));
}

double component_gap(const Amplitudes& a, const Amplitudes& b) {
  return std::max(std::abs(a.reflection - b.reflection),
                  std::abs(a.transmission - b.transmission));
}

void two_center_suites(const VerifyOptions& options,
                       std::vector<SuiteResult>& out) {
  auto tol = [&](double fallback) { return options.tolerance.value_or(fallback); };
  bool const metric =
      options.suite == Suite::all || options.suite == Suite::metric;
  bool const unitarity =
      options.suite == Suite::all || options.suite == Suite::unitarity;
  bool const agreement =
      options.suite == Suite::all || options.suite == Suite::closed_vs_numeric;

  if (metric) {
    Tracker t("metric residual (two-center)", tol(kMetricTwoCenterTol));
    for (double g : verify_couplings()) {
      for (int gap : verify_gaps()) {
        t.record(metric_residual(TwoCenterSpec{g, gap}),
                 "g=" + short_number(g) + " N=" + std::to_string(gap));
      }
    }
    out.push_back(t.take());
    Tracker c("metric residual (chain)", tol(kMetricChainTol));
    for (const ChainSpec& spec : verify_chains()) {
      c.record(metric_residual(spec), chain_tuple(spec));
    }
    out.push_back(c.take());
  }
  if (!unitarity && !agreement) return;

  Tracker u("unitarity", tol(kUnitarityTol));
  Tracker a_minus1("closed-vs-numeric (N=-1)", tol(kClosedNumericTol));
  Tracker a_zero("closed-vs-numeric (N=0)", tol(kClosedNumericTol));
  Tracker a_general("closed-vs-numeric (N>=1)", tol(kClosedNumericTol));
  for (double g : verify_couplings()) {
    for (int gap : verify_gaps()) {
      Tracker& a = gap == -1 ? a_minus1 : gap == 0 ? a_zero : a_general;
      TwoCenterSpec const spec{g, gap};
      for (double phi_value : verify_phis()) {
        EnergyAngle const phi(phi_value);
        std::string const where = two_center_tuple(g, gap, phi_value);
        Amplitudes const numeric = solve_numeric(spec, phi).amplitudes;
        u.record(numeric.unitarity_defect, where + " path=numeric");
        std::optional<Amplitudes> closed;
        try {
          closed = closed_form(spec, phi).amplitudes;
        } catch (const ResonantAngleError&) {
          u.skip();
          a.skip();
          continue;
        }
        u.record(closed->unitarity_defect, where + " path=closed");
        a.record(component_gap(*closed, numeric), where);
      }
    }
  }
  if (unitarity) out.push_back(u.take());
  if (agreement) {
    out.push_back(a_minus1.take());
    out.push_back(a_zero.take());
    out.push_back(a_general.take());
  }
}

void chain_suites(const VerifyOptions& options, std::vector<SuiteResult>& out) {
  if (options.suite == Suite::closed_vs_numeric) {
    throw UsageError("closed forms exist only for the two-center model");
  }
  std::vector<ChainSpec> chains = verify_chains();
  if (!options.chain_couplings.empty()) {
    for (double c : options.chain_couplings) require_coupling(c);
    chains = {ChainSpec{options.chain_couplings}};
  }
  if (options.suite == Suite::all || options.suite == Suite::metric) {
    Tracker c("metric residual (chain)",
              options.tolerance.value_or(kMetricChainTol));
    for (const ChainSpec& spec : chains) {
      c.record(metric_residual(spec), chain_tuple(spec));
    }
    out.push_back(c.take());
  }
  if (options.suite == Suite::all || options.suite == Suite::unitarity) {
    Tracker f("metric-weighted flux (chain)",
              options.tolerance.value_or(kUnitarityTol));
    for (const ChainSpec& spec : chains) {
      for (double phi : verify_phis()) {
        f.record(solve_numeric(spec, EnergyAngle(phi)).flux_defect,
                 chain_tuple(spec) + " phi=" + short_number(phi));
      }
    }
    out.push_back(f.take());
  }
}

}  // namespace

Suite parse_suite(std::string_view text) {
  if (text == "all") return Suite::all;
  if (text == "metric") return Suite::metric;
  if (text == "unitarity") return Suite::unitarity;
  if (text == "closed-vs-numeric") return Suite::closed_vs_numeric;
  throw UsageError("unknown suite '" + std::string(text) + "'");
}

std::vector<double> verify_couplings() {
  return {-0.9, -0.7, -0.5, -0.3, -0.1, 0.1, 0.3, 0.5, 0.7, 0.9};
}

std::vector<int> verify_gaps() { return {-1, 0, 1, 2, 5, 10, 25, 50}; }

std::vector<double> verify_phis() {
  PhiGrid const grid{40, 0.05, std::numbers::pi - 0.05};
  return grid.points();
}

std::vector<ChainSpec> verify_chains() {
  return {ChainSpec{{0.5}},
          ChainSpec{{0.5, 0.3}},
          ChainSpec{{-0.7, 0.2, 0.8}},
          ChainSpec{{0.85, -0.3, 0.6, -0.85}},
          ChainSpec{{0.89, 0.89, 0.89, 0.89}},
          ChainSpec{{-0.89, -0.89, -0.89, -0.89}}};
}

std::vector<SuiteResult> run_verify(const VerifyOptions& options) {
  if (options.tolerance && !(*options.tolerance >= 0.0)) {
    throw UsageError("tolerance must be non-negative");
  }
  std::vector<SuiteResult> results;
  switch (options.model) {
    case Model::two_center:
      two_center_suites(options, results);
      break;
    case Model::chain:
      chain_suites(options, results);
      break;
    case Model::multi_center:
      throw UsageError("verify supports the two-center and chain models");
  }
  return results;
}

bool all_passed(std::span<const SuiteResult> results) noexcept {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.passed(); });
}

std::string format_verify_report(std::span<const SuiteResult> results) {
  std::string out;
  char line[512];
  for (const SuiteResult& r : results) {
    std::snprintf(line, sizeof line,
                  "%-30s max %.3e  tol %.0e  checks %zu  skipped %zu  %s\n",
                  r.name.c_str(), r.worst, r.tolerance, r.checks, r.skipped,
                  r.passed() ? "PASS" : "FAIL");
    out += line;
    if (!r.passed()) out += "  worst at " + r.worst_case + "\n";
  }
  out += all_passed(results) ? "verify: all suites passed\n"
                             : "verify: FAILED\n";
  return out;
}

}  // namespace nhscat
