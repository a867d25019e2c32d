#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nhscat/potential.hpp"
#include "nhscat/sweep.hpp"

namespace nhscat {

enum class Suite { all, metric, unitarity, closed_vs_numeric };

Suite parse_suite(std::string_view text);

struct VerifyOptions {
  Suite suite = Suite::all;
  std::optional<double> tolerance;  // overrides every suite's default
  Model model = Model::two_center;
  std::vector<double> chain_couplings;  // empty: built-in chain sets
};

struct SuiteResult {
  std::string name;
  double worst = 0.0;
  double tolerance = 0.0;
  std::size_t checks = 0;
  std::size_t skipped = 0;  // resonance-guarded angles
  std::string worst_case;   // parameter tuple of the largest value
  [[nodiscard]] bool passed() const noexcept { return worst <= tolerance; }
};

std::vector<double> verify_couplings();
std::vector<int> verify_gaps();
std::vector<double> verify_phis();
std::vector<ChainSpec> verify_chains();

std::vector<SuiteResult> run_verify(const VerifyOptions& options);

bool all_passed(std::span<const SuiteResult> results) noexcept;

/// One line per suite; the failing ones name their worst parameter tuple.
std::string format_verify_report(std::span<const SuiteResult> results);

}  // namespace nhscat
