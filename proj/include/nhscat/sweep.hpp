#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nhscat/errors.hpp"
#include "nhscat/lattice.hpp"

namespace nhscat {

/// Invalid command-line input or sweep configuration (exit code 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Output file could not be written (exit code 4).
class IoError : public Error {
 public:
  using Error::Error;
};

enum class Model { two_center, chain, multi_center };
enum class Method { closed, numeric, both };
enum class OutputFormat { csv, json };

/// Throws UsageError unless |g| < 1.
void require_coupling(double g);

Model parse_model(std::string_view text);
Method parse_method(std::string_view text);
OutputFormat parse_format(std::string_view text);
std::string_view to_string(Method method) noexcept;

/// `count` angles spread evenly over [min, max], both inside (0, pi).
struct PhiGrid {
  int count = 40;
  double min = 1e-3;
  double max = 3.14159265358979323846 - 1e-3;

  /// Parses "count:min:max".
  static PhiGrid parse(std::string_view text);
  [[nodiscard]] std::vector<double> points() const;
};

/// One scattering configuration, as given on the command line.
struct PointSpec {
  Model model = Model::two_center;
  double g = 0.0;
  int gap = 0;
  std::vector<double> chain_couplings;
  std::vector<int> centers;
};

/// One output row. For method "both" the closed and numeric rows share the
/// `discrepancy` column (max of |dR|, |dT|); otherwise it is 0.
struct SweepRecord {
  double g;
  int gap;  // N; number of couplings (chain) or centres (multi-center)
  double phi;
  complex reflection;
  complex transmission;
  double abs_r2;
  double abs_t2;
  double defect;
  double discrepancy;
  Method method;
  bool resonant;
};

/// Evaluates one point. Closed forms exist for the two-center model only.
/// A resonant closed-form angle either throws ResonantAngleError or, with
/// `fallback` set, yields a single numeric record flagged as resonant.
std::vector<SweepRecord> evaluate_point(const PointSpec& spec, double phi,
                                        Method method, bool fallback);

struct SweepConfig {
  Model model = Model::two_center;
  std::vector<double> g_grid;
  std::vector<int> gap_grid;
  std::vector<double> chain_couplings;
  std::vector<int> centers;
  PhiGrid phi_grid;
  Method method = Method::numeric;
  OutputFormat format = OutputFormat::csv;
  std::string out_path;
};

/// Throws UsageError on an empty grid, phi outside (0, pi) or a coupling
/// outside (-1, 1).
void validate(const SweepConfig& config);

/// Rows ordered g outer, N middle, phi inner, independent of `threads`.
std::vector<SweepRecord> run_sweep(const SweepConfig& config,
                                   unsigned threads = 1);

/// %.17g, enough digits for an exact round trip.
std::string format_number(double value);

std::string format_records(std::span<const SweepRecord> records,
                           OutputFormat format);

/// THREADS from the environment, else the hardware concurrency (>= 1).
unsigned thread_count_from_env();

/// Writes the whole text to `path`; throws IoError on failure.
void write_text_file(const std::string& path, std::string_view text);

}  // namespace nhscat
