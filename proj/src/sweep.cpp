#include "nhscat/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <exception>
#include <numbers>
#include <optional>
#include <thread>

#include <json.hpp>

#include "nhscat/closed_form.hpp"
#include "nhscat/potential.hpp"
#include "nhscat/scattering.hpp"

namespace nhscat {

namespace {

template <class T>
T parse_number(std::string_view text, const char* what) {
  T value{};
  auto const* end = text.data() + text.size();
  auto const [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw UsageError(std::string("cannot parse ") + what + " from '" +
                     std::string(text) + "'");
  }
  return value;
}

ScattererLayout make_layout(const PointSpec& spec) {
  switch (spec.model) {
    case Model::two_center:
      return TwoCenterSpec{spec.g, spec.gap};
    case Model::chain:
      return ChainSpec{spec.chain_couplings};
    case Model::multi_center: {
      MultiCenterSpec multi;
      for (int c : spec.centers) multi.scatterers.push_back({c, spec.g});
      return multi;
    }
  }
  throw UsageError("unknown model");
}

SweepRecord make_record(const PointSpec& spec, const Amplitudes& amp,
                        Method method, bool resonant) {
  double g = spec.g;
  int gap = spec.gap;
  if (spec.model == Model::chain) {
    g = spec.chain_couplings.front();
    gap = static_cast<int>(spec.chain_couplings.size());
  } else if (spec.model == Model::multi_center) {
    gap = static_cast<int>(spec.centers.size());
  }
  return SweepRecord{g,
                     gap,
                     amp.phi.value(),
                     amp.reflection,
                     amp.transmission,
                     std::norm(amp.reflection),
                     std::norm(amp.transmission),
                     unitarity_defect(amp),
                     0.0,
                     method,
                     resonant};
}

}  // namespace

void require_coupling(double g) {
  if (!std::isfinite(g) || std::abs(g) >= 1.0) {
    throw UsageError("coupling out of (−1, 1): " + format_number(g));
  }
}

Model parse_model(std::string_view text) {
  if (text == "two-center") return Model::two_center;
  if (text == "chain") return Model::chain;
  if (text == "multi-center") return Model::multi_center;
  throw UsageError("unknown model '" + std::string(text) + "'");
}

Method parse_method(std::string_view text) {
  if (text == "closed") return Method::closed;
  if (text == "numeric") return Method::numeric;
  if (text == "both") return Method::both;
  throw UsageError("unknown method '" + std::string(text) + "'");
}

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw UsageError("unknown format '" + std::string(text) + "'");
}

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::closed:
      return "closed";
    case Method::numeric:
      return "numeric";
    case Method::both:
      return "both";
  }
  return "?";
}

PhiGrid PhiGrid::parse(std::string_view text) {
  auto const first = text.find(':');
  auto const second =
      first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw UsageError("phi grid must look like count:min:max");
  }
  PhiGrid grid;
  grid.count = parse_number<int>(text.substr(0, first), "phi grid count");
  grid.min = parse_number<double>(text.substr(first + 1, second - first - 1),
                                  "phi grid min");
  grid.max = parse_number<double>(text.substr(second + 1), "phi grid max");
  return grid;
}

std::vector<double> PhiGrid::points() const {
  std::vector<double> phis;
  for (int i = 0; i < count; ++i) {
    phis.push_back(count == 1 ? min : min + (max - min) * i / (count - 1));
  }
  return phis;
}

std::vector<SweepRecord> evaluate_point(const PointSpec& spec, double phi_value,
                                        Method method, bool fallback) {
  EnergyAngle const phi(phi_value);
  ScattererLayout const layout = make_layout(spec);

  if (method == Method::numeric) {
    return {make_record(spec, solve_numeric(layout, phi).amplitudes,
                        Method::numeric, false)};
  }
  if (spec.model != Model::two_center) {
    throw UsageError("closed forms exist only for the two-center model");
  }

  std::optional<ClosedFormResult> closed;
  try {
    closed = closed_form(std::get<TwoCenterSpec>(layout), phi);
  } catch (const ResonantAngleError&) {
    if (!fallback) throw;
    return {make_record(spec, solve_numeric(layout, phi).amplitudes,
                        Method::numeric, true)};
  }
  SweepRecord closed_row =
      make_record(spec, closed->amplitudes, Method::closed, false);
  if (method == Method::closed) return {closed_row};

  SweepRecord numeric_row = make_record(
      spec, solve_numeric(layout, phi).amplitudes, Method::numeric, false);
  double const gap =
      std::max(std::abs(closed_row.reflection - numeric_row.reflection),
               std::abs(closed_row.transmission - numeric_row.transmission));
  closed_row.discrepancy = gap;
  numeric_row.discrepancy = gap;
  return {closed_row, numeric_row};
}

void validate(const SweepConfig& config) {
  if (config.phi_grid.count < 1) throw UsageError("empty phi grid");
  if (!(config.phi_grid.min > 0.0) ||
      !(config.phi_grid.max < std::numbers::pi) ||
      config.phi_grid.min > config.phi_grid.max) {
    throw UsageError("phi grid bounds must satisfy 0 < min <= max < pi");
  }
  switch (config.model) {
    case Model::two_center:
      if (config.g_grid.empty()) throw UsageError("empty coupling grid");
      if (config.gap_grid.empty()) throw UsageError("empty N grid");
      for (int n : config.gap_grid) {
        if (n < -1) throw UsageError("N must be >= -1");
      }
      break;
    case Model::chain:
      if (config.chain_couplings.empty()) {
        throw UsageError("chain model needs --couplings");
      }
      for (double c : config.chain_couplings) require_coupling(c);
      break;
    case Model::multi_center:
      if (config.g_grid.empty()) throw UsageError("empty coupling grid");
      if (config.centers.empty()) {
        throw UsageError("multi-center model needs --centers");
      }
      break;
  }
  for (double g : config.g_grid) require_coupling(g);
  if (config.model != Model::two_center && config.method != Method::numeric) {
    throw UsageError("closed forms exist only for the two-center model");
  }
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config,
                                   unsigned threads) {
  validate(config);

  struct Task {
    PointSpec spec;
    double phi;
  };
  std::vector<Task> tasks;
  std::vector<double> const phis = config.phi_grid.points();
  auto add_phis = [&](const PointSpec& spec) {
    for (double phi : phis) tasks.push_back({spec, phi});
  };
  switch (config.model) {
    case Model::two_center:
      for (double g : config.g_grid) {
        for (int n : config.gap_grid) add_phis({Model::two_center, g, n, {}, {}});
      }
      break;
    case Model::chain:
      add_phis({Model::chain, 0.0, 0, config.chain_couplings, {}});
      break;
    case Model::multi_center:
      for (double g : config.g_grid) {
        add_phis({Model::multi_center, g, 0, {}, config.centers});
      }
      break;
  }

  std::vector<std::vector<SweepRecord>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] =
            evaluate_point(tasks[i].spec, tasks[i].phi, config.method, true);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned const count =
      std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::vector<SweepRecord> records;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    records.insert(records.end(), results[i].begin(), results[i].end());
  }
  return records;
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string format_records(std::span<const SweepRecord> records,
                           OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const SweepRecord& r : records) {
      array.push_back({{"g", r.g},
                       {"N", r.gap},
                       {"phi", r.phi},
                       {"re_R", r.reflection.real()},
                       {"im_R", r.reflection.imag()},
                       {"re_T", r.transmission.real()},
                       {"im_T", r.transmission.imag()},
                       {"abs_R2", r.abs_r2},
                       {"abs_T2", r.abs_t2},
                       {"defect", r.defect},
                       {"method", std::string(to_string(r.method))},
                       {"resonance_flag", r.resonant ? 1 : 0},
                       {"discrepancy", r.discrepancy}});
    }
    return array.dump(2) + "\n";
  }

  std::string out =
      "g,N,phi,re_R,im_R,re_T,im_T,abs_R2,abs_T2,defect,method,"
      "resonance_flag,discrepancy\n";
  for (const SweepRecord& r : records) {
    out += format_number(r.g) + ',';
    out += std::to_string(r.gap) + ',';
    for (double v : {r.phi, r.reflection.real(), r.reflection.imag(),
                     r.transmission.real(), r.transmission.imag(), r.abs_r2,
                     r.abs_t2, r.defect}) {
      out += format_number(v) + ',';
    }
    out += std::string(to_string(r.method)) + ',';
    out += r.resonant ? "1," : "0,";
    out += format_number(r.discrepancy) + '\n';
  }
  return out;
}

unsigned thread_count_from_env() {
  if (const char* env = std::getenv("THREADS")) {
    int value = 0;
    std::string_view const text(env);
    auto const [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) {
      return static_cast<unsigned>(value);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace nhscat
