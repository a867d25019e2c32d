#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nhscat/errors.hpp"
#include "nhscat/probe.hpp"
#include "nhscat/sweep.hpp"
#include "nhscat/verify.hpp"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResonance = 3, kIo = 4 };

struct Args {
  std::string model = "two-center";
  std::vector<double> g{0.5};
  std::vector<int> gaps{0};
  std::vector<double> couplings;
  std::vector<int> centers;
  double phi = 1.0;
  std::string phi_grid;
  std::string method = "numeric";
  std::string format = "csv";
  std::string out;
  std::optional<double> tolerance;
  std::string suite = "all";
  double kappa = 1.0;
  double h0 = 0.2;
  int halvings = 6;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
  } else {
    nhscat::write_text_file(path, text);
  }
}

nhscat::PointSpec point_spec(const Args& a) {
  nhscat::PointSpec spec;
  spec.model = nhscat::parse_model(a.model);
  if (a.g.size() != 1 || a.gaps.size() != 1) {
    throw nhscat::UsageError("amplitudes takes a single --g and --N");
  }
  spec.g = a.g.front();
  spec.gap = a.gaps.front();
  spec.chain_couplings = a.couplings;
  spec.centers = a.centers;
  if (spec.model == nhscat::Model::chain) {
    if (a.couplings.empty()) {
      throw nhscat::UsageError("chain model needs --couplings");
    }
    for (double c : a.couplings) nhscat::require_coupling(c);
  } else {
    nhscat::require_coupling(spec.g);
    if (spec.model == nhscat::Model::two_center && spec.gap < -1) {
      throw nhscat::UsageError("N must be >= -1");
    }
    if (spec.model == nhscat::Model::multi_center && a.centers.empty()) {
      throw nhscat::UsageError("multi-center model needs --centers");
    }
  }
  return spec;
}

int cmd_amplitudes(const Args& a) {
  nhscat::PointSpec const spec = point_spec(a);
  nhscat::Method const method = nhscat::parse_method(a.method);
  if (!(a.phi > 0.0 && a.phi < std::numbers::pi)) {
    throw nhscat::UsageError("phi must lie in (0, pi)");
  }
  auto const records = nhscat::evaluate_point(spec, a.phi, method, false);
  emit(nhscat::format_records(records, nhscat::parse_format(a.format)), a.out);
  return kOk;
}

int cmd_sweep(const Args& a) {
  nhscat::SweepConfig config;
  config.model = nhscat::parse_model(a.model);
  config.g_grid = a.g;
  config.gap_grid = a.gaps;
  config.chain_couplings = a.couplings;
  config.centers = a.centers;
  if (!a.phi_grid.empty()) config.phi_grid = nhscat::PhiGrid::parse(a.phi_grid);
  config.method = nhscat::parse_method(a.method);
  config.format = nhscat::parse_format(a.format);
  config.out_path = a.out;
  auto const records =
      nhscat::run_sweep(config, nhscat::thread_count_from_env());
  emit(nhscat::format_records(records, config.format), config.out_path);
  return kOk;
}

int cmd_verify(const Args& a) {
  nhscat::VerifyOptions options;
  options.suite = nhscat::parse_suite(a.suite);
  options.tolerance = a.tolerance;
  options.model = nhscat::parse_model(a.model);
  options.chain_couplings = a.couplings;
  auto const results = nhscat::run_verify(options);
  emit(nhscat::format_verify_report(results), a.out);
  return nhscat::all_passed(results) ? kOk : kVerifyFailed;
}

int cmd_probe(const Args& a) {
  if (a.g.size() != 1) throw nhscat::UsageError("probe takes a single --g");
  double const g = a.g.front();
  nhscat::require_coupling(g);
  if (g == 0.0) throw nhscat::UsageError("free model has no wall limit");
  if (a.halvings < 1) throw nhscat::UsageError("need at least one halving");
  if (!(a.h0 > 0.0)) throw nhscat::UsageError("h0 must be positive");
  if (!(a.kappa > 0.0)) throw nhscat::UsageError("kappa must be positive");
  std::vector<double> const spacings = nhscat::halving_sequence(a.h0, a.halvings);
  nhscat::ProbeTable const table = nhscat::continuum_probe(g, a.kappa, spacings);

  using nhscat::format_number;
  std::string out;
  if (nhscat::parse_format(a.format) == nhscat::OutputFormat::csv) {
    out = "g,kappa,h,phi,abs_T_closed,abs_R_closed,abs_T_numeric,abs_psi0,"
          "T_exponent,psi0_exponent\n";
    for (const nhscat::ProbeRow& r : table.rows) {
      for (double v : {table.g, table.kappa, r.h, r.phi, r.abs_t_closed,
                       r.abs_r_closed, r.abs_t_numeric, r.abs_psi0,
                       table.t_exponent}) {
        out += format_number(v) + ',';
      }
      out += format_number(table.psi0_exponent) + '\n';
    }
  } else {
    out = "[\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      const nhscat::ProbeRow& r = table.rows[i];
      out += "  {\"g\": " + format_number(table.g) +
             ", \"kappa\": " + format_number(table.kappa) +
             ", \"h\": " + format_number(r.h) +
             ", \"phi\": " + format_number(r.phi) +
             ", \"abs_T_closed\": " + format_number(r.abs_t_closed) +
             ", \"abs_R_closed\": " + format_number(r.abs_r_closed) +
             ", \"abs_T_numeric\": " + format_number(r.abs_t_numeric) +
             ", \"abs_psi0\": " + format_number(r.abs_psi0) +
             ", \"T_exponent\": " + format_number(table.t_exponent) +
             ", \"psi0_exponent\": " + format_number(table.psi0_exponent) +
             (i + 1 < table.rows.size() ? "},\n" : "}\n");
    }
    out += "]\n";
  }
  emit(out, a.out);

  bool const linear = table.t_exponent >= 0.9 && table.t_exponent <= 1.1 &&
                      table.psi0_exponent >= 0.9 && table.psi0_exponent <= 1.1;
  std::fprintf(stderr, "exponent |T| %.4f  |psi_0| %.4f  %s\n",
               table.t_exponent, table.psi0_exponent,
               linear ? "linear in h" : "outside [0.9, 1.1]");
  return linear ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice scattering on non-Hermitian smeared point interactions"};
  app.require_subcommand(1);
  Args a;

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", a.model, "two-center | chain | multi-center");
    sub->add_option("--couplings", a.couplings, "chain couplings")
        ->delimiter(',');
    sub->add_option("--centers", a.centers, "multi-center sites")
        ->delimiter(',');
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", a.format, "csv | json");
    sub->add_option("--out", a.out, "output file (default stdout)");
  };

  CLI::App* amplitudes = app.add_subcommand("amplitudes", "R and T at one angle");
  add_model(amplitudes);
  amplitudes->add_option("--g", a.g, "coupling")->delimiter(',');
  amplitudes->add_option("--N", a.gaps, "gap parameter, >= -1")->delimiter(',');
  amplitudes->add_option("--phi", a.phi, "angle in (0, pi)");
  amplitudes->add_option("--method", a.method, "closed | numeric | both");
  add_output(amplitudes);

  CLI::App* sweep = app.add_subcommand("sweep", "tabulate R and T over a grid");
  add_model(sweep);
  sweep->add_option("--g", a.g, "coupling grid")->delimiter(',');
  sweep->add_option("--N", a.gaps, "N grid")->delimiter(',');
  sweep->add_option("--phi-grid", a.phi_grid, "count:min:max");
  sweep->add_option("--method", a.method, "closed | numeric | both");
  add_output(sweep);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  add_model(verify);
  verify->add_option("--suite", a.suite,
                     "all | metric | unitarity | closed-vs-numeric");
  verify->add_option("--tolerance", a.tolerance, "override every tolerance");
  verify->add_option("--out", a.out, "report file (default stdout)");

  CLI::App* probe =
      app.add_subcommand("probe-continuum", "h -> 0 trend at N = -1");
  probe->add_option("--g", a.g, "coupling");
  probe->add_option("--kappa", a.kappa, "wave number, phi = kappa h");
  probe->add_option("--h0", a.h0, "largest spacing");
  probe->add_option("--halvings", a.halvings, "number of halvings");
  add_output(probe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*amplitudes) return cmd_amplitudes(a);
    if (*sweep) return cmd_sweep(a);
    if (*verify) return cmd_verify(a);
    return cmd_probe(a);
  } catch (const nhscat::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const nhscat::ResonantAngleError& e) {
    std::cerr << "error: " << e.what()
              << "\nhint: the closed form is singular here, use --method numeric\n";
    return kResonance;
  } catch (const nhscat::ResonanceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResonance;
  } catch (const nhscat::Error& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }
}
