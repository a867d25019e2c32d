#include "nhscat/potential.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "nhscat/errors.hpp"

namespace nhscat {

namespace {

void check_coupling(double g, const char* what) {
  if (!std::isfinite(g) || std::abs(g) >= 1.0) {
    throw PositivityError(std::string(what) + " " + std::to_string(g) +
                          " outside (-1, 1)");
  }
}

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

void validate(const ChainSpec& spec) {
  if (spec.couplings.empty()) {
    throw DomainError("chain needs at least one coupling");
  }
  for (double c : spec.couplings) check_coupling(c, "chain coupling");
}

void validate(const TwoCenterSpec& spec) {
  check_coupling(spec.g, "coupling g");
  if (spec.gap < -1) {
    throw DomainError("gap N must be >= -1, got " + std::to_string(spec.gap));
  }
}

void validate(const MultiCenterSpec& spec) {
  if (spec.scatterers.empty()) {
    throw DomainError("multi-center layout needs at least one scatterer");
  }
  std::vector<int> centers;
  for (const Scatterer& s : spec.scatterers) {
    check_coupling(s.g, "coupling g");
    centers.push_back(s.center);
  }
  std::sort(centers.begin(), centers.end());
  for (std::size_t i = 1; i < centers.size(); ++i) {
    if (centers[i] - centers[i - 1] < 2) {
      throw DomainError("scatterers at " + std::to_string(centers[i - 1]) +
                        " and " + std::to_string(centers[i]) +
                        " overlap; centres must be >= 2 sites apart");
    }
  }
}

void validate(const ScattererLayout& layout) {
  std::visit([](const auto& spec) { validate(spec); }, layout);
}

int chain_bond_index(int site) noexcept {
  return site >= 0 ? site + 1 : 1 - site;
}

MultiCenterSpec as_multi_center(const TwoCenterSpec& spec) {
  int const c = spec.gap + 2;
  return MultiCenterSpec{{{-c, spec.g}, {c, spec.g}}};
}

int support_radius(const ScattererLayout& layout) {
  return std::visit(
      overloaded{
          [](const TwoCenterSpec& s) { return s.gap + 3; },
          [](const ChainSpec& s) { return static_cast<int>(s.couplings.size()); },
          [](const MultiCenterSpec& s) {
            int radius = 0;
            for (const Scatterer& sc : s.scatterers) {
              radius = std::max(radius, std::abs(sc.center) + 1);
            }
            return radius;
          },
      },
      layout);
}

SiteWindow fitting_window(const ScattererLayout& layout, int margin) {
  return SiteWindow(std::max(1, support_radius(layout) + margin));
}

BandedOperator build_laplacian(SiteWindow window) {
  std::size_t const n = window.size();
  return BandedOperator(window, std::vector<complex>(n, 2.0),
                        std::vector<complex>(n - 1, -1.0),
                        std::vector<complex>(n - 1, -1.0));
}

BandedOperator build_chain_potential(const ChainSpec& spec, SiteWindow window) {
  validate(spec);
  int const count = static_cast<int>(spec.couplings.size());
  if (window.half_width() < count + 1) {
    throw WindowError("window half width " +
                      std::to_string(window.half_width()) + " cannot hold " +
                      std::to_string(count) + " chain couplings");
  }
  BandedOperator v(window);
  for (int k = window.first(); k < window.last(); ++k) {
    int const j = chain_bond_index(k);
    if (j > count) continue;
    double const c = spec.couplings[j - 1];
    v.add(k + 1, k, c);
    v.add(k, k + 1, -c);
  }
  return v;
}

BandedOperator build_multi_center_potential(const MultiCenterSpec& spec,
                                            SiteWindow window) {
  validate(spec);
  BandedOperator v(window);
  for (const Scatterer& s : spec.scatterers) {
    int const c = s.center;
    if (!window.contains(c - 2) || !window.contains(c + 2)) {
      throw WindowError("window half width " +
                        std::to_string(window.half_width()) +
                        " cannot hold a scatterer at " + std::to_string(c));
    }
    v.add(c - 1, c, -s.g);
    v.add(c, c - 1, s.g);
    v.add(c, c + 1, s.g);
    v.add(c + 1, c, -s.g);
  }
  return v;
}

BandedOperator build_two_center_potential(const TwoCenterSpec& spec,
                                          SiteWindow window) {
  validate(spec);
  if (window.half_width() < spec.gap + 4) {
    throw WindowError("window half width " +
                      std::to_string(window.half_width()) +
                      " too small for gap " + std::to_string(spec.gap));
  }
  return build_multi_center_potential(as_multi_center(spec), window);
}

BandedOperator build_potential(const ScattererLayout& layout,
                               SiteWindow window) {
  return std::visit(
      overloaded{
          [&](const TwoCenterSpec& s) {
            return build_two_center_potential(s, window);
          },
          [&](const ChainSpec& s) { return build_chain_potential(s, window); },
          [&](const MultiCenterSpec& s) {
            return build_multi_center_potential(s, window);
          },
      },
      layout);
}

BandedOperator assemble_hamiltonian(const BandedOperator& potential,
                                    SiteWindow window) {
  if (!(potential.window() == window)) {
    throw WindowError("potential window does not match the Hamiltonian window");
  }
  BandedOperator h = build_laplacian(window);
  for (int k = window.first(); k <= window.last(); ++k) {
    for (int j = std::max(window.first(), k - 1);
         j <= std::min(window.last(), k + 1); ++j) {
      complex const entry = potential.at(k, j);
      if (entry != complex{}) h.add(k, j, entry);
    }
  }
  return h;
}

}  // namespace nhscat
