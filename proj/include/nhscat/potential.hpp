#pragma once

#include <variant>
#include <vector>

#include "nhscat/banded.hpp"
#include "nhscat/lattice.hpp"

namespace nhscat {

/// Antisymmetric nearest-neighbour chain with couplings (a, b, c, ...).
///
/// Sites carry the odd labels ..., -3, -1, +1, +3, ... mapped onto
/// consecutive lattice sites: label 2k-1 sits at site k. The coupling a
/// lives on the central bond (0, 1), b on the bonds (-1, 0) and (1, 2), and
/// so on outwards. Each bond (k, k+1) with coupling c contributes
/// V(k+1, k) = +c and V(k, k+1) = -c.
struct ChainSpec {
  std::vector<double> couplings;
};

/// Two three-site scatterers of strength g centred at sites -(N+2) and N+2,
/// separated by 2N+1 free sites. N = -1 merges them around the origin.
struct TwoCenterSpec {
  double g = 0.0;
  int gap = 0;
};

/// One three-site scatterer.
struct Scatterer {
  int center = 0;
  double g = 0.0;
};

/// Any number of scatterers. Neighbouring centres must be at least two
/// sites apart: disjoint blocks, or blocks sharing one edge site as in the
/// N = -1 two-center model.
struct MultiCenterSpec {
  std::vector<Scatterer> scatterers;
};

using ScattererLayout = std::variant<TwoCenterSpec, ChainSpec, MultiCenterSpec>;

/// Throws PositivityError on |coupling| >= 1, DomainError on other defects.
void validate(const ChainSpec& spec);
void validate(const TwoCenterSpec& spec);
void validate(const MultiCenterSpec& spec);
void validate(const ScattererLayout& layout);

/// Coupling index (1 = a, 2 = b, ...) of the chain bond (site, site + 1).
int chain_bond_index(int site) noexcept;

MultiCenterSpec as_multi_center(const TwoCenterSpec& spec);

/// Largest |site| carrying a nonzero potential entry (0 for no entries).
int support_radius(const ScattererLayout& layout);

/// Smallest symmetric window holding the layout plus `margin` free sites.
SiteWindow fitting_window(const ScattererLayout& layout, int margin = 2);

/// -Laplacian: 2 on the diagonal, -1 on both neighbouring diagonals.
BandedOperator build_laplacian(SiteWindow window);

/// Throws WindowError unless window.half_width() >= couplings.size() + 1.
BandedOperator build_chain_potential(const ChainSpec& spec, SiteWindow window);

/// Each block centred at c holds V(c-1, c) = -g, V(c, c-1) = V(c, c+1) = +g
/// and V(c+1, c) = -g. Throws WindowError unless half_width >= N + 4.
BandedOperator build_two_center_potential(const TwoCenterSpec& spec,
                                          SiteWindow window);

/// Same block convention per scatterer; overlapping entries superpose.
BandedOperator build_multi_center_potential(const MultiCenterSpec& spec,
                                            SiteWindow window);

BandedOperator build_potential(const ScattererLayout& layout,
                               SiteWindow window);

/// H = -Laplacian + V. Throws WindowError when the windows differ.
BandedOperator assemble_hamiltonian(const BandedOperator& potential,
                                    SiteWindow window);

}  // namespace nhscat
