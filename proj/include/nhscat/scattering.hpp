#pragma once

#include <vector>

#include "nhscat/banded.hpp"
#include "nhscat/lattice.hpp"
#include "nhscat/potential.hpp"

namespace nhscat {

/// Reflection and transmission amplitudes for unit incidence from the left.
struct Amplitudes {
  complex reflection;
  complex transmission;
  double unitarity_defect = 0.0;  // | |R|^2 + |T|^2 - 1 |
  EnergyAngle phi;
};

Amplitudes make_amplitudes(complex reflection, complex transmission,
                           EnergyAngle phi);

/// | |R|^2 + |T|^2 - 1 |, recomputed from R and T.
double unitarity_defect(const Amplitudes& amp) noexcept;

/// | |R|^2 + (theta_right / theta_left) |T|^2 - 1 |: the flux balance in the
/// metric inner product when the asymptotic metric differs on the two sides.
double flux_defect(const Amplitudes& amp, double theta_left,
                   double theta_right) noexcept;

/// Discrete Schrodinger rows at sites first_row..last_row with the outer
/// wavefunction replaced by its asymptotic form.
///
/// Unknowns are ordered [R, psi_{first_row+1}, ..., psi_{last_row-1}, T]:
/// psi_k = e^{ik phi} + R e^{-ik phi} for k <= first_row and
/// psi_k = T e^{ik phi} for k >= last_row. The incoming e^{ik phi} parts sit
/// on the right-hand side. For the two-center model the rows run over
/// [-(N+3), N+3], giving 2N+7 conditions.
struct MatchingSystem {
  int first_row;
  int last_row;
  EnergyAngle phi;
  BandMatrix matrix;
  std::vector<complex> rhs;

  [[nodiscard]] int size() const noexcept { return matrix.size(); }
};

/// Requires first_row < last_row, every row outside [first_row, last_row]
/// free, and rows first_row - 1 .. last_row + 1 inside the window.
MatchingSystem build_matching_system(const BandedOperator& hamiltonian,
                                     int first_row, int last_row,
                                     EnergyAngle phi);

/// Rows at which the layout's matching system starts and ends.
void matching_rows(const BandedOperator& potential, int& first_row,
                   int& last_row);

/// Unknown vector of a full wavefunction in the system's layout.
std::vector<complex> matching_unknowns(const MatchingSystem& system,
                                       complex reflection,
                                       complex transmission,
                                       const WaveSample& wave);

/// max_i |(A x - b)_i| / (sum_j |A_ij x_j| + |b_i|).
double matching_residual(const MatchingSystem& system,
                         const std::vector<complex>& unknowns);

struct NumericSolution {
  Amplitudes amplitudes;
  WaveSample wave;           // psi over the fitting window, asymptotics included
  double matching_residual;  // relative, worst row
  double flux_defect;        // metric-weighted; equals unitarity defect when
                             // the asymptotic metric is 1 on both sides
};

/// Solves the matching system by banded LU with partial pivoting.
/// Throws ResonanceError if it is singular, plus any spec validation error.
NumericSolution solve_numeric(const ScattererLayout& layout, EnergyAngle phi);

struct PlaneWaveFit {
  complex c;  // coefficient of e^{ik phi}
  complex d;  // coefficient of e^{-ik phi}
  double residual;  // max_k |psi_k - C e^{ik phi} - D e^{-ik phi}|
};

/// Least-squares fit of psi_k = C e^{ik phi} + D e^{-ik phi} over |k| <= gap.
/// Throws DomainError for gap < 1.
PlaneWaveFit interior_plane_wave_fit(const WaveSample& wave, int gap,
                                     EnergyAngle phi);

}  // namespace nhscat
