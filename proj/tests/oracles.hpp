#pragma once

// Independent reference computations. Nothing here calls the library.

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using DenseMatrix = std::vector<std::vector<cplx>>;
using Potential = std::function<double(int, int)>;

// Gaussian elimination with full pivoting.
inline std::vector<cplx> dense_solve(DenseMatrix a, std::vector<cplx> b) {
  std::size_t const n = b.size();
  std::vector<std::size_t> col(n);
  for (std::size_t i = 0; i < n; ++i) col[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k;
    std::size_t pc = k;
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        if (std::abs(a[i][j]) > std::abs(a[pr][pc])) {
          pr = i;
          pc = j;
        }
      }
    }
    if (std::abs(a[pr][pc]) == 0.0) throw std::runtime_error("singular");
    std::swap(a[k], a[pr]);
    std::swap(b[k], b[pr]);
    for (auto& row : a) std::swap(row[k], row[pc]);
    std::swap(col[k], col[pc]);
    for (std::size_t i = k + 1; i < n; ++i) {
      cplx const f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<cplx> y(n);
  for (std::size_t k = n; k-- > 0;) {
    cplx s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[k][j] * y[j];
    y[k] = s / a[k][k];
  }
  std::vector<cplx> x(n);
  for (std::size_t k = 0; k < n; ++k) x[col[k]] = y[k];
  return x;
}

// Two scatterers at -(gap+2) and gap+2, written out entry by entry.
inline double two_center_v(double g, int gap, int i, int j) {
  double v = 0.0;
  for (int c : {-(gap + 2), gap + 2}) {
    if (i == c - 1 && j == c) v -= g;
    if (i == c && j == c - 1) v += g;
    if (i == c && j == c + 1) v += g;
    if (i == c + 1 && j == c) v -= g;
  }
  return v;
}

struct Amp {
  cplx r;
  cplx t;
};

// Integrates (H - E) psi = 0 from the right, starting from a pure outgoing
// wave, and reads off the incoming and reflected parts on the left.
// `support` bounds |i|, |j| for every nonzero V(i, j).
inline Amp transfer_matrix(const Potential& v, int support, double phi) {
  auto plane = [phi](int k, double sign) {
    return std::exp(cplx(0.0, sign * k * phi));
  };
  int const top = support + 2;
  int const bottom = -support - 3;
  std::vector<cplx> psi(static_cast<std::size_t>(top - bottom + 1));
  auto at = [&](int k) -> cplx& { return psi[static_cast<std::size_t>(k - bottom)]; };
  at(top) = plane(top, 1.0);
  at(top - 1) = plane(top - 1, 1.0);
  for (int k = top - 1; k > bottom; --k) {
    cplx const up = -1.0 + v(k, k + 1);
    cplx const down = -1.0 + v(k, k - 1);
    at(k - 1) = -(2.0 * std::cos(phi) * at(k) + up * at(k + 1)) / down;
  }
  // psi_m = A e^{i m phi} + B e^{-i m phi} at m = bottom, bottom + 1.
  int const m0 = bottom;
  int const m1 = bottom + 1;
  cplx const det = plane(m0, 1.0) * plane(m1, -1.0) - plane(m0, -1.0) * plane(m1, 1.0);
  cplx const a = (at(m0) * plane(m1, -1.0) - plane(m0, -1.0) * at(m1)) / det;
  cplx const b = (plane(m0, 1.0) * at(m1) - at(m0) * plane(m1, 1.0)) / det;
  return {b / a, 1.0 / a};
}

// Diagonal metric solving conj(H_ji) theta_j = theta_i H_ij bond by bond,
// theta at `first` set to 1. Real tridiagonal H with H_ij = -1 + V(i, j).
inline std::vector<double> brute_force_metric(const Potential& v, int first,
                                              int last) {
  std::vector<double> theta{1.0};
  for (int k = first; k < last; ++k) {
    double const up = -1.0 + v(k, k + 1);
    double const down = -1.0 + v(k + 1, k);
    theta.push_back(theta.back() * up / down);
  }
  return theta;
}

}  // namespace oracle
