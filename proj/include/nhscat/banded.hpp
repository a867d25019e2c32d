#pragma once

#include <span>
#include <vector>

#include "nhscat/lattice.hpp"

namespace nhscat {

/// Complex tridiagonal operator stored over a site window.
///
/// `upper()[i]` is the entry (k, k+1) and `lower()[i]` the entry (k+1, k)
/// for k = window.first() + i.
class BandedOperator {
 public:
  /// Zero operator on the window.
  explicit BandedOperator(SiteWindow window);
  BandedOperator(SiteWindow window, std::vector<complex> diagonal,
                 std::vector<complex> upper, std::vector<complex> lower);

  [[nodiscard]] const SiteWindow& window() const noexcept { return window_; }
  [[nodiscard]] std::span<const complex> diagonal() const& noexcept {
    return diagonal_;
  }
  std::span<const complex> diagonal() const&& = delete;
  [[nodiscard]] std::span<const complex> upper() const& noexcept {
    return upper_;
  }
  std::span<const complex> upper() const&& = delete;
  [[nodiscard]] std::span<const complex> lower() const& noexcept {
    return lower_;
  }
  std::span<const complex> lower() const&& = delete;

  /// Entry (row, col) by site index; zero outside the band. Throws
  /// WindowError if either site lies outside the window.
  [[nodiscard]] complex at(int row, int col) const;

  /// Adds `value` to the entry (row, col); |row - col| must be <= 1.
  void add(int row, int col, complex value);

  [[nodiscard]] BandedOperator transposed() const;
  [[nodiscard]] bool is_zero() const noexcept;

  /// Smallest and largest site whose row holds a nonzero entry. Returns
  /// false when the operator is zero.
  bool row_support(int& first, int& last) const noexcept;

  /// Largest |A_ij - B_ij| over the band.
  friend double max_abs_difference(const BandedOperator& a,
                                   const BandedOperator& b);

 private:
  complex* slot(int row, int col);

  SiteWindow window_;
  std::vector<complex> diagonal_;
  std::vector<complex> upper_;
  std::vector<complex> lower_;
};

/// General band matrix for LU solves, with `lower` sub- and `upper`
/// super-diagonals. Extra storage holds the fill created by row exchanges.
class BandMatrix {
 public:
  BandMatrix(int size, int lower, int upper);

  [[nodiscard]] int size() const noexcept { return size_; }
  [[nodiscard]] int lower_bandwidth() const noexcept { return lower_; }
  [[nodiscard]] int upper_bandwidth() const noexcept { return upper_; }

  /// Entry inside the band; zero (const) outside it.
  [[nodiscard]] complex at(int row, int col) const noexcept;
  complex& operator()(int row, int col);

  /// y = A x.
  [[nodiscard]] std::vector<complex> multiply(std::span<const complex> x) const;
  [[nodiscard]] double max_abs() const noexcept;

 private:
  friend std::vector<complex> solve_banded(BandMatrix, std::vector<complex>,
                                           double);
  [[nodiscard]] bool stored(int row, int col) const noexcept;
  [[nodiscard]] std::size_t offset(int row, int col) const noexcept;

  int size_;
  int lower_;
  int upper_;
  int width_;
  std::vector<complex> data_;
};

/// Solves A x = b by banded LU with partial pivoting.
///
/// Throws ResonanceError when a pivot falls below
/// `pivot_tolerance * max|A_ij|`.
std::vector<complex> solve_banded(BandMatrix a, std::vector<complex> b,
                                  double pivot_tolerance = 1e-13);

}  // namespace nhscat
