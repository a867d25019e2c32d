#include "nhscat/banded.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nhscat/errors.hpp"

namespace nhscat {

BandedOperator::BandedOperator(SiteWindow window)
    : window_(window),
      diagonal_(window.size()),
      upper_(window.size() - 1),
      lower_(window.size() - 1) {}

BandedOperator::BandedOperator(SiteWindow window, std::vector<complex> diagonal,
                               std::vector<complex> upper,
                               std::vector<complex> lower)
    : window_(window),
      diagonal_(std::move(diagonal)),
      upper_(std::move(upper)),
      lower_(std::move(lower)) {
  if (diagonal_.size() != window_.size() ||
      upper_.size() + 1 != window_.size() ||
      lower_.size() + 1 != window_.size()) {
    throw WindowError("band lengths do not match the site window");
  }
}

complex BandedOperator::at(int row, int col) const {
  std::size_t const i = window_.index(row);
  std::size_t const j = window_.index(col);
  if (i == j) return diagonal_[i];
  if (j == i + 1) return upper_[i];
  if (i == j + 1) return lower_[j];
  return {};
}

complex* BandedOperator::slot(int row, int col) {
  std::size_t const i = window_.index(row);
  std::size_t const j = window_.index(col);
  if (i == j) return &diagonal_[i];
  if (j == i + 1) return &upper_[i];
  if (i == j + 1) return &lower_[j];
  return nullptr;
}

void BandedOperator::add(int row, int col, complex value) {
  complex* entry = slot(row, col);
  if (entry == nullptr) {
    throw DomainError("entry (" + std::to_string(row) + ", " +
                      std::to_string(col) + ") lies outside bandwidth 1");
  }
  *entry += value;
}

BandedOperator BandedOperator::transposed() const {
  return BandedOperator(window_, diagonal_, lower_, upper_);
}

bool BandedOperator::is_zero() const noexcept {
  auto zero = [](complex z) { return z == complex{}; };
  return std::all_of(diagonal_.begin(), diagonal_.end(), zero) &&
         std::all_of(upper_.begin(), upper_.end(), zero) &&
         std::all_of(lower_.begin(), lower_.end(), zero);
}

bool BandedOperator::row_support(int& first, int& last) const noexcept {
  bool found = false;
  for (int k = window_.first(); k <= window_.last(); ++k) {
    auto const i = static_cast<std::size_t>(k - window_.first());
    bool nonzero = diagonal_[i] != complex{};
    if (i < upper_.size()) nonzero = nonzero || upper_[i] != complex{};
    if (i > 0) nonzero = nonzero || lower_[i - 1] != complex{};
    if (!nonzero) continue;
    if (!found) first = k;
    last = k;
    found = true;
  }
  return found;
}

double max_abs_difference(const BandedOperator& a, const BandedOperator& b) {
  if (!(a.window_ == b.window_)) {
    throw WindowError("operators live on different windows");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.diagonal_.size(); ++i) {
    worst = std::max(worst, std::abs(a.diagonal_[i] - b.diagonal_[i]));
  }
  for (std::size_t i = 0; i < a.upper_.size(); ++i) {
    worst = std::max(worst, std::abs(a.upper_[i] - b.upper_[i]));
    worst = std::max(worst, std::abs(a.lower_[i] - b.lower_[i]));
  }
  return worst;
}

// Row i stores columns [i - lower, i + upper + lower]; the extra `lower`
// columns on the right receive fill from pivoting.
BandMatrix::BandMatrix(int size, int lower, int upper)
    : size_(size),
      lower_(lower),
      upper_(upper),
      width_(2 * lower + upper + 1),
      data_(static_cast<std::size_t>(size) * (2 * lower + upper + 1)) {
  if (size < 1 || lower < 0 || upper < 0) {
    throw DomainError("invalid band matrix shape");
  }
}

bool BandMatrix::stored(int row, int col) const noexcept {
  return row >= 0 && row < size_ && col >= 0 && col < size_ &&
         col >= row - lower_ && col <= row + upper_ + lower_;
}

std::size_t BandMatrix::offset(int row, int col) const noexcept {
  return static_cast<std::size_t>(row) * width_ +
         static_cast<std::size_t>(col - row + lower_);
}

complex BandMatrix::at(int row, int col) const noexcept {
  return stored(row, col) ? data_[offset(row, col)] : complex{};
}

complex& BandMatrix::operator()(int row, int col) {
  if (!stored(row, col) || col > row + upper_) {
    throw DomainError("band matrix entry (" + std::to_string(row) + ", " +
                      std::to_string(col) + ") outside the band");
  }
  return data_[offset(row, col)];
}

std::vector<complex> BandMatrix::multiply(std::span<const complex> x) const {
  std::vector<complex> y(static_cast<std::size_t>(size_));
  for (int i = 0; i < size_; ++i) {
    int const lo = std::max(0, i - lower_);
    int const hi = std::min(size_ - 1, i + upper_ + lower_);
    for (int j = lo; j <= hi; ++j) y[i] += at(i, j) * x[j];
  }
  return y;
}

double BandMatrix::max_abs() const noexcept {
  double worst = 0.0;
  for (complex z : data_) worst = std::max(worst, std::abs(z));
  return worst;
}

std::vector<complex> solve_banded(BandMatrix a, std::vector<complex> b,
                                  double pivot_tolerance) {
  int const n = a.size();
  if (static_cast<int>(b.size()) != n) {
    throw DomainError("right-hand side length does not match the matrix");
  }
  int const kl = a.lower_;
  int const reach = a.upper_ + a.lower_;
  double const threshold = pivot_tolerance * std::max(1.0, a.max_abs());

  for (int k = 0; k < n; ++k) {
    int const last_row = std::min(n - 1, k + kl);
    int const last_col = std::min(n - 1, k + reach);

    int pivot = k;
    double best = std::abs(a.at(k, k));
    for (int i = k + 1; i <= last_row; ++i) {
      double const candidate = std::abs(a.at(i, k));
      if (candidate > best) {
        best = candidate;
        pivot = i;
      }
    }
    if (best < threshold) {
      throw ResonanceError("singular matching system (pivot " +
                           std::to_string(best) + " in column " +
                           std::to_string(k) + ")");
    }
    if (pivot != k) {
      for (int j = k; j <= last_col; ++j) {
        std::swap(a.data_[a.offset(k, j)], a.data_[a.offset(pivot, j)]);
      }
      std::swap(b[k], b[pivot]);
    }

    complex const diag = a.data_[a.offset(k, k)];
    for (int i = k + 1; i <= last_row; ++i) {
      complex& lead = a.data_[a.offset(i, k)];
      if (lead == complex{}) continue;
      complex const factor = lead / diag;
      lead = {};
      for (int j = k + 1; j <= last_col; ++j) {
        a.data_[a.offset(i, j)] -= factor * a.data_[a.offset(k, j)];
      }
      b[i] -= factor * b[k];
    }
  }

  for (int i = n - 1; i >= 0; --i) {
    int const last_col = std::min(n - 1, i + reach);
    complex sum = b[i];
    for (int j = i + 1; j <= last_col; ++j) {
      sum -= a.data_[a.offset(i, j)] * b[j];
    }
    b[i] = sum / a.data_[a.offset(i, i)];
  }
  return b;
}

}  // namespace nhscat
