#include <doctest.h>

#include <random>

#include "nhscat/banded.hpp"
#include "nhscat/errors.hpp"
#include "oracles.hpp"

using namespace nhscat;

namespace {

struct Random {
  std::mt19937_64 engine{20240611};
  std::uniform_real_distribution<double> dist{-1.0, 1.0};
  complex operator()() { return {dist(engine), dist(engine)}; }
};

}  // namespace

TEST_CASE("banded LU agrees with dense elimination") {
  Random rnd;
  for (int n : {1, 2, 3, 7, 40, 120}) {
    for (auto [kl, ku] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{0, 2}}) {
      BandMatrix a(n, kl, ku);
      oracle::DenseMatrix dense(n, std::vector<complex>(n));
      for (int i = 0; i < n; ++i) {
        for (int j = std::max(0, i - kl); j <= std::min(n - 1, i + ku); ++j) {
          complex const v = rnd();
          a(i, j) = v;
          dense[i][j] = v;
        }
      }
      std::vector<complex> b(n);
      for (complex& x : b) x = rnd();
      auto const x = solve_banded(a, b);
      auto const y = oracle::dense_solve(dense, b);
      double worst = 0.0;
      double scale = 0.0;
      for (int i = 0; i < n; ++i) {
        worst = std::max(worst, std::abs(x[i] - y[i]));
        scale = std::max(scale, std::abs(y[i]));
      }
      CHECK(worst <= 1e-10 * scale);
      // Backward error of the LU solve, normwise.
      auto const ax = a.multiply(x);
      double residual = 0.0;
      for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(ax[i] - b[i]));
      CHECK(residual <= 1e-13 * (3.0 * a.max_abs() * scale + 1.0));
    }
  }
}

TEST_CASE("pivoting handles a zero leading entry") {
  BandMatrix a(3, 1, 1);
  a(0, 1) = 1.0;
  a(1, 0) = 1.0;
  a(1, 2) = 2.0;
  a(2, 1) = 3.0;
  a(2, 2) = 1.0;
  auto const x = solve_banded(a, {1.0, 5.0, 7.0});
  auto const ax = a.multiply(x);
  CHECK(std::abs(ax[0] - 1.0) < 1e-15);
  CHECK(std::abs(ax[1] - 5.0) < 1e-15);
  CHECK(std::abs(ax[2] - 7.0) < 1e-15);
}

TEST_CASE("singular band matrix raises ResonanceError") {
  BandMatrix a(3, 1, 1);
  a(0, 0) = 1.0;
  a(0, 1) = 2.0;
  a(1, 0) = 2.0;
  a(1, 1) = 4.0;
  a(2, 2) = 1.0;
  CHECK_THROWS_AS(solve_banded(a, {1.0, 1.0, 1.0}), ResonanceError);
}

TEST_CASE("banded operator storage") {
  SiteWindow const w(2);
  BandedOperator op(w);
  CHECK(op.is_zero());
  int first = 0;
  int last = 0;
  CHECK_FALSE(op.row_support(first, last));
  op.add(-1, 0, 2.0);
  op.add(0, -1, -3.0);
  op.add(1, 1, 0.5);
  CHECK(op.at(-1, 0) == complex(2.0));
  CHECK(op.at(0, -1) == complex(-3.0));
  CHECK(op.at(-2, 2) == complex(0.0));
  CHECK_THROWS_AS(op.add(0, 2, 1.0), Error);
  CHECK_THROWS_AS(static_cast<void>(op.at(3, 3)), WindowError);
  REQUIRE(op.row_support(first, last));
  CHECK(first == -1);
  CHECK(last == 1);

  BandedOperator const t = op.transposed();
  CHECK(t.at(0, -1) == complex(2.0));
  CHECK(t.at(-1, 0) == complex(-3.0));
  CHECK(max_abs_difference(op, t.transposed()) == 0.0);

  CHECK_THROWS_AS(BandedOperator(w, std::vector<complex>(5),
                                 std::vector<complex>(3),
                                 std::vector<complex>(4)),
                  WindowError);
}
