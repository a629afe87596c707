#include "doctest.h"

#include <cmath>
#include <complex>

#include "chermite/errors.hpp"
#include "chermite/hermite.hpp"

using namespace chermite;
using cd = std::complex<double>;

namespace {

// Independent oracle: build H_{m,n} by symbolic differentiation of the
// Gaussian product form. Writing F = f e^{-nu z zbar}, each d/dz maps
// f -> df/dz - nu zbar f and each d/dzbar maps f -> df/dzbar - nu z f;
// the polynomial is (-1)^{m+n} times the result of n z-derivatives followed
// by m zbar-derivatives applied to f = 1.
TriPoly rodrigues_chp(int m, int n) {
  TriPoly f = TriPoly::constant(BigInt{1});
  for (int i = 0; i < n; ++i) f = f.d_z() - f.shifted(0, 1, 1);
  for (int i = 0; i < m; ++i) f = f.d_zbar() - f.shifted(1, 0, 1);
  if ((m + n) % 2 != 0) f = -f;
  return f;
}

double rel_err(cd a, cd b) { return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b))); }

TriPoly zm(int a, int b, int c, long long coeff) {
  return TriPoly::term(Monomial{a, b, c}, BigInt{coeff});
}

}  // namespace

TEST_CASE("explicit sum matches the Rodrigues construction for m, n <= 6") {
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(chp_poly(m, n) == rodrigues_chp(m, n));
    }
  }
}

TEST_CASE("chp_poly small cases") {
  CHECK(chp_poly(0, 0) == TriPoly::constant(BigInt{1}));
  // nu^2 z zbar - nu
  CHECK(chp_poly(1, 1) == zm(1, 1, 2, 1) - zm(0, 0, 1, 1));
  // nu^3 z^2 zbar - 2 nu^2 z
  CHECK(chp_poly(2, 1) == zm(2, 1, 3, 1) - zm(1, 0, 2, 2));
}

TEST_CASE("degree and leading monomial") {
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      TriPoly p = chp_poly(m, n);
      CHECK(p.degree_zzbar() == m + n);
      auto it = p.terms().find(Monomial{m, n, m + n});
      REQUIRE(it != p.terms().end());
      CHECK(it->second == BigInt{1});
    }
  }
}

TEST_CASE("chp_eval examples") {
  CHECK(rel_err(chp_eval(2, 1, cd{1.0, 1.0}, 1.0), 0.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(chp_eval(0, 0, cd{3.0, -1.0}, 1.0) == cd{1.0, 0.0});
  CHECK(chp_eval(1, 1, cd{1.0, 0.0}, 2.0).real() == doctest::Approx(2.0));
}

TEST_CASE("recurrence equals exact polynomial evaluation, m+n <= 20") {
  // Both routes run in plain double. Up to m+n = 12 they agree to 1e-12 on
  // this grid; by m+n = 20 the explicit sum cancels through terms ~1e4 times
  // larger than the value, so a few more digits are genuinely lost (measured
  // worst case 3.4e-11 against a 50-digit reference).
  const cd zs[] = {{0.0, 0.0}, {0.5, -0.3}, {1.0, 1.0}, {-2.5, 1.7}, {4.0, 0.0}, {-1.0, -3.8}};
  const double nus[] = {0.25, 1.0, 4.0};
  for (int m = 0; m <= 20; ++m) {
    for (int n = 0; m + n <= 20; ++n) {
      TriPoly p = chp_poly(m, n);
      double tolerance = (m + n <= 12) ? 1e-12 : 1e-10;
      for (cd z : zs) {
        for (double nu : nus) {
          cd exact = p.eval(z, nu);
          cd rec = chp_eval(m, n, z, nu);
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(z);
          CAPTURE(nu);
          CHECK(rel_err(exact, rec) <= tolerance);
        }
      }
    }
  }
}

TEST_CASE("tables agree with single-point evaluation") {
  const cd z{0.8, -0.6};
  const double nu = 1.7;
  auto h = chp_table(6, 7, z, nu);
  auto g = chp_table_scaled(6, 7, z, nu);
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 7; ++n) {
      cd direct = chp_eval(m, n, z, nu);
      CHECK(rel_err(h[m][n], direct) <= 1e-13);
      double scale = std::pow(nu, 0.5 * (m + n)) *
                     std::sqrt(factorial_double(m) * factorial_double(n));
      CHECK(rel_err(g[m][n] * scale, direct) <= 1e-13);
    }
  }
}

TEST_CASE("conjugation symmetry: swapping indices conjugates the value") {
  const cd zs[] = {{0.7, 0.2}, {-1.3, 2.1}, {0.0, -0.9}};
  const double nus[] = {0.5, 1.0, 3.0};
  for (int m = 0; m <= 7; ++m) {
    for (int n = 0; n <= 7; ++n) {
      for (cd z : zs) {
        for (double nu : nus) {
          cd a = chp_eval(n, m, z, nu);
          cd b = std::conj(chp_eval(m, n, z, nu));
          CHECK(rel_err(a, b) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("zero value is the weighted Kronecker delta, exactly") {
  for (int m = 0; m <= 12; ++m) {
    for (int n = 0; n <= 12; ++n) {
      for (double nu : {0.25, 1.0, 3.0}) {
        cd via_eval = chp_eval(m, n, cd{0.0, 0.0}, nu);
        cd direct = chp_zero_value(m, n, nu);
        CHECK(via_eval == direct);
      }
    }
  }
  CHECK(chp_zero_value(2, 2, 1.0) == cd{2.0, 0.0});
  CHECK(chp_zero_value(1, 2, 0.7) == cd{0.0, 0.0});
  CHECK(chp_zero_value(1, 1, 3.0) == cd{-3.0, 0.0});
}

TEST_CASE("real Hermite polynomials") {
  CHECK(real_hermite_eval(0, 2.37) == 1.0);
  CHECK(real_hermite_eval(1, 0.5) == doctest::Approx(1.0));
  CHECK(real_hermite_eval(2, 1.0) == doctest::Approx(2.0));
  CHECK(real_hermite_eval(3, 0.5) == doctest::Approx(-5.0));
  // H_10(x) = 1024 x^10 - 23040 x^8 + 161280 x^6 - 403200 x^4 + 302400 x^2 - 30240
  double x = 0.8;
  double h10 = ((((1024 * x * x - 23040) * x * x + 161280) * x * x - 403200) * x * x + 302400) *
                   x * x -
               30240;
  CHECK(real_hermite_eval(10, x) == doctest::Approx(h10).epsilon(1e-12));
}

TEST_CASE("Laguerre polynomials") {
  CHECK(laguerre_eval(0, 0.0, 5.0) == 1.0);
  CHECK(laguerre_eval(1, 0.0, 2.0) == doctest::Approx(-1.0));
  CHECK(laguerre_eval(2, 0.0, 1.0) == doctest::Approx(-0.5));
  // L^{(1)}_2(x) = x^2/2 - 3x + 3
  CHECK(laguerre_eval(2, 1.0, 2.0) == doctest::Approx(2.0 - 6.0 + 3.0));
}

TEST_CASE("magnetic Laplacian on polynomials") {
  CHECK(magnetic_laplacian_apply(TriPoly::constant(BigInt{1})).is_zero());
  TriPoly h11 = chp_poly(1, 1);
  CHECK(magnetic_laplacian_apply(h11) == h11.shifted(0, 0, 1));  // eigenvalue 1 * nu
  CHECK(magnetic_laplacian_apply(chp_poly(0, 2)).is_zero());     // eigenvalue 0
}

TEST_CASE("eigen-equation holds exactly for all m, n <= 10") {
  for (int m = 0; m <= 10; ++m) {
    for (int n = 0; n <= 10; ++n) {
      TriPoly h = chp_poly(m, n);
      CAPTURE(m);
      CAPTURE(n);
      CHECK(magnetic_laplacian_apply(h) == h.shifted(0, 0, 1) * BigInt{m});
    }
  }
}

TEST_CASE("diagonal Laguerre identity") {
  auto [a0, b0] = diagonal_laguerre_check(0, EvalPoint{cd{0.3, -2.0}, 1.7});
  CHECK(a0 == cd{1.0, 0.0});
  CHECK(b0 == cd{1.0, 0.0});

  auto [a1, b1] = diagonal_laguerre_check(1, EvalPoint{cd{1.0, 0.0}, 1.0});
  CHECK(std::abs(a1) <= 1e-14);
  CHECK(std::abs(b1) <= 1e-14);

  auto [a2, b2] = diagonal_laguerre_check(2, EvalPoint{cd{0.0, 0.0}, 2.0});
  CHECK(a2.real() == doctest::Approx(8.0));
  CHECK(b2.real() == doctest::Approx(8.0));

  // sampled over nu |z|^2 <= 4; past that the diagonal recurrence itself
  // cancels below 1e-11 in double precision
  const cd zs[] = {{0.9, 0.4}, {-1.3, 0.6}, {2.0, 0.0}, {1.0, -0.8}};
  const double nus[] = {0.25, 1.0, 2.0};
  for (int m = 0; m <= 15; ++m) {
    for (cd z : zs) {
      for (double nu : nus) {
        if (nu * std::norm(z) > 4.0) continue;
        auto [hermite_side, laguerre_side] = diagonal_laguerre_check(m, EvalPoint{z, nu});
        CAPTURE(m);
        CAPTURE(z);
        CAPTURE(nu);
        CHECK(rel_err(hermite_side, laguerre_side) <= 1e-11);
      }
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(chp_eval(1, 1, cd{0.0, 0.0}, -1.0), DomainError);
  CHECK_THROWS_AS(chp_eval(1, 1, cd{0.0, 0.0}, 0.0), DomainError);
  CHECK_THROWS_AS(chp_eval(-1, 0, cd{0.0, 0.0}, 1.0), DomainError);
  CHECK_THROWS_AS(chp_poly(-2, 0), DomainError);
}
