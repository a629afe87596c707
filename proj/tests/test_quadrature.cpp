#include "doctest.h"

#include <cmath>
#include <complex>

#include "chermite/errors.hpp"
#include "chermite/hermite.hpp"
#include "chermite/quadrature.hpp"

using namespace chermite;
using cd = std::complex<double>;

namespace {

double rel_err(cd a, cd b) { return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b))); }

}  // namespace

TEST_CASE("raw rule integrates against exp(-s^2) exactly for low moments") {
  QuadratureRule rule(64, 1.0);
  const auto& s = rule.raw_nodes();
  const auto& w = rule.raw_weights();

  // int e^{-s^2} s^{2k} ds = Gamma(k + 1/2)
  for (int k = 0; k <= 10; ++k) {
    double quad = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) quad += w[i] * std::pow(s[i], 2 * k);
    double exact = std::tgamma(k + 0.5);
    CAPTURE(k);
    CHECK(std::abs(quad - exact) / exact <= 1e-12);
  }
  // odd moments vanish by symmetry
  double odd = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) odd += w[i] * std::pow(s[i], 5);
  CHECK(std::abs(odd) <= 1e-12);

  // exactness holds right up to degree 2n - 1 on a small rule
  QuadratureRule small(8, 1.0);
  double quad14 = 0.0;
  for (int i = 0; i < 8; ++i) {
    quad14 += small.raw_weights()[i] * std::pow(small.raw_nodes()[i], 14);
  }
  double exact14 = std::tgamma(7.5);  // degree 14 <= 2*8 - 1
  CHECK(std::abs(quad14 - exact14) / exact14 <= 1e-13);
}

TEST_CASE("rule construction guards") {
  CHECK_THROWS_AS(QuadratureRule(1, 1.0), DomainError);
  CHECK_THROWS_AS(QuadratureRule(16, 0.0), DomainError);
  CHECK_THROWS_AS(QuadratureRule(16, -2.0), DomainError);
  QuadratureRule rule(16, 1.0);
  CHECK_THROWS_AS(rule.with_scale(-1.0), DomainError);
  CHECK(rule.with_scale(2.0).scale() == 2.0);
  CHECK(rule.with_scale(2.0).nodes_per_axis() == 16);
}

TEST_CASE("plane integration of Gaussian integrands") {
  QuadratureRule rule(64, 1.0);

  cd plain = integrate_plane([](cd xi) { return std::exp(-std::norm(xi)); }, rule);
  CHECK(std::abs(plain - cd(M_PI, 0.0)) <= 1e-12);

  cd shifted = integrate_plane(
      [](cd xi) { return std::exp(-std::norm(xi) + xi + std::conj(xi)); }, rule);
  CHECK(std::abs(shifted - cd(M_PI * std::exp(1.0), 0.0)) <= 1e-10);

  cd moment = integrate_plane([](cd xi) { return std::norm(xi) * std::exp(-std::norm(xi)); },
                              rule);
  CHECK(std::abs(moment - cd(M_PI, 0.0)) <= 1e-12);
}

TEST_CASE("closed Gaussian integral") {
  CHECK(rel_err(gaussian_integral_closed(2.0, 0.0, 0.0), cd(M_PI / 2.0, 0.0)) <= 1e-15);
  CHECK(rel_err(gaussian_integral_closed(1.0, 1.0, 1.0), cd(M_PI * std::exp(1.0), 0.0)) <= 1e-15);
  CHECK(rel_err(gaussian_integral_closed(1.0, cd{0.0, 1.0}, cd{0.0, 1.0}),
                cd(M_PI * std::exp(-1.0), 0.0)) <= 1e-15);
  CHECK_THROWS_AS(gaussian_integral_closed(0.0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(gaussian_integral_closed(-1.0, 0.0, 0.0), DomainError);
}

TEST_CASE("quadrature reproduces the closed Gaussian integral") {
  QuadratureRule rule(64, 1.0);
  const cd alphas[] = {{0.0, 0.0}, {1.5, 0.5}, {-0.7, 1.8}, {0.0, -2.0}};
  const cd betas[] = {{0.3, -1.1}, {2.0, 0.0}, {-1.3, -0.4}};
  for (double gamma : {0.5, 1.0, 2.0}) {
    QuadratureRule adapted = rule.with_scale(gamma);
    for (cd alpha : alphas) {
      for (cd beta : betas) {
        cd quad = integrate_plane(
            [&](cd xi) {
              return std::exp(-gamma * std::norm(xi) + alpha * xi + beta * std::conj(xi));
            },
            adapted);
        cd closed = gaussian_integral_closed(gamma, alpha, beta);
        CAPTURE(gamma);
        CAPTURE(alpha);
        CAPTURE(beta);
        CHECK(rel_err(quad, closed) <= 1e-10);
      }
    }
  }
}

TEST_CASE("integral representation of the complex Hermite polynomials") {
  QuadratureRule rule(64, 1.0);
  IntegralRepParams unit;  // mu = 1, alpha = i, beta = -i, so nu = 1
  CHECK(unit.nu() == doctest::Approx(1.0));

  CHECK(rel_err(chp_integral_rep(0, 0, cd{0.7, -0.4}, unit, rule), cd{1.0, 0.0}) <= 1e-10);
  CHECK(rel_err(chp_integral_rep(1, 1, cd{0.0, 0.0}, unit, rule), cd{-1.0, 0.0}) <= 1e-8);
  CHECK(std::abs(chp_integral_rep(2, 1, cd{1.0, 1.0}, unit, rule)) <= 1e-8);

  // three-way agreement with the recurrence on a small grid
  const cd zs[] = {{0.0, 0.0}, {0.5, -0.3}, {1.2, 0.9}, {-1.7, 0.4}};
  for (double nu : {0.5, 1.0, 2.0}) {
    double s = std::sqrt(nu);  // mu = 1
    IntegralRepParams params{1.0, cd{0.0, s}, cd{0.0, -s}};
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n + m <= 4; ++n) {
        for (cd z : zs) {
          cd via_integral = chp_integral_rep(m, n, z, params, rule);
          cd via_recurrence = chp_eval(m, n, z, nu);
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(nu);
          CAPTURE(z);
          CHECK(rel_err(via_integral, via_recurrence) <= 1e-8);
        }
      }
    }
  }

  IntegralRepParams bad{1.0, cd{1.0, 0.0}, cd{0.0, 1.0}};  // alpha*beta imaginary
  CHECK_THROWS_AS(bad.nu(), DomainError);
  IntegralRepParams negative{1.0, cd{0.0, 1.0}, cd{0.0, 1.0}};  // alpha*beta = -1
  CHECK_THROWS_AS(negative.nu(), DomainError);
}

TEST_CASE("norms and orthogonality") {
  QuadratureRule rule(64, 1.0);
  CHECK(norm_squared_closed(0, 0, 2.0) == doctest::Approx(M_PI / 2.0));
  CHECK(norm_squared_closed(1, 2, 1.0) == doctest::Approx(2.0 * M_PI));

  CHECK(std::abs(norm_squared_quad(0, 0, 2.0, rule) - M_PI / 2.0) / (M_PI / 2.0) <= 1e-10);
  CHECK(std::abs(norm_squared_quad(1, 2, 1.0, rule) - 2.0 * M_PI) / (2.0 * M_PI) <= 1e-10);

  for (double nu : {0.5, 1.0, 2.0}) {
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n + m <= 3; ++n) {
        double quad = norm_squared_quad(m, n, nu, rule);
        double closed = norm_squared_closed(m, n, nu);
        CHECK(std::abs(quad - closed) / closed <= 1e-8);
      }
    }
  }

  // cross terms vanish
  CHECK(std::abs(inner_product_quad(0, 0, 1, 0, 1.0, rule)) <= 1e-10);
  CHECK(std::abs(inner_product_quad(2, 1, 1, 2, 1.5, rule)) <= 1e-10);
  CHECK(std::abs(inner_product_quad(1, 1, 0, 0, 0.5, rule)) <= 1e-10);
}

TEST_CASE("self-reciprocity under the Fourier-type transform") {
  QuadratureRule rule(96, 1.0);

  // u = v = 0 collapses to the plain Gaussian integral, pi/nu'
  auto base = self_reciprocity_check(0, 0, 0.0, 0.0, cd{0.4, 0.2}, 1.0, 2.0, rule);
  CHECK(base.pass);
  CHECK(rel_err(base.lhs, cd(M_PI / 2.0, 0.0)) <= 1e-10);
  CHECK(rel_err(base.rhs, cd(M_PI / 2.0, 0.0)) <= 1e-14);

  auto simple = self_reciprocity_check(0, 1, cd{0.5, 0.0}, cd{0.5, 0.0}, cd{0.3, 0.0}, 1.0, 1.0,
                                       rule);
  CHECK(simple.pass);
  CHECK(simple.rel_err <= 1e-6);

  auto general = self_reciprocity_check(2, 1, cd{0.3, 0.0}, cd{0.2, 0.0}, cd{0.5, -0.4}, 1.0,
                                        2.0, rule);
  CHECK(general.pass);
  CHECK(general.rel_err <= 1e-6);

  // the sign-variant exponent grouping disagrees at nonzero u, v and the
  // report records by how much
  REQUIRE(simple.meta.count("sign_variant_rel_err") == 1);
  CHECK(std::stod(simple.meta.at("sign_variant_rel_err")) > 1e-3);

  // complex u, v with real product
  cd u = std::polar(0.45, 0.8);
  cd v = std::polar(0.45, -0.8);
  auto complex_case = self_reciprocity_check(1, 2, u, v, cd{0.6, 0.3}, 0.8, 1.4, rule);
  CHECK(complex_case.pass);

  CHECK_THROWS_AS(self_reciprocity_check(0, 0, cd{2.0, 0.0}, cd{1.0, 0.0}, 0.0, 1.0, 1.0, rule),
                  DomainError);  // 1 - nu nu' uv <= 0
  CHECK_THROWS_AS(self_reciprocity_check(0, 0, cd{0.5, 0.0}, cd{0.0, 0.5}, 0.0, 1.0, 1.0, rule),
                  DomainError);  // uv not real
}

TEST_CASE("Fourier eigenfunction identity") {
  QuadratureRule rule(96, 1.0);

  cd z{0.8, -0.5};
  auto base = fourier_eigen_check(0, 0, z, rule);
  CHECK(base.pass);
  CHECK(rel_err(base.lhs, cd(2.0 * M_PI * std::exp(-0.5 * std::norm(z)), 0.0)) <= 1e-10);

  auto first = fourier_eigen_check(1, 0, cd{0.5, 0.0}, rule);
  CHECK(first.pass);
  CHECK(first.rhs.real() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(first.rhs.imag() == doctest::Approx(M_PI * std::exp(-0.125)));
  CHECK(rel_err(first.lhs, first.rhs) <= 1e-6);

  auto diag = fourier_eigen_check(2, 2, cd{1.0, 1.0}, rule);
  CHECK(diag.pass);
  CHECK(diag.rel_err <= 1e-6);

  for (int j = 0; j <= 4; ++j) {
    for (int k = 0; k <= 4; ++k) {
      auto r = fourier_eigen_check(j, k, cd{0.9, 0.7}, rule);
      CAPTURE(j);
      CAPTURE(k);
      CHECK(r.rel_err <= 1e-6);
    }
  }
}
