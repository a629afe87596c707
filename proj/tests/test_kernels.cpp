#include "doctest.h"

#include <cmath>
#include <complex>

#include "chermite/errors.hpp"
#include "chermite/kernels.hpp"

using namespace chermite;
using cd = std::complex<double>;

namespace {

double rel_err(cd a, cd b) { return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b))); }

}  // namespace

TEST_CASE("classical Mehler kernel") {
  CHECK(classical_mehler_closed(0.0, 1.3, -0.4) == doctest::Approx(1.0));
  CHECK(classical_mehler_closed(0.5, 0.0, 0.0) == doctest::Approx(2.0 / std::sqrt(3.0)));

  TruncationSpec t40{40, 1e-8};
  auto at_origin = classical_mehler_series(0.5, 0.0, 0.0, t40);
  CHECK(std::abs(at_origin.value.real() - 2.0 / std::sqrt(3.0)) <= 1e-10);

  auto s = classical_mehler_series(0.3, 1.0, -1.0, t40);
  CHECK(std::abs(s.value.real() - classical_mehler_closed(0.3, 1.0, -1.0)) <= 1e-10);

  TruncationSpec t5{5, 1e-8};
  CHECK(classical_mehler_series(0.0, 0.7, 0.7, t5).value.real() == doctest::Approx(1.0));

  CHECK_THROWS_AS(classical_mehler_closed(1.0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(classical_mehler_closed(-1.2, 0.0, 0.0), DomainError);
  TruncationSpec t10{10, 1e-8};
  CHECK_THROWS_AS(classical_mehler_series(0.99, 1.0, 1.0, t10), ConvergenceError);
}

TEST_CASE("exponential generating function") {
  TruncationSpec t30{30, 1e-8};
  KernelArgs zero{0.0, 0.0, cd{1.2, -0.7}, 0.0, 1.3, 1.0};
  CHECK(egf_closed(zero) == cd{1.0, 0.0});
  CHECK(egf_series(zero, t30).value == cd{1.0, 0.0});

  KernelArgs simple{1.0, 0.0, cd{2.0, 0.0}, 0.0, 1.0, 1.0};
  CHECK(egf_closed(simple).real() == doctest::Approx(std::exp(2.0)));

  KernelArgs mixed{cd{0.3, 0.0}, cd{-0.4, 0.0}, cd{1.0, 1.0}, 0.0, 1.5, 1.0};
  CHECK(rel_err(egf_series(mixed, t30).value, egf_closed(mixed)) <= 1e-11);

  KernelArgs complex_args{cd{0.2, 0.4}, cd{-0.1, 0.3}, cd{-0.8, 1.6}, 0.0, 0.7, 1.0};
  CHECK(rel_err(egf_series(complex_args, t30).value, egf_closed(complex_args)) <= 1e-11);
}

TEST_CASE("single-index generating function") {
  TruncationSpec t40{40, 1e-8};
  cd zeta{0.6, -0.2};
  cd w{1.0, 0.5};
  CHECK(rel_err(gf_single_closed(0, zeta, w, 1.2), std::exp(1.2 * zeta * w)) <= 1e-15);
  CHECK(std::abs(gf_single_closed(1, std::conj(w), w, 2.0)) == 0.0);
  auto series = gf_single_series(2, cd{0.4, 0.0}, cd{1.0, -0.5}, 2.0, t40);
  CHECK(rel_err(series.value, gf_single_closed(2, cd{0.4, 0.0}, cd{1.0, -0.5}, 2.0)) <= 1e-10);
}

TEST_CASE("one-index kernel sum") {
  TruncationSpec t50{50, 1e-8};
  cd z{0.8, 0.3};
  cd w{-0.4, 0.6};
  double nu = 1.4;
  // m = m' = 0 collapses to the Gaussian pairing
  CHECK(rel_err(partial_mehler_closed(0, 0, z, w, nu), std::exp(nu * w * std::conj(z))) <= 1e-15);
  // m = m', z = w gives nu^m m! e^{nu |z|^2}
  CHECK(rel_err(partial_mehler_closed(3, 3, z, z, nu),
                cd(std::pow(nu, 3) * 6.0 * std::exp(nu * std::norm(z)), 0.0)) <= 1e-12);
  auto series = partial_mehler_series(1, 2, cd{0.5, 0.0}, cd{0.0, 0.2}, 1.0, t50);
  CHECK(rel_err(series.value, partial_mehler_closed(1, 2, cd{0.5, 0.0}, cd{0.0, 0.2}, 1.0)) <=
        1e-9);
  for (int m = 0; m <= 3; ++m) {
    for (int mp = 0; mp <= 3; ++mp) {
      auto r = partial_mehler_series(m, mp, z, w, nu, t50);
      CAPTURE(m);
      CAPTURE(mp);
      CHECK(rel_err(r.value, partial_mehler_closed(m, mp, z, w, nu)) <= 1e-9);
    }
  }
}

TEST_CASE("first Mehler formula") {
  TruncationSpec t40{40, 1e-8};
  cd z{0.5, 0.2};
  cd w{-0.3, 0.0};
  double nu = 1.0;

  KernelArgs u0{0.0, 0.0, z, w, nu, nu};
  CHECK(rel_err(mehler1_closed(u0), partial_mehler_closed(0, 0, z, w, nu)) <= 1e-15);

  KernelArgs diag{cd{0.5, 0.0}, 0.0, cd{1.0, 0.0}, cd{1.0, 0.0}, 1.0, 1.0};
  CHECK(rel_err(mehler1_closed(diag), cd(2.0 * std::exp(1.0), 0.0)) <= 1e-15);

  KernelArgs args{cd{0.4, 0.0}, 0.0, z, w, nu, nu};
  CHECK(rel_err(mehler1_series(args, t40).value, mehler1_closed(args)) <= 1e-9);

  KernelArgs complex_u{cd{-0.2, 0.5}, 0.0, cd{0.3, -0.4}, cd{0.1, 0.6}, 0.7, 0.7};
  CHECK(rel_err(mehler1_series(complex_u, t40).value, mehler1_closed(complex_u)) <= 1e-9);

  KernelArgs at_pole{cd{1.0, 0.0}, 0.0, z, w, nu, nu};
  CHECK_THROWS_AS(mehler1_closed(at_pole), DomainError);
  KernelArgs past_pole{cd{1.2, 0.0}, 0.0, z, w, nu, nu};
  CHECK_THROWS_AS(mehler1_closed(past_pole), DomainError);
  KernelArgs near_pole{cd{0.96, 0.0}, 0.0, z, w, nu, nu};
  CHECK_THROWS_AS(mehler1_series(near_pole, t40), DomainError);
}

TEST_CASE("first Mehler formula: Hermitian symmetry in z and w for real u") {
  const cd zs[] = {{0.4, 0.3}, {-0.6, 0.1}};
  const cd ws[] = {{0.2, -0.5}, {0.6, 0.6}};
  for (double u : {-0.7, 0.0, 0.35, 0.6}) {
    for (cd z : zs) {
      for (cd w : ws) {
        KernelArgs fwd{u, 0.0, z, w, 1.3, 1.3};
        KernelArgs swp{u, 0.0, w, z, 1.3, 1.3};
        CHECK(rel_err(std::conj(mehler1_closed(fwd)), mehler1_closed(swp)) <= 1e-13);
      }
    }
  }
}

TEST_CASE("first Mehler formula equals the Laguerre generating-function route") {
  // For real u: sum_m u^m L_m(nu |z-w|^2) e^{nu w zbar}
  cd z{0.5, 0.3};
  cd w{-0.2, 0.1};
  for (double nu : {0.5, 1.0, 2.0}) {
    for (double u : {-0.5, 0.2, 0.6}) {
      double x = nu * std::norm(z - w);
      cd laguerre_route{};
      double um = 1.0;
      for (int m = 0; m <= 60; ++m) {
        laguerre_route += um * laguerre_eval(m, 0.0, x);
        um *= u;
      }
      laguerre_route *= std::exp(nu * w * std::conj(z));
      KernelArgs args{u, 0.0, z, w, nu, nu};
      CHECK(rel_err(laguerre_route, mehler1_closed(args)) <= 1e-9);
    }
  }
}

TEST_CASE("second Mehler formula") {
  TruncationSpec t40{40, 1e-8};
  KernelArgs zero{0.0, 0.0, cd{1.0, 0.5}, cd{-0.3, 0.2}, 0.7, 1.9};
  CHECK(mehler2_closed(zero) == cd{1.0, 0.0});
  CHECK(mehler2_series(zero, t40).value == cd{1.0, 0.0});

  // nu = nu' = 0.5, u = v = 1, z = w = 1 evaluates to (4/3) e^{1/3}
  KernelArgs special{1.0, 1.0, 1.0, 1.0, 0.5, 0.5};
  CHECK(rel_err(mehler2_closed(special), cd(4.0 / 3.0 * std::exp(1.0 / 3.0), 0.0)) <= 1e-14);
  CHECK(rel_err(mehler2_series(special, t40).value, mehler2_closed(special)) <= 1e-9);

  // nu = nu' = 1 reduces to the simplified closed form
  cd u{0.5, 0.2};
  cd v = std::conj(u) * (0.3 / std::norm(u));
  double uv = (u * v).real();
  KernelArgs pc1{u, v, cd{0.7, -0.2}, cd{-0.5, 0.4}, 1.0, 1.0};
  cd num = u * pc1.z * pc1.w + v * std::conj(pc1.z) * std::conj(pc1.w) -
           (std::norm(pc1.z) + std::norm(pc1.w)) * uv;
  cd simplified = std::exp(num / (1.0 - uv)) / (1.0 - uv);
  CHECK(rel_err(mehler2_closed(pc1), simplified) <= 1e-14);

  // different nu and nu', negative real uv
  KernelArgs general{cd{0.0, 0.8}, cd{0.0, 0.5}, cd{0.9, 0.1}, cd{-0.2, 0.7}, 0.6, 1.8};
  CHECK((general.u * general.v).real() < 0.0);
  CHECK(rel_err(mehler2_series(general, t40).value, mehler2_closed(general)) <= 1e-9);

  // exchange symmetry: swapping (z, nu, u) with (w, nu', v) and conjugating
  // the points leaves the kernel unchanged (the cross terms u z w and
  // v zbar wbar trade places under the conjugation)
  KernelArgs swapped{general.v,        general.u,
                     std::conj(general.w), std::conj(general.z),
                     general.nu_prime, general.nu};
  CHECK(rel_err(mehler2_closed(general), mehler2_closed(swapped)) <= 1e-13);

  // for real z and w the plain swap is already symmetric
  KernelArgs real_pts{cd{0.4, 0.0}, cd{0.7, 0.0}, cd{1.1, 0.0}, cd{-0.6, 0.0}, 0.9, 1.4};
  KernelArgs real_swp{real_pts.v, real_pts.u, real_pts.w, real_pts.z, real_pts.nu_prime,
                      real_pts.nu};
  CHECK(rel_err(mehler2_closed(real_pts), mehler2_closed(real_swp)) <= 1e-13);

  KernelArgs not_real{cd{0.5, 0.0}, cd{0.0, 0.5}, 0.0, 0.0, 1.0, 1.0};
  CHECK_THROWS_AS(mehler2_closed(not_real), DomainError);
  KernelArgs past_pole{2.0, 1.0, 0.0, 0.0, 1.0, 1.0};
  CHECK_THROWS_AS(mehler2_closed(past_pole), DomainError);
}

TEST_CASE("specialized identities") {
  TruncationSpec t40{40, 1e-8};
  TruncationSpec t60{60, 1e-8};

  SUBCASE("diagonal sum with z = 0 is a geometric series") {
    SpecializedParams p;
    p.lambda = 0.35;
    p.nu = 1.2;
    p.z = 0.0;
    auto [series, closed] = specialized_identity(SpecializedId::kMehler3, p, t60);
    double expected = 1.0 / (1.0 + p.lambda * p.nu);
    CHECK(rel_err(series, cd(expected, 0.0)) <= 1e-12);
    CHECK(rel_err(closed, cd(expected, 0.0)) <= 1e-15);
  }

  SUBCASE("squared-modulus sum at u = v = 0") {
    SpecializedParams p;
    p.u = p.v = 0.0;
    p.z = cd{1.0, -0.4};
    p.nu = 1.5;
    auto [series, closed] = specialized_identity(SpecializedId::kMehler1SqMod, p, t40);
    CHECK(series == cd{1.0, 0.0});
    CHECK(closed == cd{1.0, 0.0});
  }

  SUBCASE("plain-square sum residual") {
    SpecializedParams p;
    p.u = cd{0.2, 0.0};
    p.v = cd{0.3, 0.0};
    p.z = cd{1.0, 0.5};
    p.nu = 1.0;
    auto [series, closed] = specialized_identity(SpecializedId::kMehler2Sq, p, t40);
    CHECK(rel_err(series, closed) <= 1e-9);
  }

  SUBCASE("squared-modulus sum residual with complex u, v") {
    SpecializedParams p;
    p.u = std::polar(0.5, 1.1);
    p.v = std::polar(0.6, -1.1);
    p.z = cd{0.8, -0.6};
    p.nu = 1.1;
    auto [series, closed] = specialized_identity(SpecializedId::kMehler1SqMod, p, t40);
    CHECK(rel_err(series, closed) <= 1e-9);
  }

  SUBCASE("u = v = 1 sum") {
    SpecializedParams p;
    p.z = cd{1.1, 0.3};
    p.w = cd{-0.4, 0.9};
    p.nu = 0.8;
    p.nu_prime = 0.5;
    auto [series, closed] = specialized_identity(SpecializedId::kMehler0, p, t40);
    CHECK(rel_err(series, closed) <= 1e-9);
  }

  SUBCASE("validity regions enforced") {
    SpecializedParams p;
    p.nu = 1.0;
    p.nu_prime = 1.2;
    CHECK_THROWS_AS(specialized_identity(SpecializedId::kMehler0, p, t40), DomainError);
    SpecializedParams q;
    q.lambda = 1.5;
    q.nu = 1.0;
    CHECK_THROWS_AS(specialized_identity(SpecializedId::kMehler3, q, t60), DomainError);
  }
}

TEST_CASE("heat kernel") {
  TruncationSpec t40{40, 1e-8};
  TruncationSpec t160{160, 1e-8};

  // long-time limit approaches (nu/pi) e^{nu z0 zbar}
  HeatArgs late{50.0, cd{0.6, -0.2}, cd{0.3, 0.1}, 1.0};
  cd limit = 1.0 / M_PI * std::exp(late.z0 * std::conj(late.z));
  CHECK(rel_err(heat_kernel_closed(late), limit) <= 1e-12);

  // definitional composition with the first Mehler kernel
  HeatArgs args{0.7, cd{0.4, 0.0}, cd{0.1, 0.3}, 1.0};
  KernelArgs m1{std::exp(-args.nu * args.t), 0.0, args.z, args.z0, args.nu, args.nu};
  CHECK(heat_kernel_closed(args) == args.nu / M_PI * mehler1_closed(m1));

  CHECK(rel_err(heat_kernel_series(args, t40).value, heat_kernel_closed(args)) <= 1e-9);

  // spectral consistency across the documented (t, nu) grid
  for (double t : {0.5, 1.0, 2.0}) {
    for (double nu : {0.5, 1.0, 2.0}) {
      HeatArgs h{t, cd{0.5, -0.3}, cd{-0.2, 0.4}, nu};
      CAPTURE(t);
      CAPTURE(nu);
      CHECK(rel_err(heat_kernel_series(h, t160).value, heat_kernel_closed(h)) <= 1e-9);
    }
  }

  // positivity on the diagonal
  for (double t : {0.25, 1.0, 4.0}) {
    HeatArgs h{t, cd{0.8, 0.5}, cd{0.8, 0.5}, 1.3};
    cd k = heat_kernel_closed(h);
    CHECK(k.real() > 0.0);
    CHECK(std::abs(k.imag()) <= 1e-13 * k.real());
  }

  CHECK_THROWS_AS(heat_kernel_closed(HeatArgs{0.0, 0.0, 0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(heat_kernel_closed(HeatArgs{-1.0, 0.0, 0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(heat_kernel_series(HeatArgs{0.0, 0.0, 0.0, 1.0}, t40), DomainError);
}

TEST_CASE("truncation spec is validated") {
  KernelArgs args{cd{0.2, 0.0}, cd{0.1, 0.0}, cd{0.5, 0.5}, 0.0, 1.0, 1.0};
  CHECK_THROWS_AS(egf_series(args, TruncationSpec{0, 1e-8}), DomainError);
  CHECK_THROWS_AS(egf_series(args, TruncationSpec{-3, 1e-8}), DomainError);
  CHECK_THROWS_AS(egf_series(args, TruncationSpec{10, 0.0}), DomainError);
  CHECK_THROWS_AS(egf_series(args, TruncationSpec{10, -1.0}), DomainError);
}

TEST_CASE("sign-flawed heat kernel variant disagrees with the spectral sum") {
  TruncationSpec t160{160, 1e-8};
  HeatArgs args{1.0, cd{0.3, 0.0}, cd{0.0, 0.0}, 1.0};
  cd printed = heat_kernel_printed(args);
  cd series = heat_kernel_series(args, t160).value;
  CHECK(printed.real() < 0.0);
  CHECK(series.real() > 0.0);
  CHECK(rel_err(printed, series) > 1e-2);
}
