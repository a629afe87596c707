#include "chermite/verify.hpp"

#include <cmath>
#include <sstream>

#include "chermite/errors.hpp"

namespace chermite::verify {
namespace {

using cd = std::complex<double>;
namespace tol = chermite::tolerances;

// Evaluation point used to fill the lhs/rhs fields of symbolic checks.
constexpr cd kSymbolicProbeZ{0.7, 0.3};
constexpr double kSymbolicProbeNu = 1.3;

std::vector<IdentityInfo> build_catalog() {
  std::vector<IdentityInfo> entries;
  auto add = [&entries](IdentityInfo info) { entries.push_back(std::move(info)); };

  add({"MEHLER_REAL",
       "classical Mehler kernel for real Hermite polynomials: truncated series vs closed form",
       "t in [-0.6, 0.6], x, y in [-2, 2]", tol::kMehlerReal, false, 80, 1e-8, 0, 50});
  add({"EGF",
       "exponential generating function: series vs exp(nu (u z + v zbar - u v))",
       "|u|, |v| <= 0.5, |z| <= 2, nu in [0.25, 2]", tol::kEgf, false, 30, 1e-8, 0, 50});
  add({"GF_SINGLE",
       "single-index generating function: series vs nu^m' (wbar - zeta)^m' exp(nu zeta w)",
       "m' <= 4, |zeta| <= 1.5, |w| <= 2, nu in [0.25, 2]", tol::kGfSingle, false, 40, 1e-8, 0,
       20});
  add({"PARTIAL_MEHLER",
       "one-index kernel sum vs (-1)^m' H_{m,m'}(z - w) exp(nu w zbar)",
       "m, m' <= 4, |z|, |w| <= 2, nu in [0.25, 2]", tol::kPartialMehler, false, 50, 1e-8, 0,
       20});
  add({"MEHLER1",
       "first Mehler formula: double series vs exp(nu w zbar)/(1-u) exp(-nu u |z-w|^2/(1-u))",
       "|u| <= 0.6, |z|, |w| <= 0.7, nu in [0.25, 1]", tol::kMehler1, false, 40, 1e-8, 0, 50});
  add({"MEHLER1_DIAG",
       "first Mehler formula at z = w vs exp(nu |z|^2)/(1-u)",
       "|u| <= 0.6, |z| <= 1.5, nu in [0.25, 2]", tol::kMehler1Diag, false, 0, 1e-8, 0, 20});
  add({"LAGUERRE_DIAG",
       "diagonal value H_{m,m}(z) vs (-1)^m m! nu^m L_m(nu |z|^2)",
       "m <= 15, |z| <= 2 with nu |z|^2 <= 4, nu in [0.25, 2]", tol::kLaguerreDiag, false, 0,
       1e-8, 0, 32});
  add({"EIGEN",
       "magnetic Laplacian eigen-equation Delta_nu H_{m,n} = m nu H_{m,n}, exact symbolic",
       "all m, n <= 10", tol::kEigen, false, 0, 1e-8, 0, 121});
  add({"NORM",
       "Gram matrix under weight e^{-nu |z|^2} vs (pi/nu) nu^{m+n} m! n! delta",
       "m+n, j+k <= 4, nu in {0.5, 1, 2}", tol::kNorm, false, 0, 1e-8, 64, 75});
  add({"HEAT",
       "heat kernel: spectral double sum vs (nu/pi) E1(e^{-nu t}; z, z0)",
       "t, nu in {0.5, 1, 2}, |z|, |z0| <= 1", tol::kHeat, false, 160, 1e-8, 0, 18});
  add({"HEAT_PRINTED_MISMATCH",
       "sign-flawed closed-form heat kernel variant vs the positive spectral sum "
       "(expected to fail)",
       "t in {0.5, 0.8, 1, 1.5, 2}, nu in [0.5, 2], z = z0, |z| <= 1", tol::kHeatPrintedMismatch,
       true, 160, 1e-8, 0, 5});
  add({"MEHLER2",
       "second Mehler formula: double series vs closed kernel with independent nu, nu'",
       "nu nu' uv in [-0.5, 0.5], uv real, |z|, |w| <= 1.2, nu, nu' in [0.25, 2]", tol::kMehler2,
       false, 40, 1e-8, 0, 50});
  add({"MEHLER_PC1",
       "second Mehler formula at nu = nu' = 1 vs its simplified closed form",
       "uv in [-0.5, 0.5], |z|, |w| <= 1.2", tol::kMehlerPc1, false, 40, 1e-8, 0, 20});
  add({"MEHLER0",
       "second Mehler formula at u = v = 1: series vs closed form",
       "nu nu' <= 0.5, |z|, |w| <= 1.5", tol::kMehlerSpecialized, false, 40, 1e-8, 0, 20});
  add({"MEHLER1_SQMOD",
       "squared-modulus specialization (w = zbar): series vs closed form",
       "nu^2 uv in [-0.5, 0.5], |z| <= 1.5, nu in [0.25, 2]", tol::kMehlerSpecialized, false, 40,
       1e-8, 0, 20});
  add({"MEHLER2_SQ",
       "plain-square specialization (w = z): series vs closed form",
       "nu^2 uv in [-0.5, 0.5], |z| <= 1.5, nu in [0.25, 2]", tol::kMehlerSpecialized, false, 40,
       1e-8, 0, 20});
  add({"MEHLER3",
       "diagonal sum of lambda^m/m! H_{m,m} vs (1 + lambda nu)^{-1} "
       "exp(lambda nu^2 |z|^2 / (1 + lambda nu))",
       "lambda nu in [-0.5, 0.5], |z| <= 1.5, nu in [0.25, 2]", tol::kMehlerSpecialized, false,
       60, 1e-8, 0, 20});
  add({"ZERO_VALUE",
       "value at the origin: H_{m,n}(0) = (-nu)^m m! delta_{m,n}, exact",
       "all m, n <= 12, nu in [0.25, 4]", tol::kZeroValue, false, 0, 1e-8, 0, 169});
  add({"SELF_RECIPROCITY",
       "Fourier-type transform maps weighted H_{k,j} to weighted H_{j,k}",
       "j, k <= 3, nu nu' uv in [-0.5, 0.5], uv real, |z| <= 1.5, nu, nu' in [0.5, 2]",
       tol::kSelfReciprocity, false, 0, 1e-8, 96, 10});
  add({"FOURIER_EIGEN",
       "H_{j,k} is an eigenfunction of the Fourier-type transform at nu = 1, "
       "eigenvalue 2 pi i^{j+k}",
       "j, k <= 4, |z| <= 1.5", tol::kFourierEigen, false, 0, 1e-8, 96, 10});
  add({"GAUSS_INT",
       "Gaussian plane integral: tensor quadrature vs (pi/gamma) exp(alpha beta / gamma)",
       "gamma in {0.5, 1, 2}, |alpha|, |beta| <= 2", tol::kGaussInt, false, 0, 1e-8, 64, 18});
  add({"INT_REP",
       "Gaussian integral representation of H_{m,n} vs recurrence evaluation",
       "m + n <= 8, |z| <= 2, nu in {0.5, 1, 2}, mu in [0.5, 2]", tol::kIntRep, false, 0, 1e-8,
       64, 30});
  return entries;
}

std::optional<cd> find_param(const Params& params, const std::string& name) {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  return std::nullopt;
}

cd need(const Params& params, const std::string& name) {
  auto v = find_param(params, name);
  if (!v) throw DomainError("missing parameter: " + name);
  return *v;
}

double need_real(const Params& params, const std::string& name) {
  return need(params, name).real();
}

int need_int(const Params& params, const std::string& name) {
  return static_cast<int>(std::lround(need_real(params, name)));
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// Each handler fills lhs/rhs (and possibly meta) of the report.
void dispatch(const std::string& id, const Params& params, const TruncationSpec& trunc,
              const QuadratureRule& rule, IdentityReport& report) {
  if (id == "MEHLER_REAL") {
    double t = need_real(params, "t");
    double x = need_real(params, "x");
    double y = need_real(params, "y");
    auto series = classical_mehler_series(t, x, y, trunc);
    report.lhs = series.value;
    report.rhs = classical_mehler_closed(t, x, y);
    report.meta["tail"] = fmt_double(series.tail);
  } else if (id == "EGF") {
    KernelArgs args{need(params, "u"), need(params, "v"), need(params, "z"), 0.0,
                    need_real(params, "nu"), 1.0};
    auto series = egf_series(args, trunc);
    report.lhs = series.value;
    report.rhs = egf_closed(args);
    report.meta["tail"] = fmt_double(series.tail);
  } else if (id == "GF_SINGLE") {
    int m_prime = need_int(params, "m_prime");
    cd zeta = need(params, "zeta");
    cd w = need(params, "w");
    double nu = need_real(params, "nu");
    auto series = gf_single_series(m_prime, zeta, w, nu, trunc);
    report.lhs = series.value;
    report.rhs = gf_single_closed(m_prime, zeta, w, nu);
    report.meta["tail"] = fmt_double(series.tail);
  } else if (id == "PARTIAL_MEHLER") {
    int m = need_int(params, "m");
    int m_prime = need_int(params, "m_prime");
    cd z = need(params, "z");
    cd w = need(params, "w");
    double nu = need_real(params, "nu");
    auto series = partial_mehler_series(m, m_prime, z, w, nu, trunc);
    report.lhs = series.value;
    report.rhs = partial_mehler_closed(m, m_prime, z, w, nu);
    report.meta["tail"] = fmt_double(series.tail);
  } else if (id == "MEHLER1") {
    KernelArgs args{need(params, "u"), 0.0, need(params, "z"), need(params, "w"),
                    need_real(params, "nu"), 1.0};
    auto series = mehler1_series(args, trunc);
    report.lhs = series.value;
    report.rhs = mehler1_closed(args);
    report.meta["tail"] = fmt_double(series.tail);
  } else if (id == "MEHLER1_DIAG") {
    cd u = need(params, "u");
    cd z = need(params, "z");
    double nu = need_real(params, "nu");
    KernelArgs args{u, 0.0, z, z, nu, nu};
    report.lhs = mehler1_closed(args);
    report.rhs = std::exp(nu * std::norm(z)) / (1.0 - u);
  } else if (id == "LAGUERRE_DIAG") {
    int m = need_int(params, "m");
    EvalPoint p{need(params, "z"), need_real(params, "nu")};
    auto [hermite_side, laguerre_side] = diagonal_laguerre_check(m, p);
    report.lhs = hermite_side;
    report.rhs = laguerre_side;
  } else if (id == "EIGEN") {
    int m = need_int(params, "m");
    int n = need_int(params, "n");
    TriPoly h = chp_poly(m, n);
    TriPoly applied = magnetic_laplacian_apply(h);
    TriPoly scaled = h.shifted(0, 0, 1) * BigInt{m};
    bool symbolic_equal = applied == scaled;
    report.lhs = applied.eval(kSymbolicProbeZ, kSymbolicProbeNu);
    report.rhs = scaled.eval(kSymbolicProbeZ, kSymbolicProbeNu);
    report.meta["symbolic_equal"] = symbolic_equal ? "true" : "false";
    if (!symbolic_equal) throw DomainError("eigen-equation failed symbolically");
  } else if (id == "NORM") {
    int m = need_int(params, "m");
    int n = need_int(params, "n");
    int j = need_int(params, "j");
    int k = need_int(params, "k");
    double nu = need_real(params, "nu");
    report.lhs = inner_product_quad(m, n, j, k, nu, rule);
    report.rhs = (m == j && n == k) ? cd(norm_squared_closed(m, n, nu), 0.0) : cd(0.0, 0.0);
    report.meta["nodes"] = std::to_string(rule.nodes_per_axis());
  } else if (id == "HEAT") {
    HeatArgs args{need_real(params, "t"), need(params, "z"), need(params, "z0"),
                  need_real(params, "nu")};
    auto series = heat_kernel_series(args, trunc);
    report.lhs = series.value;
    report.rhs = heat_kernel_closed(args);
    report.meta["tail"] = fmt_double(series.tail);
  } else if (id == "HEAT_PRINTED_MISMATCH") {
    HeatArgs args{need_real(params, "t"), need(params, "z"), need(params, "z0"),
                  need_real(params, "nu")};
    report.lhs = heat_kernel_printed(args);
    report.rhs = heat_kernel_series(args, trunc).value;
    report.meta["printed_prefactor_negative"] = report.lhs.real() < 0.0 ? "true" : "false";
    report.meta["series_positive"] = report.rhs.real() > 0.0 ? "true" : "false";
  } else if (id == "MEHLER2" || id == "MEHLER_PC1") {
    bool pc1 = id == "MEHLER_PC1";
    KernelArgs args{need(params, "u"),
                    need(params, "v"),
                    need(params, "z"),
                    need(params, "w"),
                    pc1 ? 1.0 : need_real(params, "nu"),
                    pc1 ? 1.0 : need_real(params, "nu_prime")};
    auto series = mehler2_series(args, trunc);
    report.lhs = series.value;
    if (pc1) {
      double uv = (args.u * args.v).real();
      cd num = args.u * args.z * args.w + args.v * std::conj(args.z) * std::conj(args.w) -
               (std::norm(args.z) + std::norm(args.w)) * uv;
      report.rhs = std::exp(num / (1.0 - uv)) / (1.0 - uv);
    } else {
      report.rhs = mehler2_closed(args);
    }
    report.meta["tail"] = fmt_double(series.tail);
  } else if (id == "MEHLER0") {
    SpecializedParams p;
    p.z = need(params, "z");
    p.w = need(params, "w");
    p.nu = need_real(params, "nu");
    p.nu_prime = need_real(params, "nu_prime");
    std::tie(report.lhs, report.rhs) = specialized_identity(SpecializedId::kMehler0, p, trunc);
  } else if (id == "MEHLER1_SQMOD" || id == "MEHLER2_SQ") {
    SpecializedParams p;
    p.u = need(params, "u");
    p.v = need(params, "v");
    p.z = need(params, "z");
    p.nu = need_real(params, "nu");
    auto which =
        id == "MEHLER1_SQMOD" ? SpecializedId::kMehler1SqMod : SpecializedId::kMehler2Sq;
    std::tie(report.lhs, report.rhs) = specialized_identity(which, p, trunc);
  } else if (id == "MEHLER3") {
    SpecializedParams p;
    p.lambda = need_real(params, "lambda");
    p.z = need(params, "z");
    p.nu = need_real(params, "nu");
    std::tie(report.lhs, report.rhs) = specialized_identity(SpecializedId::kMehler3, p, trunc);
  } else if (id == "ZERO_VALUE") {
    int m = need_int(params, "m");
    int n = need_int(params, "n");
    double nu = need_real(params, "nu");
    report.lhs = chp_eval(m, n, 0.0, nu);
    report.rhs = chp_zero_value(m, n, nu);
  } else if (id == "SELF_RECIPROCITY") {
    IdentityReport inner = self_reciprocity_check(
        need_int(params, "j"), need_int(params, "k"), need(params, "u"), need(params, "v"),
        need(params, "z"), need_real(params, "nu"), need_real(params, "nu_prime"), rule);
    report.lhs = inner.lhs;
    report.rhs = inner.rhs;
    for (const auto& [key, value] : inner.meta) report.meta[key] = value;
  } else if (id == "FOURIER_EIGEN") {
    IdentityReport inner =
        fourier_eigen_check(need_int(params, "j"), need_int(params, "k"), need(params, "z"), rule);
    report.lhs = inner.lhs;
    report.rhs = inner.rhs;
    for (const auto& [key, value] : inner.meta) report.meta[key] = value;
  } else if (id == "GAUSS_INT") {
    double gamma = need_real(params, "gamma");
    cd alpha = need(params, "alpha");
    cd beta = need(params, "beta");
    if (!(gamma > 0.0)) throw DomainError("gaussian integral requires gamma > 0");
    QuadratureRule adapted = rule.with_scale(gamma);
    report.lhs = integrate_plane(
        [&](cd xi) {
          return std::exp(-gamma * std::norm(xi) + alpha * xi + beta * std::conj(xi));
        },
        adapted);
    report.rhs = gaussian_integral_closed(gamma, alpha, beta);
    report.meta["nodes"] = std::to_string(rule.nodes_per_axis());
  } else if (id == "INT_REP") {
    int m = need_int(params, "m");
    int n = need_int(params, "n");
    cd z = need(params, "z");
    double nu = need_real(params, "nu");
    double mu = need_real(params, "mu");
    if (!(nu > 0.0) || !(mu > 0.0)) throw DomainError("nu and mu must be positive");
    double s = std::sqrt(nu * mu);
    IntegralRepParams rep{mu, cd(0.0, s), cd(0.0, -s)};
    report.lhs = chp_integral_rep(m, n, z, rep, rule);
    report.rhs = chp_eval(m, n, z, nu);
    report.meta["nodes"] = std::to_string(rule.nodes_per_axis());
  } else {
    throw DomainError("unknown identity id: " + id);
  }
}

// Deterministic sampling stream (splitmix64), independent of the standard
// library's distribution implementations.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : state_(seed) {}

  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  cd in_disk(double radius) {
    double r = radius * std::sqrt(uniform());
    double theta = 2.0 * M_PI * uniform();
    return std::polar(r, theta);
  }

 private:
  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

// (u, v) with u v equal to the given real product, at a sampled phase.
std::pair<cd, cd> uv_with_real_product(double product, double theta) {
  double mag = std::sqrt(std::abs(product));
  cd u = std::polar(mag, theta);
  cd v = std::polar(mag, -theta);
  if (product < 0.0) v = -v;
  return {u, v};
}

std::vector<Params> make_samples(const IdentityInfo& info, std::uint64_t seed) {
  SampleRng rng(seed ^ fnv1a(info.id));
  std::vector<Params> out;
  out.reserve(info.samples);
  const std::string& id = info.id;

  if (id == "MEHLER_REAL") {
    for (int s = 0; s < info.samples; ++s) {
      out.push_back({{"t", rng.uniform(-0.6, 0.6)},
                     {"x", rng.uniform(-2.0, 2.0)},
                     {"y", rng.uniform(-2.0, 2.0)}});
    }
  } else if (id == "EGF") {
    for (int s = 0; s < info.samples; ++s) {
      out.push_back({{"u", rng.in_disk(0.5)},
                     {"v", rng.in_disk(0.5)},
                     {"z", rng.in_disk(2.0)},
                     {"nu", rng.uniform(0.25, 2.0)}});
    }
  } else if (id == "GF_SINGLE") {
    for (int s = 0; s < info.samples; ++s) {
      out.push_back({{"m_prime", static_cast<double>(rng.uniform_int(0, 4))},
                     {"zeta", rng.in_disk(1.5)},
                     {"w", rng.in_disk(2.0)},
                     {"nu", rng.uniform(0.25, 2.0)}});
    }
  } else if (id == "PARTIAL_MEHLER") {
    for (int s = 0; s < info.samples; ++s) {
      out.push_back({{"m", static_cast<double>(rng.uniform_int(0, 4))},
                     {"m_prime", static_cast<double>(rng.uniform_int(0, 4))},
                     {"z", rng.in_disk(2.0)},
                     {"w", rng.in_disk(2.0)},
                     {"nu", rng.uniform(0.25, 2.0)}});
    }
  } else if (id == "MEHLER1") {
    for (int s = 0; s < info.samples; ++s) {
      out.push_back({{"u", rng.in_disk(0.6)},
                     {"z", rng.in_disk(0.7)},
                     {"w", rng.in_disk(0.7)},
                     {"nu", rng.uniform(0.25, 1.0)}});
    }
  } else if (id == "MEHLER1_DIAG") {
    for (int s = 0; s < info.samples; ++s) {
      out.push_back({{"u", rng.in_disk(0.6)},
                     {"z", rng.in_disk(1.5)},
                     {"nu", rng.uniform(0.25, 2.0)}});
    }
  } else if (id == "LAGUERRE_DIAG") {
    for (int s = 0; s < info.samples; ++s) {
      double nu = rng.uniform(0.25, 2.0);
      double radius = std::min(2.0, std::sqrt(4.0 / nu));
      out.push_back(
          {{"m", static_cast<double>(s % 16)}, {"z", rng.in_disk(radius)}, {"nu", nu}});
    }
  } else if (id == "EIGEN") {
    for (int m = 0; m <= 10; ++m) {
      for (int n = 0; n <= 10; ++n) {
        out.push_back({{"m", static_cast<double>(m)}, {"n", static_cast<double>(n)}});
      }
    }
  } else if (id == "NORM") {
    std::vector<std::pair<int, int>> basis;
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n + m <= 4; ++n) basis.emplace_back(m, n);
    }
    for (double nu : {0.5, 1.0, 2.0}) {
      for (auto [m, n] : basis) {
        out.push_back({{"m", static_cast<double>(m)},
                       {"n", static_cast<double>(n)},
                       {"j", static_cast<double>(m)},
                       {"k", static_cast<double>(n)},
                       {"nu", nu}});
      }
      for (int s = 0; s < 10; ++s) {
        int a = rng.uniform_int(0, static_cast<int>(basis.size()) - 1);
        int b = rng.uniform_int(0, static_cast<int>(basis.size()) - 1);
        if (a == b) b = (b + 1) % static_cast<int>(basis.size());
        out.push_back({{"m", static_cast<double>(basis[a].first)},
                       {"n", static_cast<double>(basis[a].second)},
                       {"j", static_cast<double>(basis[b].first)},
                       {"k", static_cast<double>(basis[b].second)},
                       {"nu", nu}});
      }
    }
  } else if (id == "HEAT") {
    for (double t : {0.5, 1.0, 2.0}) {
      for (double nu : {0.5, 1.0, 2.0}) {
        for (int s = 0; s < 2; ++s) {
          out.push_back(
              {{"t", t}, {"nu", nu}, {"z", rng.in_disk(1.0)}, {"z0", rng.in_disk(1.0)}});
        }
      }
    }
  } else if (id == "HEAT_PRINTED_MISMATCH") {
    for (double t : {0.5, 0.8, 1.0, 1.5, 2.0}) {
      cd z = rng.in_disk(1.0);
      out.push_back({{"t", t}, {"nu", rng.uniform(0.5, 2.0)}, {"z", z}, {"z0", z}});
    }
  } else if (id == "MEHLER2") {
    for (int s = 0; s < info.samples; ++s) {
      double nu = rng.uniform(0.25, 2.0);
      double nu_prime = rng.uniform(0.25, 2.0);
      double product = rng.uniform(-0.5, 0.5) / (nu * nu_prime);
      auto [u, v] = uv_with_real_product(product, rng.uniform(0.0, 2.0 * M_PI));
      out.push_back({{"u", u},
                     {"v", v},
                     {"z", rng.in_disk(1.2)},
                     {"w", rng.in_disk(1.2)},
                     {"nu", nu},
                     {"nu_prime", nu_prime}});
    }
  } else if (id == "MEHLER_PC1") {
    for (int s = 0; s < info.samples; ++s) {
      auto [u, v] = uv_with_real_product(rng.uniform(-0.5, 0.5), rng.uniform(0.0, 2.0 * M_PI));
      out.push_back({{"u", u}, {"v", v}, {"z", rng.in_disk(1.2)}, {"w", rng.in_disk(1.2)}});
    }
  } else if (id == "MEHLER0") {
    for (int s = 0; s < info.samples; ++s) {
      double nu = rng.uniform(0.25, 1.5);
      double nu_prime = rng.uniform(0.25, std::min(1.5, 0.5 / nu));
      out.push_back({{"z", rng.in_disk(1.5)},
                     {"w", rng.in_disk(1.5)},
                     {"nu", nu},
                     {"nu_prime", nu_prime}});
    }
  } else if (id == "MEHLER1_SQMOD" || id == "MEHLER2_SQ") {
    for (int s = 0; s < info.samples; ++s) {
      double nu = rng.uniform(0.25, 2.0);
      double product = rng.uniform(-0.5, 0.5) / (nu * nu);
      auto [u, v] = uv_with_real_product(product, rng.uniform(0.0, 2.0 * M_PI));
      out.push_back({{"u", u}, {"v", v}, {"z", rng.in_disk(1.5)}, {"nu", nu}});
    }
  } else if (id == "MEHLER3") {
    for (int s = 0; s < info.samples; ++s) {
      double nu = rng.uniform(0.25, 2.0);
      double lambda = rng.uniform(-0.5, 0.5) / nu;
      out.push_back({{"lambda", lambda}, {"z", rng.in_disk(1.5)}, {"nu", nu}});
    }
  } else if (id == "ZERO_VALUE") {
    for (int m = 0; m <= 12; ++m) {
      for (int n = 0; n <= 12; ++n) {
        out.push_back({{"m", static_cast<double>(m)},
                       {"n", static_cast<double>(n)},
                       {"nu", rng.uniform(0.25, 4.0)}});
      }
    }
  } else if (id == "SELF_RECIPROCITY") {
    for (int s = 0; s < info.samples; ++s) {
      double nu = rng.uniform(0.5, 2.0);
      double nu_prime = rng.uniform(0.5, 2.0);
      double product = rng.uniform(-0.5, 0.5) / (nu * nu_prime);
      auto [u, v] = uv_with_real_product(product, rng.uniform(0.0, 2.0 * M_PI));
      out.push_back({{"j", static_cast<double>(rng.uniform_int(0, 3))},
                     {"k", static_cast<double>(rng.uniform_int(0, 3))},
                     {"u", u},
                     {"v", v},
                     {"z", rng.in_disk(1.5)},
                     {"nu", nu},
                     {"nu_prime", nu_prime}});
    }
  } else if (id == "FOURIER_EIGEN") {
    for (int s = 0; s < info.samples; ++s) {
      out.push_back({{"j", static_cast<double>(rng.uniform_int(0, 4))},
                     {"k", static_cast<double>(rng.uniform_int(0, 4))},
                     {"z", rng.in_disk(1.5)}});
    }
  } else if (id == "GAUSS_INT") {
    for (double gamma : {0.5, 1.0, 2.0}) {
      for (int s = 0; s < 6; ++s) {
        out.push_back({{"gamma", gamma}, {"alpha", rng.in_disk(2.0)}, {"beta", rng.in_disk(2.0)}});
      }
    }
  } else if (id == "INT_REP") {
    const double nus[] = {0.5, 1.0, 2.0};
    for (int s = 0; s < info.samples; ++s) {
      int m = rng.uniform_int(0, 8);
      int n = rng.uniform_int(0, 8 - m);
      out.push_back({{"m", static_cast<double>(m)},
                     {"n", static_cast<double>(n)},
                     {"z", rng.in_disk(2.0)},
                     {"nu", nus[s % 3]},
                     {"mu", rng.uniform(0.5, 2.0)}});
    }
  }
  return out;
}

}  // namespace

const std::vector<IdentityInfo>& catalog() {
  static const std::vector<IdentityInfo> entries = build_catalog();
  return entries;
}

const IdentityInfo* find_identity(const std::string& id) {
  for (const auto& info : catalog()) {
    if (info.id == id) return &info;
  }
  return nullptr;
}

IdentityReport run_identity(const std::string& id, const Params& params,
                            const TruncationSpec& trunc, const QuadratureRule& rule) {
  const IdentityInfo* info = find_identity(id);
  if (info == nullptr) throw DomainError("unknown identity id: " + id);

  IdentityReport report;
  report.identity_id = id;
  report.params = params;
  if (info->max_order > 0) report.meta["max_order"] = std::to_string(trunc.max_order);
  if (info->expected_fail) report.meta["expected_fail"] = "true";
  try {
    dispatch(id, params, trunc, rule, report);
    report.finish(info->tolerance);
  } catch (const DomainError& e) {
    report.pass = false;
    report.meta["error"] = e.what();
  } catch (const ConvergenceError& e) {
    report.pass = false;
    report.meta["error"] = e.what();
  } catch (const std::exception& e) {
    report.pass = false;
    report.meta["error"] = e.what();
  }
  return report;
}

IdentityReport run_identity(const std::string& id, const Params& params) {
  const IdentityInfo* info = find_identity(id);
  if (info == nullptr) throw DomainError("unknown identity id: " + id);
  TruncationSpec trunc{info->max_order > 0 ? info->max_order : 40, info->tail_tol};
  QuadratureRule rule(info->nodes > 0 ? info->nodes : 64, 1.0);
  return run_identity(id, params, trunc, rule);
}

SuiteResult run_suite(const SampleSpec& spec) {
  SuiteResult result;
  for (const auto& info : catalog()) {
    if (spec.only_id && *spec.only_id != info.id) continue;
    TruncationSpec trunc{info.max_order > 0 ? info.max_order : 40, info.tail_tol};
    QuadratureRule rule(info.nodes > 0 ? info.nodes : 64, 1.0);
    auto samples = make_samples(info, spec.seed);
    for (std::size_t idx = 0; idx < samples.size(); ++idx) {
      IdentityReport report = run_identity(info.id, samples[idx], trunc, rule);
      report.meta["sample"] = std::to_string(idx);
      if (info.expected_fail) {
        if (report.pass) {
          ++result.failed;  // the mismatch this entry guards vanished
        } else {
          ++result.expected_failures;
        }
      } else {
        if (report.pass) {
          ++result.passed;
        } else {
          ++result.failed;
        }
      }
      result.reports.push_back(std::move(report));
    }
  }
  return result;
}

}  // namespace chermite::verify
