// Command-line front end: evaluation of the complex Hermite polynomials,
// kernel sampling, heat-kernel grids, quadrature oracles, and the identity
// verification suite.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification
// failure.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "chermite/errors.hpp"
#include "chermite/kernels.hpp"
#include "chermite/quadrature.hpp"
#include "chermite/verify.hpp"

namespace {

using cd = std::complex<double>;
using chermite::ConvergenceError;
using chermite::DomainError;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

struct OutputSpec {
  std::string format = "plain";  // plain | json | csv
  std::string out_path;          // empty = stdout
  int precision = 15;
};

class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (path.empty()) {
      os_ = &std::cout;
      return;
    }
    file_.open(path);
    if (!file_) throw DomainError("cannot open output file: " + path);
    os_ = &file_;
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

std::string fmt_real(double x, int precision) {
  std::ostringstream os;
  os << std::setprecision(precision) << x;
  return os.str();
}

// a+bi / a-bi, round-trippable through parse_complex at precision 17.
std::string fmt_complex(cd z, int precision) {
  std::string re = fmt_real(z.real(), precision);
  bool negative = std::signbit(z.imag());
  std::string im = fmt_real(std::abs(z.imag()), precision);
  return re + (negative ? "-" : "+") + im + "i";
}

// Consumes a double from the front of s; returns chars consumed (0 = none).
std::size_t eat_double(const std::string& s, std::size_t pos, double& out) {
  const char* start = s.c_str() + pos;
  char* end = nullptr;
  double v = std::strtod(start, &end);
  if (end == start) return 0;
  out = v;
  return static_cast<std::size_t>(end - start);
}

// Accepts a, a+bi, a-bi, bi, i, +i, -i (no spaces).
std::optional<cd> parse_complex(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "i" || s == "+i") return cd{0.0, 1.0};
  if (s == "-i") return cd{0.0, -1.0};

  double first = 0.0;
  std::size_t used = eat_double(s, 0, first);
  if (used == 0) return std::nullopt;
  if (used == s.size()) return cd{first, 0.0};
  std::string rest = s.substr(used);
  if (rest == "i") return cd{0.0, first};

  if (rest == "+i") return cd{first, 1.0};
  if (rest == "-i") return cd{first, -1.0};
  if (rest[0] != '+' && rest[0] != '-') return std::nullopt;
  double second = 0.0;
  std::size_t used2 = eat_double(rest, 0, second);
  if (used2 == 0 || used2 + 1 != rest.size() || rest[used2] != 'i') return std::nullopt;
  return cd{first, second};
}

nlohmann::ordered_json json_complex(cd z) {
  return nlohmann::ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

// Shared flag-holder for every subcommand; presence is tracked through the
// CLI11 option pointers.
struct Flags {
  // eval / kernel / quad
  int m = 0, n = 0, m_prime = 0, j = 0, k = 0;
  std::string z, w, u, v, zeta, z0, alpha, beta;
  double nu = 1.0, nu_prime = 1.0, mu = 1.0, gamma = 1.0;
  double t = 0.0, x = 0.0, y = 0.0, lambda = 0.0;
  bool series = false;
  int max_order = 40;
  double tail_tol = 1e-8;
  int nodes = 0;  // 0 = per-mode default
  // heat-grid
  double xmin = -2.0, xmax = 2.0, ymin = -2.0, ymax = 2.0;
  int steps = 10;
  // verify
  bool all = false;
  bool list = false;
  std::string id;
  std::uint64_t seed = 7;
};

cd require_complex(const CLI::App* cmd, const std::string& flag, const std::string& text) {
  if (cmd->count(flag) == 0) {
    throw CLI::RequiredError(flag);
  }
  auto parsed = parse_complex(text);
  if (!parsed) {
    throw CLI::ValidationError(flag, "expected a complex number like 1.5-0.25i");
  }
  return *parsed;
}

void require_flag(const CLI::App* cmd, const std::string& flag) {
  if (cmd->count(flag) == 0) throw CLI::RequiredError(flag);
}

void print_value(OutputTarget& out, const OutputSpec& spec, cd value,
                 std::optional<double> tail) {
  std::ostream& os = out.stream();
  if (spec.format == "json") {
    nlohmann::ordered_json obj{{"value", json_complex(value)}};
    if (tail) obj["tail"] = *tail;
    os << obj.dump() << "\n";
  } else if (spec.format == "csv") {
    os << "re,im" << (tail ? ",tail" : "") << "\n";
    os << fmt_real(value.real(), spec.precision) << "," << fmt_real(value.imag(), spec.precision);
    if (tail) os << "," << fmt_real(*tail, spec.precision);
    os << "\n";
  } else {
    os << fmt_complex(value, spec.precision) << "\n";
    if (tail) os << "tail=" << fmt_real(*tail, spec.precision) << "\n";
  }
}

void print_report(OutputTarget& out, const OutputSpec& spec,
                  const chermite::IdentityReport& report) {
  std::ostream& os = out.stream();
  if (spec.format == "json") {
    os << report.to_json_line() << "\n";
  } else if (spec.format == "csv") {
    os << "lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass\n"
       << fmt_real(report.lhs.real(), spec.precision) << ","
       << fmt_real(report.lhs.imag(), spec.precision) << ","
       << fmt_real(report.rhs.real(), spec.precision) << ","
       << fmt_real(report.rhs.imag(), spec.precision) << ","
       << fmt_real(report.abs_err, spec.precision) << ","
       << fmt_real(report.rel_err, spec.precision) << "," << (report.pass ? "true" : "false")
       << "\n";
  } else {
    os << "lhs=" << fmt_complex(report.lhs, spec.precision)
       << " rhs=" << fmt_complex(report.rhs, spec.precision)
       << " abs_err=" << fmt_real(report.abs_err, spec.precision)
       << " rel_err=" << fmt_real(report.rel_err, spec.precision)
       << " pass=" << (report.pass ? "true" : "false") << "\n";
  }
}

int run_eval(const CLI::App* cmd, const Flags& flags, const OutputSpec& spec) {
  cd z = require_complex(cmd, "--z", flags.z);
  cd value = chermite::chp_eval(flags.m, flags.n, z, flags.nu);
  OutputTarget out(spec.out_path);
  if (spec.format == "json") {
    nlohmann::ordered_json obj{{"m", flags.m},
                               {"n", flags.n},
                               {"z", json_complex(z)},
                               {"nu", flags.nu},
                               {"value", json_complex(value)}};
    out.stream() << obj.dump() << "\n";
  } else {
    print_value(out, spec, value, std::nullopt);
  }
  return kExitOk;
}

int run_kernel(const CLI::App* cmd, const std::string& kernel_id, const Flags& flags,
               const OutputSpec& spec) {
  chermite::TruncationSpec trunc{flags.max_order, flags.tail_tol};
  cd value;
  std::optional<double> tail;

  if (kernel_id == "mehler-real") {
    require_flag(cmd, "--t");
    require_flag(cmd, "--x");
    require_flag(cmd, "--y");
    if (flags.series) {
      auto res = chermite::classical_mehler_series(flags.t, flags.x, flags.y, trunc);
      value = res.value;
      tail = res.tail;
    } else {
      value = chermite::classical_mehler_closed(flags.t, flags.x, flags.y);
    }
  } else if (kernel_id == "egf") {
    chermite::KernelArgs args{require_complex(cmd, "--u", flags.u),
                              require_complex(cmd, "--v", flags.v),
                              require_complex(cmd, "--z", flags.z), 0.0, flags.nu, 1.0};
    if (flags.series) {
      auto res = chermite::egf_series(args, trunc);
      value = res.value;
      tail = res.tail;
    } else {
      value = chermite::egf_closed(args);
    }
  } else if (kernel_id == "gf-single") {
    cd zeta = require_complex(cmd, "--zeta", flags.zeta);
    cd w = require_complex(cmd, "--w", flags.w);
    if (flags.series) {
      auto res = chermite::gf_single_series(flags.m_prime, zeta, w, flags.nu, trunc);
      value = res.value;
      tail = res.tail;
    } else {
      value = chermite::gf_single_closed(flags.m_prime, zeta, w, flags.nu);
    }
  } else if (kernel_id == "partial-mehler") {
    cd z = require_complex(cmd, "--z", flags.z);
    cd w = require_complex(cmd, "--w", flags.w);
    if (flags.series) {
      auto res = chermite::partial_mehler_series(flags.m, flags.m_prime, z, w, flags.nu, trunc);
      value = res.value;
      tail = res.tail;
    } else {
      value = chermite::partial_mehler_closed(flags.m, flags.m_prime, z, w, flags.nu);
    }
  } else if (kernel_id == "mehler1") {
    chermite::KernelArgs args{require_complex(cmd, "--u", flags.u), 0.0,
                              require_complex(cmd, "--z", flags.z),
                              require_complex(cmd, "--w", flags.w), flags.nu, flags.nu};
    if (flags.series) {
      auto res = chermite::mehler1_series(args, trunc);
      value = res.value;
      tail = res.tail;
    } else {
      value = chermite::mehler1_closed(args);
    }
  } else if (kernel_id == "mehler2") {
    chermite::KernelArgs args{
        require_complex(cmd, "--u", flags.u), require_complex(cmd, "--v", flags.v),
        require_complex(cmd, "--z", flags.z), require_complex(cmd, "--w", flags.w),
        flags.nu,                             flags.nu_prime};
    if (flags.series) {
      auto res = chermite::mehler2_series(args, trunc);
      value = res.value;
      tail = res.tail;
    } else {
      value = chermite::mehler2_closed(args);
    }
  } else if (kernel_id == "heat") {
    require_flag(cmd, "--t");
    chermite::HeatArgs args{flags.t, require_complex(cmd, "--z", flags.z),
                            require_complex(cmd, "--z0", flags.z0), flags.nu};
    if (flags.series) {
      auto res = chermite::heat_kernel_series(args, trunc);
      value = res.value;
      tail = res.tail;
    } else {
      value = chermite::heat_kernel_closed(args);
    }
  } else {
    throw CLI::ValidationError("kernel",
                               "unknown kernel id '" + kernel_id +
                                   "' (expected mehler-real, egf, gf-single, partial-mehler, "
                                   "mehler1, mehler2 or heat)");
  }

  OutputTarget out(spec.out_path);
  print_value(out, spec, value, tail);
  return kExitOk;
}

int run_heat_grid(const CLI::App* cmd, const Flags& flags, const OutputSpec& spec) {
  require_flag(cmd, "--t");
  cd z0 = require_complex(cmd, "--z0", flags.z0);
  if (!(flags.xmax > flags.xmin) || !(flags.ymax > flags.ymin)) {
    throw CLI::ValidationError("heat-grid", "grid extent must be nonempty");
  }
  OutputTarget out(spec.out_path);
  std::ostream& os = out.stream();
  double dx = (flags.xmax - flags.xmin) / (flags.steps - 1);
  double dy = (flags.ymax - flags.ymin) / (flags.steps - 1);

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (spec.format != "json") os << "x,y,re,im\n";
  for (int i = 0; i < flags.steps; ++i) {
    double x = flags.xmin + i * dx;
    for (int j = 0; j < flags.steps; ++j) {
      double y = flags.ymin + j * dy;
      cd value = chermite::heat_kernel_closed({flags.t, cd{x, y}, z0, flags.nu});
      if (spec.format == "json") {
        rows.push_back(nlohmann::ordered_json{
            {"x", x}, {"y", y}, {"re", value.real()}, {"im", value.imag()}});
      } else {
        os << fmt_real(x, spec.precision) << "," << fmt_real(y, spec.precision) << ","
           << fmt_real(value.real(), spec.precision) << ","
           << fmt_real(value.imag(), spec.precision) << "\n";
      }
    }
  }
  if (spec.format == "json") os << rows.dump() << "\n";
  return kExitOk;
}

int run_quad(const CLI::App* cmd, const std::string& mode, const Flags& flags,
             const OutputSpec& spec) {
  namespace tol = chermite::tolerances;
  chermite::IdentityReport report;

  if (mode == "gauss") {
    require_flag(cmd, "--gamma");
    cd alpha = require_complex(cmd, "--alpha", flags.alpha);
    cd beta = require_complex(cmd, "--beta", flags.beta);
    if (!(flags.gamma > 0.0)) throw DomainError("gaussian integral requires gamma > 0");
    int nodes = flags.nodes > 0 ? flags.nodes : 64;
    chermite::QuadratureRule rule(nodes, flags.gamma);
    report.identity_id = "GAUSS_INT";
    report.lhs = chermite::integrate_plane(
        [&](cd xi) {
          return std::exp(-flags.gamma * std::norm(xi) + alpha * xi + beta * std::conj(xi));
        },
        rule);
    report.rhs = chermite::gaussian_integral_closed(flags.gamma, alpha, beta);
    report.finish(tol::kGaussInt);
  } else if (mode == "int-rep") {
    cd z = require_complex(cmd, "--z", flags.z);
    int nodes = flags.nodes > 0 ? flags.nodes : 64;
    chermite::QuadratureRule rule(nodes, flags.mu);
    double s = std::sqrt(flags.nu * flags.mu);
    chermite::IntegralRepParams params{flags.mu, cd{0.0, s}, cd{0.0, -s}};
    report.identity_id = "INT_REP";
    report.lhs = chermite::chp_integral_rep(flags.m, flags.n, z, params, rule);
    report.rhs = chermite::chp_eval(flags.m, flags.n, z, flags.nu);
    report.finish(tol::kIntRep);
  } else if (mode == "norm") {
    int nodes = flags.nodes > 0 ? flags.nodes : 64;
    chermite::QuadratureRule rule(nodes, flags.nu);
    report.identity_id = "NORM";
    report.lhs = chermite::norm_squared_quad(flags.m, flags.n, flags.nu, rule);
    report.rhs = chermite::norm_squared_closed(flags.m, flags.n, flags.nu);
    report.finish(tol::kNorm);
  } else if (mode == "self-reciprocity") {
    cd u = require_complex(cmd, "--u", flags.u);
    cd v = require_complex(cmd, "--v", flags.v);
    cd z = require_complex(cmd, "--z", flags.z);
    int nodes = flags.nodes > 0 ? flags.nodes : 96;
    chermite::QuadratureRule rule(nodes, flags.nu_prime);
    report = chermite::self_reciprocity_check(flags.j, flags.k, u, v, z, flags.nu,
                                              flags.nu_prime, rule);
  } else if (mode == "fourier-eigen") {
    cd z = require_complex(cmd, "--z", flags.z);
    int nodes = flags.nodes > 0 ? flags.nodes : 96;
    chermite::QuadratureRule rule(nodes, 0.5);
    report = chermite::fourier_eigen_check(flags.j, flags.k, z, rule);
  } else {
    throw CLI::ValidationError("quad", "unknown mode '" + mode +
                                           "' (expected gauss, int-rep, norm, "
                                           "self-reciprocity or fourier-eigen)");
  }

  OutputTarget out(spec.out_path);
  print_report(out, spec, report);
  return kExitOk;
}

int run_verify(const Flags& flags, const OutputSpec& spec) {
  namespace verify = chermite::verify;

  OutputTarget out(spec.out_path);
  std::ostream& os = out.stream();

  if (flags.list) {
    for (const auto& info : verify::catalog()) {
      os << info.id << "\ttolerance=" << info.tolerance << "\tsamples=" << info.samples
         << (info.expected_fail ? "\texpected-fail" : "") << "\t" << info.description << "\n";
    }
    return kExitOk;
  }

  verify::SampleSpec sample;
  sample.seed = flags.seed;
  if (!flags.id.empty()) {
    if (verify::find_identity(flags.id) == nullptr) {
      std::cerr << "unknown identity id: " << flags.id << "\n";
      return kExitUsage;
    }
    sample.only_id = flags.id;
  }

  verify::SuiteResult result = verify::run_suite(sample);
  if (spec.format == "csv") {
    os << "identity_id,sample,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass\n";
    for (const auto& report : result.reports) {
      os << report.identity_id << "," << report.meta.at("sample") << ","
         << fmt_real(report.lhs.real(), spec.precision) << ","
         << fmt_real(report.lhs.imag(), spec.precision) << ","
         << fmt_real(report.rhs.real(), spec.precision) << ","
         << fmt_real(report.rhs.imag(), spec.precision) << ","
         << fmt_real(report.abs_err, spec.precision) << ","
         << fmt_real(report.rel_err, spec.precision) << ","
         << (report.pass ? "true" : "false") << "\n";
    }
  } else {
    for (const auto& report : result.reports) os << report.to_json_line() << "\n";
  }
  std::cerr << "passed=" << result.passed << " failed=" << result.failed
            << " expected_failures=" << result.expected_failures << "\n";
  return result.all_ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complex Hermite polynomials, Mehler-type kernels and their verification"};
  app.require_subcommand(1);
  app.fallthrough();  // global --format/--out/--precision may follow the subcommand

  OutputSpec spec;
  Flags flags;
  std::string kernel_id;
  std::string quad_mode;

  app.add_option("--format", spec.format, "output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--out", spec.out_path, "write output to a file instead of stdout");
  app.add_option("--precision", spec.precision, "decimal digits for plain/csv output")
      ->check(CLI::Range(1, 17));

  CLI::App* eval = app.add_subcommand("eval", "evaluate H_{m,n}(z, conj z) at nu > 0");
  eval->add_option("--m", flags.m, "first index")->required();
  eval->add_option("--n", flags.n, "second index")->required();
  eval->add_option("--z", flags.z, "evaluation point, complex a+bi")->required();
  eval->add_option("--nu", flags.nu, "magnetic parameter, nu > 0")->required();

  CLI::App* kernel = app.add_subcommand(
      "kernel", "evaluate a generating function or Mehler-type kernel");
  kernel
      ->add_option("id", kernel_id,
                   "one of: mehler-real, egf, gf-single, partial-mehler, mehler1, mehler2, heat")
      ->required();
  kernel->add_option("--u", flags.u, "complex u");
  kernel->add_option("--v", flags.v, "complex v");
  kernel->add_option("--z", flags.z, "complex z");
  kernel->add_option("--w", flags.w, "complex w");
  kernel->add_option("--zeta", flags.zeta, "complex zeta (gf-single)");
  kernel->add_option("--z0", flags.z0, "complex z0 (heat)");
  kernel->add_option("--m", flags.m, "index m");
  kernel->add_option("--m-prime", flags.m_prime, "index m'");
  kernel->add_option("--nu", flags.nu, "nu > 0");
  kernel->add_option("--nu-prime", flags.nu_prime, "nu' > 0 (mehler2)");
  kernel->add_option("--t", flags.t, "t (mehler-real: |t|<1; heat: t>0)");
  kernel->add_option("--x", flags.x, "real x (mehler-real)");
  kernel->add_option("--y", flags.y, "real y (mehler-real)");
  kernel->add_flag("--series", flags.series, "evaluate the truncated series instead");
  kernel->add_option("--max-order", flags.max_order, "series cutoff per index")
      ->check(CLI::Range(1, 100000));
  kernel->add_option("--tail-tol", flags.tail_tol, "acceptance bound on the last increment");

  CLI::App* heat_grid =
      app.add_subcommand("heat-grid", "CSV grid of the heat kernel over a rectangle");
  heat_grid->add_option("--t", flags.t, "time, t > 0");
  heat_grid->add_option("--nu", flags.nu, "nu > 0");
  heat_grid->add_option("--z0", flags.z0, "source point z0, complex a+bi")->required();
  heat_grid->add_option("--xmin", flags.xmin, "grid x lower bound");
  heat_grid->add_option("--xmax", flags.xmax, "grid x upper bound");
  heat_grid->add_option("--ymin", flags.ymin, "grid y lower bound");
  heat_grid->add_option("--ymax", flags.ymax, "grid y upper bound");
  heat_grid->add_option("--steps", flags.steps, "points per axis (rows = steps^2)")
      ->check(CLI::Range(2, 100000));

  CLI::App* quad = app.add_subcommand("quad", "quadrature oracles over the complex plane");
  quad->add_option("mode", quad_mode,
                   "one of: gauss, int-rep, norm, self-reciprocity, fourier-eigen")
      ->required();
  quad->add_option("--gamma", flags.gamma, "Gaussian concentration (gauss)");
  quad->add_option("--alpha", flags.alpha, "complex alpha");
  quad->add_option("--beta", flags.beta, "complex beta");
  quad->add_option("--m", flags.m, "index m");
  quad->add_option("--n", flags.n, "index n");
  quad->add_option("--j", flags.j, "index j");
  quad->add_option("--k", flags.k, "index k");
  quad->add_option("--u", flags.u, "complex u");
  quad->add_option("--v", flags.v, "complex v");
  quad->add_option("--z", flags.z, "complex z");
  quad->add_option("--mu", flags.mu, "Gaussian concentration of the representation (int-rep)");
  quad->add_option("--nu", flags.nu, "nu > 0");
  quad->add_option("--nu-prime", flags.nu_prime, "nu' > 0");
  quad->add_option("--nodes", flags.nodes, "nodes per axis (default 64, 96 for transforms)")
      ->check(CLI::Range(2, 1024));

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity verification suite");
  verify_cmd->add_flag("--all", flags.all, "run every identity (default)");
  verify_cmd->add_option("--id", flags.id, "run a single identity by token");
  verify_cmd->add_flag("--list", flags.list, "list the identity catalog and exit");
  verify_cmd->add_option("--seed", flags.seed, "sampler seed (default 7)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(eval)) return run_eval(eval, flags, spec);
    if (app.got_subcommand(kernel)) return run_kernel(kernel, kernel_id, flags, spec);
    if (app.got_subcommand(heat_grid)) return run_heat_grid(heat_grid, flags, spec);
    if (app.got_subcommand(quad)) return run_quad(quad, quad_mode, flags, spec);
    if (app.got_subcommand(verify_cmd)) return run_verify(flags, spec);
  } catch (const CLI::ParseError& e) {
    // missing/invalid per-kernel flags detected after dispatch
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
