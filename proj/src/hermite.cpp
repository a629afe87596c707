#include "chermite/hermite.hpp"

#include <cmath>

#include "chermite/errors.hpp"

namespace chermite {
namespace {

void require_indices(int m, int n) {
  if (m < 0 || n < 0) throw DomainError("polynomial indices must be nonnegative");
}

void require_nu(double nu) {
  if (!(nu > 0.0)) throw DomainError("magnetic parameter nu must be positive");
}

}  // namespace

double factorial_double(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

TriPoly chp_poly(int m, int n) {
  require_indices(m, n);
  TriPoly out;
  for (int k = 0; k <= std::min(m, n); ++k) {
    BigInt c = BigInt::factorial(k) * BigInt::binomial(m, k) * BigInt::binomial(n, k);
    if (k % 2 != 0) c = -c;
    out += TriPoly::term(Monomial{m - k, n - k, m + n - k}, std::move(c));
  }
  return out;
}

std::vector<std::vector<std::complex<double>>> chp_table(int m_max, int n_max,
                                                         std::complex<double> z,
                                                         double nu) {
  require_indices(m_max, n_max);
  require_nu(nu);
  const std::complex<double> zbar = std::conj(z);
  std::vector<std::vector<std::complex<double>>> h(
      m_max + 1, std::vector<std::complex<double>>(n_max + 1));
  h[0][0] = 1.0;
  for (int j = 1; j <= n_max; ++j) h[0][j] = nu * zbar * h[0][j - 1];
  for (int i = 0; i < m_max; ++i) {
    h[i + 1][0] = nu * z * h[i][0];
    for (int j = 1; j <= n_max; ++j) {
      h[i + 1][j] = nu * z * h[i][j] - nu * static_cast<double>(j) * h[i][j - 1];
    }
  }
  return h;
}

std::vector<std::vector<std::complex<double>>> chp_table_scaled(int m_max, int n_max,
                                                                std::complex<double> z,
                                                                double nu) {
  require_indices(m_max, n_max);
  require_nu(nu);
  const double root_nu = std::sqrt(nu);
  const std::complex<double> fz = root_nu * z;
  const std::complex<double> fzbar = root_nu * std::conj(z);
  std::vector<std::vector<std::complex<double>>> g(
      m_max + 1, std::vector<std::complex<double>>(n_max + 1));
  g[0][0] = 1.0;
  for (int j = 1; j <= n_max; ++j) g[0][j] = fzbar / std::sqrt(double(j)) * g[0][j - 1];
  for (int i = 0; i < m_max; ++i) {
    double inv_root = 1.0 / std::sqrt(double(i + 1));
    g[i + 1][0] = fz * inv_root * g[i][0];
    for (int j = 1; j <= n_max; ++j) {
      g[i + 1][j] =
          fz * inv_root * g[i][j] - std::sqrt(double(j)) * inv_root * g[i][j - 1];
    }
  }
  return g;
}

std::complex<double> chp_eval(int m, int n, std::complex<double> z, double nu) {
  require_indices(m, n);
  require_nu(nu);
  const std::complex<double> zbar = std::conj(z);
  std::vector<std::complex<double>> row(n + 1);
  row[0] = 1.0;
  for (int j = 1; j <= n; ++j) row[j] = nu * zbar * row[j - 1];
  for (int i = 0; i < m; ++i) {
    // in-place sweep: row[j-1] still holds the previous generation
    for (int j = n; j >= 1; --j) {
      row[j] = nu * z * row[j] - nu * static_cast<double>(j) * row[j - 1];
    }
    row[0] = nu * z * row[0];
  }
  return row[n];
}

std::complex<double> chp_eval(int m, int n, const EvalPoint& p) {
  return chp_eval(m, n, p.z, p.nu);
}

std::complex<double> chp_zero_value(int m, int n, double nu) {
  require_indices(m, n);
  require_nu(nu);
  if (m != n) return 0.0;
  // Same multiplication order as the recurrence at z = 0, so the two agree
  // bit for bit.
  std::complex<double> r = 1.0;
  for (int j = 1; j <= m; ++j) r = r * -(nu * static_cast<double>(j));
  return r;
}

double real_hermite_eval(int n, double x) {
  if (n < 0) throw DomainError("Hermite degree must be nonnegative");
  if (n == 0) return 1.0;
  double hm1 = 1.0;
  double h = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    double next = 2.0 * x * h - 2.0 * k * hm1;
    hm1 = h;
    h = next;
  }
  return h;
}

double laguerre_eval(int n, double alpha, double x) {
  if (n < 0) throw DomainError("Laguerre degree must be nonnegative");
  if (n == 0) return 1.0;
  double lm1 = 1.0;
  double l = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    double next = ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm1) / (k + 1.0);
    lm1 = l;
    l = next;
  }
  return l;
}

TriPoly magnetic_laplacian_apply(const TriPoly& p) {
  TriPoly dz = p.d_z();
  return -(dz.d_zbar()) + dz.shifted(1, 0, 1);
}

std::pair<std::complex<double>, std::complex<double>> diagonal_laguerre_check(
    int m, const EvalPoint& p) {
  if (m < 0) throw DomainError("diagonal index must be nonnegative");
  require_nu(p.nu);
  std::complex<double> hermite_side = chp_eval(m, m, p.z, p.nu);
  double sign = (m % 2 == 0) ? 1.0 : -1.0;
  double laguerre_side = sign * factorial_double(m) * std::pow(p.nu, m) *
                         laguerre_eval(m, 0.0, p.nu * std::norm(p.z));
  return {hermite_side, std::complex<double>(laguerre_side, 0.0)};
}

}  // namespace chermite
