#include "chermite/kernels.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "chermite/errors.hpp"

namespace chermite {
namespace {

using cd = std::complex<double>;

void require_trunc(const TruncationSpec& trunc) {
  if (trunc.max_order < 1) throw DomainError("max_order must be at least 1");
  if (!(trunc.tail_tol > 0.0)) throw DomainError("tail_tol must be positive");
}

void require_nu(double nu, const char* name) {
  if (!(nu > 0.0)) throw DomainError(std::string(name) + " must be positive");
}

void check_tail(double tail, const TruncationSpec& trunc) {
  if (!(tail <= trunc.tail_tol)) {
    std::ostringstream msg;
    msg << "series did not converge: last increment " << tail << " exceeds tail_tol "
        << trunc.tail_tol << " at max_order " << trunc.max_order;
    throw ConvergenceError(msg.str());
  }
}

// Real uv extracted from a complex pair; rejects pairs whose product has a
// nontrivial imaginary part.
double real_uv(cd u, cd v) {
  cd uv = u * v;
  if (std::abs(uv.imag()) > 1e-12 * (1.0 + std::abs(uv))) {
    throw DomainError("u*v must be real");
  }
  return uv.real();
}

}  // namespace

cd cpow(cd w, int p) {
  cd out = 1.0;
  for (int i = 0; i < p; ++i) out *= w;
  return out;
}

double classical_mehler_closed(double t, double x, double y) {
  if (!(std::abs(t) < 1.0)) throw DomainError("classical Mehler kernel requires |t| < 1");
  double d = 1.0 - t * t;
  return std::exp((-t * t * (x * x + y * y) + 2.0 * t * x * y) / d) / std::sqrt(d);
}

SeriesResult classical_mehler_series(double t, double x, double y,
                                     const TruncationSpec& trunc) {
  if (!(std::abs(t) < 1.0)) throw DomainError("classical Mehler kernel requires |t| < 1");
  require_trunc(trunc);
  // hn(x) = H_n(x) / sqrt(2^n n!), so the term is t^n hn(x) hn(y).
  double hx_m1 = 0.0, hx = 1.0;
  double hy_m1 = 0.0, hy = 1.0;
  double tn = 1.0;
  double sum = 1.0;
  double tail = 1.0;
  for (int n = 0; n < trunc.max_order; ++n) {
    double fwd = std::sqrt(2.0 / (n + 1));
    double back = std::sqrt(static_cast<double>(n) / (n + 1));
    double hx_next = x * fwd * hx - back * hx_m1;
    double hy_next = y * fwd * hy - back * hy_m1;
    hx_m1 = hx;
    hx = hx_next;
    hy_m1 = hy;
    hy = hy_next;
    tn *= t;
    double term = tn * hx * hy;
    sum += term;
    tail = std::abs(term);
  }
  check_tail(tail, trunc);
  return {cd(sum, 0.0), tail};
}

cd egf_closed(const KernelArgs& args) {
  require_nu(args.nu, "nu");
  return std::exp(args.nu * (args.u * args.z + args.v * std::conj(args.z) - args.u * args.v));
}

SeriesResult egf_series(const KernelArgs& args, const TruncationSpec& trunc) {
  require_nu(args.nu, "nu");
  require_trunc(trunc);
  const int order = trunc.max_order;
  auto g = chp_table_scaled(order, order, args.z, args.nu);
  // u^m v^n H_{m,n} / (m! n!) = a_m b_n G_{m,n} with a_m = (u sqrt(nu))^m / sqrt(m!)
  const double root_nu = std::sqrt(args.nu);
  std::vector<cd> a(order + 1), b(order + 1);
  a[0] = b[0] = 1.0;
  for (int i = 1; i <= order; ++i) {
    a[i] = a[i - 1] * args.u * root_nu / std::sqrt(double(i));
    b[i] = b[i - 1] * args.v * root_nu / std::sqrt(double(i));
  }
  cd sum{};
  double tail = 0.0;
  for (int s = 0; s <= order; ++s) {
    cd shell{};
    for (int j = 0; j <= s; ++j) shell += a[s] * b[j] * g[s][j];
    for (int i = 0; i < s; ++i) shell += a[i] * b[s] * g[i][s];
    sum += shell;
    tail = std::abs(shell);
  }
  check_tail(tail, trunc);
  return {sum, tail};
}

cd gf_single_closed(int m_prime, cd zeta, cd w, double nu) {
  if (m_prime < 0) throw DomainError("m_prime must be nonnegative");
  require_nu(nu, "nu");
  return std::pow(nu, m_prime) * cpow(std::conj(w) - zeta, m_prime) * std::exp(nu * zeta * w);
}

SeriesResult gf_single_series(int m_prime, cd zeta, cd w, double nu,
                              const TruncationSpec& trunc) {
  if (m_prime < 0) throw DomainError("m_prime must be nonnegative");
  require_nu(nu, "nu");
  require_trunc(trunc);
  auto g = chp_table_scaled(trunc.max_order, m_prime, w, nu);
  // zeta^n H_{n,m'} / n! = coeff_n G_{n,m'} with
  // coeff_n = (zeta sqrt(nu))^n / sqrt(n!) * nu^{m'/2} sqrt(m'!)
  const double root_nu = std::sqrt(nu);
  cd coeff = std::pow(nu, 0.5 * m_prime) * std::sqrt(factorial_double(m_prime));
  cd sum{};
  double tail = 0.0;
  for (int n = 0; n <= trunc.max_order; ++n) {
    if (n > 0) coeff *= zeta * root_nu / std::sqrt(double(n));
    cd term = coeff * g[n][m_prime];
    sum += term;
    tail = std::abs(term);
  }
  check_tail(tail, trunc);
  return {sum, tail};
}

cd partial_mehler_closed(int m, int m_prime, cd z, cd w, double nu) {
  if (m < 0 || m_prime < 0) throw DomainError("indices must be nonnegative");
  require_nu(nu, "nu");
  double sign = (m_prime % 2 == 0) ? 1.0 : -1.0;
  return sign * chp_eval(m, m_prime, z - w, nu) * std::exp(nu * w * std::conj(z));
}

SeriesResult partial_mehler_series(int m, int m_prime, cd z, cd w, double nu,
                                   const TruncationSpec& trunc) {
  if (m < 0 || m_prime < 0) throw DomainError("indices must be nonnegative");
  require_nu(nu, "nu");
  require_trunc(trunc);
  auto gz = chp_table_scaled(m, trunc.max_order, z, nu);
  auto gw = chp_table_scaled(m_prime, trunc.max_order, w, nu);
  // H_{m,n}(z) conj(H_{m',n}(w)) / (nu^n n!)
  //   = nu^{(m+m')/2} sqrt(m! m'!) G_{m,n}(z) conj(G_{m',n}(w))
  double prefactor = std::pow(nu, 0.5 * (m + m_prime)) *
                     std::sqrt(factorial_double(m) * factorial_double(m_prime));
  cd sum{};
  double tail = 0.0;
  for (int n = 0; n <= trunc.max_order; ++n) {
    cd term = prefactor * gz[m][n] * std::conj(gw[m_prime][n]);
    sum += term;
    tail = std::abs(term);
  }
  check_tail(tail, trunc);
  return {sum, tail};
}

cd mehler1_closed(const KernelArgs& args) {
  require_nu(args.nu, "nu");
  if (!(std::abs(args.u) < 1.0)) throw DomainError("first Mehler formula requires |u| < 1");
  cd one_minus_u = 1.0 - args.u;
  cd pairing = std::exp(args.nu * args.w * std::conj(args.z));
  return pairing / one_minus_u *
         std::exp(-args.nu * args.u * std::norm(args.z - args.w) / one_minus_u);
}

SeriesResult mehler1_series(const KernelArgs& args, const TruncationSpec& trunc) {
  require_nu(args.nu, "nu");
  if (!(std::abs(args.u) <= 0.95)) {
    throw DomainError("first Mehler series requires |u| <= 0.95");
  }
  require_trunc(trunc);
  const int order = trunc.max_order;
  const double nu = args.nu;
  auto gz = chp_table_scaled(order, order, args.z, nu);
  auto gw = chp_table_scaled(order, order, args.w, nu);
  // u^m H_{m,n}(z) conj(H_{m,n}(w)) / (nu^{m+n} m! n!) = u^m G_{m,n}(z) conj(G_{m,n}(w))
  std::vector<cd> up(order + 1);
  up[0] = 1.0;
  for (int i = 1; i <= order; ++i) up[i] = up[i - 1] * args.u;
  cd sum{};
  double tail = 0.0;
  for (int s = 0; s <= order; ++s) {
    cd shell{};
    for (int j = 0; j <= s; ++j) shell += up[s] * gz[s][j] * std::conj(gw[s][j]);
    for (int i = 0; i < s; ++i) shell += up[i] * gz[i][s] * std::conj(gw[i][s]);
    sum += shell;
    tail = std::abs(shell);
  }
  check_tail(tail, trunc);
  return {sum, tail};
}

cd mehler2_closed(const KernelArgs& args) {
  require_nu(args.nu, "nu");
  require_nu(args.nu_prime, "nu_prime");
  double p = real_uv(args.u, args.v);
  double nn = args.nu * args.nu_prime;
  double denom = 1.0 - nn * p;
  if (!(denom > 0.0)) throw DomainError("second Mehler formula requires 1 - nu nu' uv > 0");
  cd zbar = std::conj(args.z);
  cd wbar = std::conj(args.w);
  cd expo = -nn *
            ((args.nu * std::norm(args.z) + args.nu_prime * std::norm(args.w)) * p -
             args.u * args.z * args.w - args.v * zbar * wbar) /
            denom;
  return std::exp(expo) / denom;
}

SeriesResult mehler2_series(const KernelArgs& args, const TruncationSpec& trunc) {
  require_nu(args.nu, "nu");
  require_nu(args.nu_prime, "nu_prime");
  require_trunc(trunc);
  double p = real_uv(args.u, args.v);
  double nn = args.nu * args.nu_prime;
  if (!(1.0 - nn * p > 0.0)) {
    throw DomainError("second Mehler formula requires 1 - nu nu' uv > 0");
  }
  if (std::abs(nn * p) > 0.9) {
    throw DomainError("second Mehler series requires |nu nu' uv| <= 0.9");
  }
  const int order = trunc.max_order;
  auto gz = chp_table_scaled(order, order, args.z, args.nu);
  auto gw = chp_table_scaled(order, order, args.w, args.nu_prime);
  // u^m v^n H^nu_{m,n}(z) H^nu'_{m,n}(w) / (m! n!)
  //   = (u sqrt(nu nu'))^m (v sqrt(nu nu'))^n G_{m,n}(z) G_{m,n}(w)
  const double root = std::sqrt(nn);
  std::vector<cd> up(order + 1), vp(order + 1);
  up[0] = vp[0] = 1.0;
  for (int i = 1; i <= order; ++i) {
    up[i] = up[i - 1] * args.u * root;
    vp[i] = vp[i - 1] * args.v * root;
  }
  cd sum{};
  double tail = 0.0;
  for (int s = 0; s <= order; ++s) {
    cd shell{};
    for (int j = 0; j <= s; ++j) shell += up[s] * vp[j] * gz[s][j] * gw[s][j];
    for (int i = 0; i < s; ++i) shell += up[i] * vp[s] * gz[i][s] * gw[i][s];
    sum += shell;
    tail = std::abs(shell);
  }
  check_tail(tail, trunc);
  return {sum, tail};
}

std::pair<cd, cd> specialized_identity(SpecializedId id, const SpecializedParams& p,
                                       const TruncationSpec& trunc) {
  require_nu(p.nu, "nu");
  require_trunc(trunc);
  const int order = trunc.max_order;

  switch (id) {
    case SpecializedId::kMehler0: {
      require_nu(p.nu_prime, "nu_prime");
      double nn = p.nu * p.nu_prime;
      if (!(nn < 1.0)) throw DomainError("identity requires nu nu' < 1");
      if (nn > 0.9) throw DomainError("series requires nu nu' <= 0.9");
      auto gz = chp_table_scaled(order, order, p.z, p.nu);
      auto gw = chp_table_scaled(order, order, p.w, p.nu_prime);
      // H^nu_{m,n}(z) H^nu'_{m,n}(w) / (m! n!) = (nu nu')^{(m+n)/2} G G
      const double root = std::sqrt(nn);
      std::vector<double> pw(order + 1);
      pw[0] = 1.0;
      for (int i = 1; i <= order; ++i) pw[i] = pw[i - 1] * root;
      cd sum{};
      double tail = 0.0;
      for (int s = 0; s <= order; ++s) {
        cd shell{};
        for (int j = 0; j <= s; ++j) shell += pw[s] * pw[j] * gz[s][j] * gw[s][j];
        for (int i = 0; i < s; ++i) shell += pw[i] * pw[s] * gz[i][s] * gw[i][s];
        sum += shell;
        tail = std::abs(shell);
      }
      check_tail(tail, trunc);
      double denom = 1.0 - nn;
      cd closed =
          std::exp(-nn / denom *
                   (p.nu * std::norm(p.z) + p.nu_prime * std::norm(p.w) -
                    2.0 * (p.z * p.w).real())) /
          denom;
      return {sum, closed};
    }
    case SpecializedId::kMehler1SqMod:
    case SpecializedId::kMehler2Sq: {
      double uv = real_uv(p.u, p.v);
      double n2uv = p.nu * p.nu * uv;
      if (!(std::abs(n2uv) < 1.0)) throw DomainError("identity requires |nu^2 uv| < 1");
      if (std::abs(n2uv) > 0.9) throw DomainError("series requires |nu^2 uv| <= 0.9");
      auto g = chp_table_scaled(order, order, p.z, p.nu);
      // u^m v^n (H_{m,n})^2 / (m! n!) = (u nu)^m (v nu)^n G^2, same for |H|^2
      std::vector<cd> up(order + 1), vp(order + 1);
      up[0] = vp[0] = 1.0;
      for (int i = 1; i <= order; ++i) {
        up[i] = up[i - 1] * p.u * p.nu;
        vp[i] = vp[i - 1] * p.v * p.nu;
      }
      bool sq_mod = id == SpecializedId::kMehler1SqMod;
      auto weight = [&](int i, int j) {
        cd gij = g[i][j];
        return sq_mod ? cd(std::norm(gij), 0.0) : gij * gij;
      };
      cd sum{};
      double tail = 0.0;
      for (int s = 0; s <= order; ++s) {
        cd shell{};
        for (int j = 0; j <= s; ++j) shell += up[s] * vp[j] * weight(s, j);
        for (int i = 0; i < s; ++i) shell += up[i] * vp[s] * weight(i, s);
        sum += shell;
        tail = std::abs(shell);
      }
      check_tail(tail, trunc);
      double denom = 1.0 - n2uv;
      cd expo;
      if (sq_mod) {
        expo = p.nu * p.nu * (p.u + p.v - 2.0 * p.nu * uv) * std::norm(p.z) / denom;
      } else {
        cd zbar = std::conj(p.z);
        expo = p.nu * p.nu *
               (p.u * p.z * p.z + p.v * zbar * zbar - 2.0 * p.nu * uv * std::norm(p.z)) /
               denom;
      }
      return {sum, std::exp(expo) / denom};
    }
    case SpecializedId::kMehler3: {
      double ln = p.lambda * p.nu;
      if (!(std::abs(ln) < 1.0)) throw DomainError("identity requires |lambda nu| < 1");
      if (std::abs(ln) > 0.9) throw DomainError("series requires |lambda nu| <= 0.9");
      auto g = chp_table_scaled(order, order, p.z, p.nu);
      // lambda^m H_{m,m} / m! = (lambda nu)^m G_{m,m}
      double coeff = 1.0;
      cd sum{};
      double tail = 0.0;
      for (int m = 0; m <= order; ++m) {
        if (m > 0) coeff *= ln;
        cd term = coeff * g[m][m];
        sum += term;
        tail = std::abs(term);
      }
      check_tail(tail, trunc);
      double denom = 1.0 + ln;
      cd closed = std::exp(p.lambda * p.nu * p.nu * std::norm(p.z) / denom) / denom;
      return {sum, closed};
    }
  }
  throw DomainError("unknown specialized identity");
}

cd heat_kernel_closed(const HeatArgs& args) {
  if (!(args.t > 0.0)) throw DomainError("heat kernel requires t > 0");
  require_nu(args.nu, "nu");
  KernelArgs k{std::exp(-args.nu * args.t), 0.0, args.z, args.z0, args.nu, args.nu};
  return args.nu / M_PI * mehler1_closed(k);
}

SeriesResult heat_kernel_series(const HeatArgs& args, const TruncationSpec& trunc) {
  if (!(args.t > 0.0)) throw DomainError("heat kernel requires t > 0");
  require_nu(args.nu, "nu");
  KernelArgs k{std::exp(-args.nu * args.t), 0.0, args.z, args.z0, args.nu, args.nu};
  SeriesResult res = mehler1_series(k, trunc);
  double scale = args.nu / M_PI;
  return {scale * res.value, scale * res.tail};
}

cd heat_kernel_printed(const HeatArgs& args) {
  if (!(args.t > 0.0)) throw DomainError("heat kernel requires t > 0");
  require_nu(args.nu, "nu");
  double nu = args.nu;
  return nu / M_PI * std::exp(nu * (args.t + args.z0 * std::conj(args.z))) /
         (1.0 - std::exp(nu * args.t)) *
         std::exp(std::norm(args.z - args.z0) / std::expm1(nu * args.t));
}

}  // namespace chermite
