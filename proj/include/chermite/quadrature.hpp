#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "chermite/report.hpp"

namespace chermite {

/// Tensor Gauss-Hermite rule for integrals over the complex plane of
/// integrands that decay like exp(-scale |xi|^2).
///
/// The 1D nodes/weights are for the weight exp(-s^2); the stored axis nodes
/// are x_i = s_i / sqrt(scale) and the axis weights fold in exp(s_i^2) and
/// the change of variables, so integrate_plane applies them to the bare
/// integrand (Gaussian factor included in f).
class QuadratureRule {
 public:
  QuadratureRule(int nodes_per_axis, double scale);

  int nodes_per_axis() const { return static_cast<int>(raw_nodes_.size()); }
  double scale() const { return scale_; }

  /// Same raw nodes, different Gaussian concentration.
  QuadratureRule with_scale(double new_scale) const;

  const std::vector<double>& axis_nodes() const { return axis_nodes_; }
  const std::vector<double>& axis_weights() const { return axis_weights_; }

  /// Raw 1D rule: sum_i raw_weights[i] f(raw_nodes[i]) ~ int e^{-s^2} f(s) ds.
  const std::vector<double>& raw_nodes() const { return raw_nodes_; }
  const std::vector<double>& raw_weights() const { return raw_weights_; }

 private:
  void rebuild_axis();

  double scale_;
  std::vector<double> raw_nodes_;
  std::vector<double> raw_weights_;
  std::vector<double> axis_nodes_;
  std::vector<double> axis_weights_;
};

/// int_C exp(-gamma |xi|^2 + alpha xi + beta conj(xi)) dlambda(xi)
///   = (pi / gamma) exp(alpha beta / gamma),  gamma > 0.
std::complex<double> gaussian_integral_closed(double gamma, std::complex<double> alpha,
                                              std::complex<double> beta);

/// Tensor quadrature of f over the plane; f must decay like
/// exp(-gamma |xi|^2) with gamma near rule.scale().
template <typename F>
std::complex<double> integrate_plane(F&& f, const QuadratureRule& rule) {
  const auto& x = rule.axis_nodes();
  const auto& w = rule.axis_weights();
  std::complex<double> acc{};
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::complex<double> row{};
    for (std::size_t j = 0; j < x.size(); ++j) {
      row += w[j] * f(std::complex<double>(x[i], x[j]));
    }
    acc += w[i] * row;
  }
  return acc;
}

/// Parameters of the Gaussian integral representation of H_{m,n}:
/// mu is the Gaussian concentration and nu = alpha beta / mu, which must be
/// real and positive.
struct IntegralRepParams {
  double mu = 1.0;
  std::complex<double> alpha{0.0, 1.0};
  std::complex<double> beta{0.0, -1.0};

  /// Validated nu = alpha beta / mu; throws DomainError if alpha beta is not
  /// real positive or mu <= 0.
  double nu() const;
};

/// H_{m,n}(z, conj z) recovered by quadrature of
/// (mu/pi) (-alpha)^m beta^n int xi^m conj(xi)^n
///   exp(nu |z|^2 - mu |xi|^2 + alpha xi conj(z) - beta conj(xi) z) dlambda.
std::complex<double> chp_integral_rep(int m, int n, std::complex<double> z,
                                      const IntegralRepParams& params,
                                      const QuadratureRule& rule);

/// Closed-form square norm (pi/nu) nu^{m+n} m! n! under weight e^{-nu|z|^2}.
double norm_squared_closed(int m, int n, double nu);

/// Quadrature of int |H_{m,n}|^2 e^{-nu |z|^2} dlambda.
double norm_squared_quad(int m, int n, double nu, const QuadratureRule& rule);

/// Quadrature of int H_{m,n}(z) conj(H_{j,k}(z)) e^{-nu |z|^2} dlambda.
std::complex<double> inner_product_quad(int m, int n, int j, int k, double nu,
                                        const QuadratureRule& rule);

/// Self-reciprocity identity: quadrature of the Fourier-type transform of
/// H_{k,j} against the closed right-hand side
///   pi nu'^{j+k-1} (1 - nu nu' uv) u^j v^k
///   exp(nu^2 nu' uv |z|^2 / (1 - nu nu' uv)) H_{j,k}(z).
/// The integrand exponent uses the grouping
/// (-nu' |w|^2 + nu nu' (u z w + v zbar wbar)) / (1 - nu nu' uv), which is
/// what expanding the second Mehler formula against the weight actually
/// yields; the report's meta records the residual of the sign-variant
/// grouping as well.
IdentityReport self_reciprocity_check(int j, int k, std::complex<double> u,
                                      std::complex<double> v, std::complex<double> z,
                                      double nu, double nu_prime,
                                      const QuadratureRule& rule);

/// Fourier eigenfunction identity at nu = 1:
/// int e^{i Re(zw)} e^{-|w|^2/2} H_{k,j}(w) dlambda(w)
///   = 2 pi i^{j+k} e^{-|z|^2/2} H_{j,k}(z).
IdentityReport fourier_eigen_check(int j, int k, std::complex<double> z,
                                   const QuadratureRule& rule);

}  // namespace chermite
