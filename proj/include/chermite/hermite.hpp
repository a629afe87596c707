#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "chermite/tri_poly.hpp"

namespace chermite {

/// Evaluation point for the complex Hermite family: z plus the positive
/// magnetic parameter nu.
struct EvalPoint {
  std::complex<double> z;
  double nu = 1.0;
};

/// Exact expanded form of the complex Hermite polynomial H_{m,n} as a
/// TriPoly in (z, zbar, nu):
///
///   H_{m,n} = sum_{k=0}^{min(m,n)} (-1)^k k! C(m,k) C(n,k)
///             nu^{m+n-k} z^{m-k} zbar^{n-k}
///
/// Leading monomial is nu^{m+n} z^m zbar^n with coefficient 1.
TriPoly chp_poly(int m, int n);

/// Numeric evaluation of H_{m,n}(z, conj z) at nu > 0 via the index
/// recurrence H_{m+1,n} = nu z H_{m,n} - nu n H_{m,n-1} with the seed row
/// H_{0,j} = (nu zbar)^j.
std::complex<double> chp_eval(int m, int n, std::complex<double> z, double nu);
std::complex<double> chp_eval(int m, int n, const EvalPoint& p);

/// Value at the origin: (-nu)^m m! when m == n, otherwise 0.
std::complex<double> chp_zero_value(int m, int n, double nu);

/// Full table H[i][j] for 0 <= i <= m_max, 0 <= j <= n_max at a fixed point.
std::vector<std::vector<std::complex<double>>> chp_table(int m_max, int n_max,
                                                         std::complex<double> z,
                                                         double nu);

/// Scaled table G[i][j] = H_{i,j} / (nu^{(i+j)/2} sqrt(i! j!)). Unlike the
/// raw values, which overflow past order ~150, these stay polynomially
/// bounded at any order; the kernel series evaluators are built on this
/// scaling because their weights cancel it exactly.
std::vector<std::vector<std::complex<double>>> chp_table_scaled(int m_max, int n_max,
                                                                std::complex<double> z,
                                                                double nu);

/// Physicists' Hermite polynomial H_n(x), three-term recurrence
/// H_{n+1} = 2x H_n - 2n H_{n-1}.
double real_hermite_eval(int n, double x);

/// Generalized Laguerre polynomial L^(alpha)_n(x), three-term recurrence.
double laguerre_eval(int n, double alpha, double x);

/// The operator -d^2/(dz dzbar) + nu z d/dz applied exactly on a TriPoly
/// (the nu z factor raises both the nu and z exponents by one).
TriPoly magnetic_laplacian_apply(const TriPoly& p);

/// Both sides of the diagonal identity
/// H_{m,m}(z, conj z) = (-1)^m m! nu^m L^(0)_m(nu |z|^2),
/// returned as (complex-Hermite value, Laguerre-side value).
std::pair<std::complex<double>, std::complex<double>> diagonal_laguerre_check(
    int m, const EvalPoint& p);

/// n! as a double.
double factorial_double(int n);

}  // namespace chermite
