#pragma once

#include <complex>
#include <map>
#include <string>

#include "chermite/bigint.hpp"

namespace chermite {

/// Exponents of one monomial z^a zbar^b nu^c. All exponents stay nonnegative.
struct Monomial {
  int z = 0;
  int zbar = 0;
  int nu = 0;
  auto operator<=>(const Monomial&) const = default;
};

/// Exact polynomial in the commuting symbols z, zbar, nu with BigInt
/// coefficients. zbar is independent of z until numeric evaluation
/// substitutes zbar = conj(z). No stored coefficient is zero, so structural
/// equality is semantic equality.
class TriPoly {
 public:
  TriPoly() = default;

  static TriPoly constant(BigInt c);
  static TriPoly term(const Monomial& mono, BigInt c);

  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TriPoly operator-() const;
  TriPoly& operator+=(const TriPoly& rhs);
  TriPoly& operator-=(const TriPoly& rhs);
  TriPoly& operator*=(const TriPoly& rhs);
  TriPoly& operator*=(const BigInt& c);

  friend TriPoly operator+(TriPoly lhs, const TriPoly& rhs) { return lhs += rhs; }
  friend TriPoly operator-(TriPoly lhs, const TriPoly& rhs) { return lhs -= rhs; }
  friend TriPoly operator*(TriPoly lhs, const TriPoly& rhs) { return lhs *= rhs; }
  friend TriPoly operator*(TriPoly lhs, const BigInt& c) { return lhs *= c; }

  bool operator==(const TriPoly& rhs) const = default;

  /// Multiply by the monomial z^dz zbar^dzbar nu^dnu (all shifts >= 0).
  TriPoly shifted(int dz, int dzbar, int dnu) const;

  TriPoly d_z() const;
  TriPoly d_zbar() const;

  /// Total degree in (z, zbar) jointly; -1 for the zero polynomial.
  int degree_zzbar() const;

  std::complex<double> eval(std::complex<double> z, std::complex<double> zbar,
                            double nu) const;
  /// Evaluation with the substitution zbar = conj(z).
  std::complex<double> eval(std::complex<double> z, double nu) const;

  /// Human-readable expanded form, e.g. "nu^2 z zbar - nu".
  std::string to_string() const;

 private:
  void add_term(const Monomial& mono, const BigInt& c);

  std::map<Monomial, BigInt> terms_;
};

}  // namespace chermite
