#include "chermite/tri_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace chermite {

TriPoly TriPoly::constant(BigInt c) { return term(Monomial{}, std::move(c)); }

TriPoly TriPoly::term(const Monomial& mono, BigInt c) {
  if (mono.z < 0 || mono.zbar < 0 || mono.nu < 0) {
    throw std::invalid_argument("TriPoly monomial exponents must be nonnegative");
  }
  TriPoly out;
  out.add_term(mono, c);
  return out;
}

void TriPoly::add_term(const Monomial& mono, const BigInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TriPoly TriPoly::operator-() const {
  TriPoly out;
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
  return out;
}

TriPoly& TriPoly::operator+=(const TriPoly& rhs) {
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& rhs) {
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
  return *this;
}

TriPoly& TriPoly::operator*=(const TriPoly& rhs) {
  TriPoly out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      out.add_term(Monomial{ma.z + mb.z, ma.zbar + mb.zbar, ma.nu + mb.nu}, ca * cb);
    }
  }
  return *this = std::move(out);
}

TriPoly& TriPoly::operator*=(const BigInt& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

TriPoly TriPoly::shifted(int dz, int dzbar, int dnu) const {
  if (dz < 0 || dzbar < 0 || dnu < 0) {
    throw std::invalid_argument("TriPoly::shifted requires nonnegative shifts");
  }
  TriPoly out;
  for (const auto& [mono, c] : terms_) {
    out.terms_.emplace(Monomial{mono.z + dz, mono.zbar + dzbar, mono.nu + dnu}, c);
  }
  return out;
}

TriPoly TriPoly::d_z() const {
  TriPoly out;
  for (const auto& [mono, c] : terms_) {
    if (mono.z == 0) continue;
    out.add_term(Monomial{mono.z - 1, mono.zbar, mono.nu}, c * BigInt{mono.z});
  }
  return out;
}

TriPoly TriPoly::d_zbar() const {
  TriPoly out;
  for (const auto& [mono, c] : terms_) {
    if (mono.zbar == 0) continue;
    out.add_term(Monomial{mono.z, mono.zbar - 1, mono.nu}, c * BigInt{mono.zbar});
  }
  return out;
}

int TriPoly::degree_zzbar() const {
  int deg = -1;
  for (const auto& [mono, c] : terms_) deg = std::max(deg, mono.z + mono.zbar);
  return deg;
}

std::complex<double> TriPoly::eval(std::complex<double> z, std::complex<double> zbar,
                                   double nu) const {
  int max_z = 0, max_zbar = 0, max_nu = 0;
  for (const auto& [mono, c] : terms_) {
    max_z = std::max(max_z, mono.z);
    max_zbar = std::max(max_zbar, mono.zbar);
    max_nu = std::max(max_nu, mono.nu);
  }
  std::vector<std::complex<double>> zp(max_z + 1), cp(max_zbar + 1);
  std::vector<double> np(max_nu + 1);
  zp[0] = cp[0] = 1.0;
  np[0] = 1.0;
  for (int i = 1; i <= max_z; ++i) zp[i] = zp[i - 1] * z;
  for (int i = 1; i <= max_zbar; ++i) cp[i] = cp[i - 1] * zbar;
  for (int i = 1; i <= max_nu; ++i) np[i] = np[i - 1] * nu;

  std::complex<double> acc{};
  for (const auto& [mono, c] : terms_) {
    acc += c.to_double() * zp[mono.z] * cp[mono.zbar] * np[mono.nu];
  }
  return acc;
}

std::complex<double> TriPoly::eval(std::complex<double> z, double nu) const {
  return eval(z, std::conj(z), nu);
}

std::string TriPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // highest (z, zbar, nu) exponents first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
    BigInt mag = c.signum() < 0 ? -c : c;
    if (first) {
      if (c.signum() < 0) out << "-";
      first = false;
    } else {
      out << (c.signum() < 0 ? " - " : " + ");
    }
    bool bare = mono.z == 0 && mono.zbar == 0 && mono.nu == 0;
    std::string mag_str = mag.to_string();
    bool wrote_coeff = bare || mag_str != "1";
    if (wrote_coeff) out << mag_str;
    auto put = [&](const char* sym, int pow) {
      if (pow == 0) return;
      if (wrote_coeff) out << " ";
      wrote_coeff = true;
      out << sym;
      if (pow > 1) out << "^" << pow;
    };
    put("nu", mono.nu);
    put("z", mono.z);
    put("zbar", mono.zbar);
  }
  return out.str();
}

}  // namespace chermite
