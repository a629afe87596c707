#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace chermite {

/// Signed arbitrary-precision integer (sign + base-2^32 magnitude).
///
/// Supports exactly the arithmetic needed for exact polynomial coefficients:
/// addition, subtraction, multiplication, comparison, and conversion to
/// double / decimal string. Division is intentionally absent.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long value);  // NOLINT: implicit by design, mirrors integer literals

  bool is_zero() const { return sign_ == 0; }
  int signum() const { return sign_; }

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);

  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }

  bool operator==(const BigInt& rhs) const = default;
  std::strong_ordering operator<=>(const BigInt& rhs) const;

  double to_double() const;
  std::string to_string() const;

  static BigInt factorial(int n);
  static BigInt binomial(int n, int k);

 private:
  BigInt(int sign, std::vector<std::uint32_t> limbs);

  int sign_ = 0;                       // -1, 0, +1
  std::vector<std::uint32_t> limbs_;   // little-endian, no leading zeros, empty iff zero
};

}  // namespace chermite
