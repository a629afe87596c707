#include "chermite/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace chermite {
namespace {

using Limbs = std::vector<std::uint32_t>;

void trim(Limbs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int cmp_mag(const Limbs& a, const Limbs& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Limbs add_mag(const Limbs& a, const Limbs& b) {
  Limbs out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    out.push_back(static_cast<std::uint32_t>(s));
    carry = s >> 32;
  }
  if (carry) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

// requires |a| >= |b|
Limbs sub_mag(const Limbs& a, const Limbs& b) {
  Limbs out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (d < 0) {
      d += (std::int64_t{1} << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(d));
  }
  trim(out);
  return out;
}

Limbs mul_mag(const Limbs& a, const Limbs& b) {
  if (a.empty() || b.empty()) return {};
  Limbs out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  trim(out);
  return out;
}

}  // namespace

BigInt::BigInt(long long value) {
  if (value == 0) return;
  sign_ = value > 0 ? 1 : -1;
  auto mag = value > 0 ? static_cast<std::uint64_t>(value)
                       : std::uint64_t{0} - static_cast<std::uint64_t>(value);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag));
    mag >>= 32;
  }
}

BigInt::BigInt(int sign, Limbs limbs) : sign_(sign), limbs_(std::move(limbs)) {
  trim(limbs_);
  if (limbs_.empty()) sign_ = 0;
}

BigInt BigInt::operator-() const { return BigInt(-sign_, limbs_); }

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) return *this = rhs;
  if (sign_ == rhs.sign_) {
    limbs_ = add_mag(limbs_, rhs.limbs_);
    return *this;
  }
  int c = cmp_mag(limbs_, rhs.limbs_);
  if (c == 0) {
    sign_ = 0;
    limbs_.clear();
  } else if (c > 0) {
    limbs_ = sub_mag(limbs_, rhs.limbs_);
  } else {
    limbs_ = sub_mag(rhs.limbs_, limbs_);
    sign_ = rhs.sign_;
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
  sign_ *= rhs.sign_;
  limbs_ = mul_mag(limbs_, rhs.limbs_);
  if (limbs_.empty()) sign_ = 0;
  return *this;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
  if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
  int c = cmp_mag(limbs_, rhs.limbs_);
  if (sign_ < 0) c = -c;
  return c <=> 0;
}

double BigInt::to_double() const {
  double mag = 0.0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    mag = mag * 4294967296.0 + static_cast<double>(limbs_[i]);
  }
  return sign_ < 0 ? -mag : mag;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  Limbs work = limbs_;
  std::string digits;
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    trim(work);
    for (int d = 0; d < 9; ++d) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt BigInt::factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  BigInt out{1};
  for (int i = 2; i <= n; ++i) out *= BigInt{i};
  return out;
}

BigInt BigInt::binomial(int n, int k) {
  if (k < 0 || k > n) return BigInt{};
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  row[0] = BigInt{1};
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j) row[j] += row[j - 1];
  }
  return row[k];
}

}  // namespace chermite
