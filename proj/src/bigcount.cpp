#include "cif/bigcount.hpp"

#include <algorithm>
#include <stdexcept>

namespace cif {

namespace {
constexpr BigCount::Rep kMax = ~BigCount::Rep{0};

BigCount::Rep gcd128(BigCount::Rep a, BigCount::Rep b) {
  while (b != 0) {
    BigCount::Rep t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace

BigCount BigCount::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  Rep v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("invalid digit in integer literal: " + std::string(text));
    }
    const Rep d = static_cast<Rep>(c - '0');
    if (v > (kMax - d) / 10) throw std::overflow_error("integer literal exceeds 128 bits");
    v = v * 10 + d;
  }
  return from_rep(v);
}

std::uint64_t BigCount::to_u64() const {
  if (v_ > static_cast<Rep>(~std::uint64_t{0})) {
    throw std::overflow_error("BigCount value exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(v_);
}

std::string BigCount::to_string() const {
  if (v_ == 0) return "0";
  std::string out;
  Rep v = v_;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

BigCount& BigCount::operator+=(const BigCount& o) {
  if (v_ > kMax - o.v_) throw std::overflow_error("BigCount addition overflow");
  v_ += o.v_;
  return *this;
}

BigCount& BigCount::operator-=(const BigCount& o) {
  if (o.v_ > v_) throw std::overflow_error("BigCount subtraction below zero");
  v_ -= o.v_;
  return *this;
}

BigCount& BigCount::operator*=(const BigCount& o) {
  if (v_ != 0 && o.v_ > kMax / v_) throw std::overflow_error("BigCount multiplication overflow");
  v_ *= o.v_;
  return *this;
}

BigCount& BigCount::operator/=(const BigCount& o) {
  if (o.v_ == 0) throw std::domain_error("BigCount division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigCount& b) { return os << b.to_string(); }

BigCount binom(int n, int k) {
  if (n < 0) throw std::invalid_argument("binom: n must be non-negative");
  if (k < 0 || k > n) return BigCount{};
  k = std::min(k, n - k);
  // Exact multiplicative form; dividing out the gcd first keeps every
  // intermediate product no larger than the final value times the factor.
  BigCount::Rep result = 1;
  for (int i = 1; i <= k; ++i) {
    BigCount::Rep num = static_cast<BigCount::Rep>(n - k + i);
    BigCount::Rep den = static_cast<BigCount::Rep>(i);
    BigCount::Rep g = gcd128(result, den);
    result /= g;
    den /= g;
    num /= den;  // den divides num here since C(n-k+i, i) is integral
    if (result != 0 && num > kMax / result) throw std::overflow_error("binom overflow");
    result *= num;
  }
  return BigCount::from_rep(result);
}

}  // namespace cif
