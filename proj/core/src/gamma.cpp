#include "maxqc/gamma.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace maxqc {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

Gamma Gamma::parse(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("gamma: not a decimal in (0, 1]: '" + std::string(text) + "'"); };
  if (text.empty()) fail();

  std::int64_t num = 0;
  std::int64_t den = 1;
  bool seen_dot = false;
  bool seen_digit = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_dot) fail();
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    seen_digit = true;
    if (num > 100'000'000'000LL || den > 100'000'000'000LL) fail();
    num = num * 10 + (c - '0');
    if (seen_dot) den *= 10;
  }
  if (!seen_digit) fail();
  if (num == 0 || num > den) fail();
  return from_fraction(num, den);
}

Gamma Gamma::from_fraction(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num <= 0 || num > den) {
    throw std::invalid_argument("gamma: fraction must lie in (0, 1]");
  }
  const std::int64_t g = std::gcd(num, den);
  return Gamma(num / g, den / g);
}

std::int64_t Gamma::ceil_times(std::int64_t x) const { return ceil_div(num_ * x, den_); }

std::int64_t Gamma::floor_times(std::int64_t x) const { return (num_ * x) / den_; }

std::int64_t Gamma::floor_complement_times(std::int64_t x) const { return ((den_ - num_) * x) / den_; }

std::int64_t Gamma::ceil_divided(std::int64_t x) const { return ceil_div(x * den_, num_); }

std::int64_t Gamma::min_degree(std::int64_t size) const { return size <= 1 ? 0 : ceil_times(size - 1); }

std::string Gamma::str() const {
  std::string out = std::to_string(num_ / den_);
  std::int64_t rem = num_ % den_;
  if (rem == 0) return out;
  out.push_back('.');
  // den_ divides a power of ten whenever the value came from a decimal literal;
  // cap the expansion for arbitrary fractions.
  for (int digits = 0; rem != 0 && digits < 12; ++digits) {
    rem *= 10;
    out.push_back(static_cast<char>('0' + rem / den_));
    rem %= den_;
  }
  return out;
}

}  // namespace maxqc
