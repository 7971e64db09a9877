#include "tm32/numeration.hpp"

#include <algorithm>
#include <limits>

#include "tm32/error.hpp"

namespace tm32::numeration {

bool DigitString::canonical() const noexcept {
  if (!digits.empty() && digits.front() == 0) return false;
  return std::all_of(digits.begin(), digits.end(), [](std::uint8_t d) { return d <= 2; });
}

std::string DigitString::str() const {
  std::string s;
  s.reserve(digits.size());
  for (auto d : digits) s.push_back(static_cast<char>('0' + d));
  return s;
}

DigitString DigitString::parse(std::string_view text) {
  DigitString d;
  for (char c : text) {
    if (c < '0' || c > '9') throw Error(ErrorKind::InvalidDigit, std::string("not a digit: '") + c + "'");
    d.digits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return d;
}

DigitString expand(std::uint64_t n) {
  if (n > std::numeric_limits<std::uint64_t>::max() / 2) {
    throw Error(ErrorKind::InvalidParameter, "expand: n too large for 64-bit digit recurrence");
  }
  DigitString out;
  while (n != 0) {
    const std::uint64_t twice = 2 * n;
    const auto d = static_cast<std::uint8_t>(twice % 3);
    out.digits.push_back(d);
    n = (twice - d) / 3;
  }
  std::reverse(out.digits.begin(), out.digits.end());
  return out;
}

Rational value_of(const DigitString& d) {
  // Horner from the most significant digit: v <- v * 3/2 + digit/2.
  Rational v = 0;
  const Rational three_halves(3, 2);
  for (auto digit : d.digits) {
    if (digit > 2) throw Error(ErrorKind::InvalidDigit, "digit " + std::to_string(digit) + " outside {0,1,2}");
    v = v * three_halves + Rational(digit, 2);
  }
  return v;
}

std::uint64_t sum_of_digits(std::uint64_t n) {
  std::uint64_t s = 0;
  while (n != 0) {
    const std::uint64_t twice = 2 * n;
    const std::uint64_t d = twice % 3;
    s += d;
    n = (twice - d) / 3;
  }
  return s;
}

std::vector<TreeEdge> children(std::uint64_t n) {
  if (n % 2 == 0) {
    const std::uint64_t left = 3 * n / 2;
    return {TreeEdge{left, 0, n == 0}, TreeEdge{left + 1, 2, false}};
  }
  return {TreeEdge{(3 * n + 1) / 2, 1, false}};
}

std::uint64_t image_length(std::uint64_t j, unsigned k) {
  std::uint64_t n = j;
  for (unsigned i = 0; i < k; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / 3) {
      throw Error(ErrorKind::InvalidParameter, "image_length overflows 64 bits");
    }
    n = (n % 2 == 0) ? 3 * n / 2 : 3 * (n - 1) / 2 + 2;
  }
  return n;
}

std::vector<std::uint8_t> parity_vector(std::uint64_t j, unsigned k) {
  std::vector<std::uint8_t> v;
  v.reserve(k + 1);
  std::uint64_t n = j;
  for (unsigned i = 0; i <= k; ++i) {
    v.push_back(static_cast<std::uint8_t>(n % 2));
    if (i < k) n = (n % 2 == 0) ? 3 * n / 2 : 3 * (n - 1) / 2 + 2;
  }
  return v;
}

std::uint64_t parity_vector_least_period(unsigned k, std::uint64_t window) {
  if (window == 0) throw Error(ErrorKind::InvalidParameter, "empty window");
  if (k >= 64) throw Error(ErrorKind::InvalidParameter, "parity vectors longer than 64 bits");
  std::vector<std::uint64_t> packed;
  packed.reserve(window);
  for (std::uint64_t j = 0; j < window; ++j) {
    std::uint64_t bits = 0;
    const auto v = parity_vector(j, k);
    for (unsigned i = 0; i <= k; ++i) bits |= std::uint64_t{v[i]} << i;
    packed.push_back(bits);
  }
  for (std::uint64_t p = 1; p < window; ++p) {
    bool ok = true;
    for (std::uint64_t j = 0; j + p < window && ok; ++j) ok = packed[j] == packed[j + p];
    if (ok) return p;
  }
  return window;
}

}  // namespace tm32::numeration
