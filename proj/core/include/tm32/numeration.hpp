#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tm32/symbol.hpp"

// Base-3/2 numeration: n = sum_i d_i * (1/2) * (3/2)^i with d_i in {0,1,2}.
namespace tm32::numeration {

// Digits most-significant first. The empty string represents 0.
struct DigitString {
  std::vector<std::uint8_t> digits;

  // Canonical: every digit in {0,1,2} and no leading 0.
  bool canonical() const noexcept;
  std::size_t size() const noexcept { return digits.size(); }
  std::string str() const;
  static DigitString parse(std::string_view text);

  bool operator==(const DigitString&) const = default;
};

// Least-significant digit first: d = 2n mod 3, then n <- (2n - d) / 3.
DigitString expand(std::uint64_t n);

// Exact value of a digit string; throws ErrorKind::InvalidDigit outside {0,1,2}.
Rational value_of(const DigitString& d);

std::uint64_t sum_of_digits(std::uint64_t n);

struct TreeEdge {
  std::uint64_t child;
  std::uint8_t digit;
  bool loop;  // the hidden 0-labelled self-loop at the root

  bool operator==(const TreeEdge&) const = default;
};

// Children in the numeration tree, left to right. Even vertices have two
// children (labels 0 and 2), odd vertices one (label 1).
std::vector<TreeEdge> children(std::uint64_t n);

// Leftmost descendant of j at depth k, i.e. the length of the k-fold image
// of the prefix of length j under the alternating substitution.
std::uint64_t image_length(std::uint64_t j, unsigned k);

// (n_0(j) mod 2, ..., n_k(j) mod 2).
std::vector<std::uint8_t> parity_vector(std::uint64_t j, unsigned k);

// Least period of j -> parity_vector(j, k), scanning j < window.
std::uint64_t parity_vector_least_period(unsigned k, std::uint64_t window);

}  // namespace tm32::numeration
