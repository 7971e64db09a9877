#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tm32/stream.hpp"
#include "tm32/symbol.hpp"

namespace tm32::toeplitz {

// A word over A ∪ {?}. Letters are stored as symbols; holes as std::nullopt.
class ToeplitzPattern {
 public:
  // '?' marks a hole. Throws ErrorKind::InvalidPattern when empty or when
  // the first letter is a hole.
  static ToeplitzPattern parse(std::string_view text);

  std::size_t p() const noexcept { return letters_.size(); }
  std::size_t q() const noexcept { return holes_.size(); }
  const std::vector<std::size_t>& hole_positions() const noexcept { return holes_; }
  const std::vector<std::optional<Symbol>>& letters() const noexcept { return letters_; }
  // Letters occurring in the pattern.
  Alphabet alphabet() const;
  // Number of non-hole positions carrying `a`.
  std::size_t count(Symbol a) const;
  std::string str() const;

 private:
  std::vector<std::optional<Symbol>> letters_;
  std::vector<std::size_t> holes_;
  std::vector<std::size_t> hole_rank_;  // position -> index among holes
};

Symbol toeplitz_symbol(const ToeplitzPattern& w, std::size_t i);

// First `length` symbols of the layer T_i: T_1 = w^omega and T_{i+1} fills
// the holes of T_i, in order, with T_i itself. Unresolved holes are nullopt.
std::vector<std::optional<Symbol>> toeplitz_layer(const ToeplitzPattern& w, unsigned i, std::size_t length);

// |w|_a / (p - q).
Rational letter_frequency(const ToeplitzPattern& w, Symbol a);
// Frequency of `a` after `iterations` steps of the replacement matrix
// (letter counts and hole count per block), started from one hole.
Rational letter_frequency_by_iteration(const ToeplitzPattern& w, Symbol a, unsigned iterations = 20);

// log p' / log(p'/q') with p' = p/gcd, q' = q/gcd. Throws
// ErrorKind::DegeneratePattern when q = 0.
double complexity_exponent(const ToeplitzPattern& w);

SymbolStream toeplitz_stream(const ToeplitzPattern& w);

}  // namespace tm32::toeplitz
