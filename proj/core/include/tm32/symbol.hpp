#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tm32 {

// Symbols are small integers. Values 0-9 print as digits, 10-35 as a-z.
using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr Symbol kMaxSymbols = 36;

char symbol_char(Symbol s);
Symbol parse_symbol(char c);

std::string to_text(std::span<const Symbol> w);
Word parse_word(std::string_view text);

class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::initializer_list<Symbol> symbols);
  explicit Alphabet(std::vector<Symbol> symbols);

  static Alphabet binary() { return Alphabet{0, 1}; }
  static Alphabet range(Symbol size);

  bool contains(Symbol s) const noexcept;
  bool contains(std::span<const Symbol> w) const noexcept;
  bool is_binary() const noexcept;
  std::size_t size() const noexcept { return symbols_.size(); }
  // One past the largest symbol value; used to size lookup tables.
  std::size_t bound() const noexcept;
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<Symbol> symbols_;  // sorted, unique
};

}  // namespace tm32
