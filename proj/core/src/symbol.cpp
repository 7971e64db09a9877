#include "tm32/symbol.hpp"

#include <algorithm>

#include "tm32/error.hpp"

namespace tm32 {

char symbol_char(Symbol s) {
  if (s < 10) return static_cast<char>('0' + s);
  if (s < kMaxSymbols) return static_cast<char>('a' + (s - 10));
  throw Error(ErrorKind::UnsupportedAlphabet, "symbol value " + std::to_string(s) + " has no printable name");
}

Symbol parse_symbol(char c) {
  if (c >= '0' && c <= '9') return static_cast<Symbol>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<Symbol>(10 + (c - 'a'));
  throw Error(ErrorKind::Parse, std::string("not a symbol character: '") + c + "'");
}

std::string to_text(std::span<const Symbol> w) {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(symbol_char(s));
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) w.push_back(parse_symbol(c));
  return w;
}

Alphabet::Alphabet(std::initializer_list<Symbol> symbols) : Alphabet(std::vector<Symbol>(symbols)) {}

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::sort(symbols_.begin(), symbols_.end());
  symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
  if (!symbols_.empty() && symbols_.back() >= kMaxSymbols) {
    throw Error(ErrorKind::UnsupportedAlphabet, "symbol values must be below 36");
  }
}

Alphabet Alphabet::range(Symbol size) {
  std::vector<Symbol> s(size);
  for (Symbol i = 0; i < size; ++i) s[i] = i;
  return Alphabet(std::move(s));
}

bool Alphabet::contains(Symbol s) const noexcept {
  return std::binary_search(symbols_.begin(), symbols_.end(), s);
}

bool Alphabet::contains(std::span<const Symbol> w) const noexcept {
  return std::all_of(w.begin(), w.end(), [this](Symbol s) { return contains(s); });
}

bool Alphabet::is_binary() const noexcept {
  return symbols_ == std::vector<Symbol>{0, 1};
}

std::size_t Alphabet::bound() const noexcept {
  return symbols_.empty() ? 0 : static_cast<std::size_t>(symbols_.back()) + 1;
}

}  // namespace tm32
