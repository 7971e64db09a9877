#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tm32/numeration.hpp"
#include "tm32/stream.hpp"
#include "tm32/symbol.hpp"

namespace tm32 {

// A morphism A* -> A*, total on its alphabet.
class Morphism {
 public:
  Morphism() = default;
  Morphism(Alphabet alphabet, std::map<Symbol, Word> rules);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Word& image(Symbol s) const;
  Word apply(std::span<const Symbol> w) const;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;  // indexed by symbol value
};

// Tuple (f_0, ..., f_{r-1}) applied periodically by position.
class MorphismFamily {
 public:
  explicit MorphismFamily(std::vector<Morphism> members);

  std::size_t period() const noexcept { return members_.size(); }
  const Alphabet& alphabet() const noexcept { return members_.front().alphabet(); }
  const Morphism& member(std::size_t i) const { return members_.at(i); }

  // f_{phase}(a_0) f_{phase+1}(a_1) ... with indices taken mod r.
  Word apply(std::span<const Symbol> w, std::size_t phase = 0) const;

 private:
  std::vector<Morphism> members_;
};

// Map from length-r blocks to words. Rules may be partial (some blocks can
// never occur in the fixed point of interest); applying an undefined block
// raises ErrorKind::MissingRule.
class BlockSubstitution {
 public:
  BlockSubstitution(Alphabet alphabet, std::size_t block_length, std::map<Word, Word> rules);

  std::size_t block_length() const noexcept { return r_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::map<Word, Word>& rules() const noexcept { return rules_; }
  bool total() const noexcept;

  // nullptr if the block has no rule.
  const Word* find(std::span<const Symbol> block) const;
  const Word& image(std::span<const Symbol> block) const;

  // Applies block by block; a trailing partial block is dropped.
  Word apply(std::span<const Symbol> w) const;

 private:
  std::uint64_t key(std::span<const Symbol> block) const;

  Alphabet alphabet_;
  std::size_t r_;
  std::map<Word, Word> rules_;
  std::unordered_map<std::uint64_t, Word> index_;  // packed block -> image
};

// Deterministic finite automaton with output over digits 0..digit_count-1.
class Dfao {
 public:
  static constexpr int kNoTransition = -1;

  Dfao(std::size_t state_count, std::size_t digit_count, std::vector<int> transitions,
       std::vector<Symbol> outputs, std::size_t initial = 0);

  std::size_t state_count() const noexcept { return outputs_.size(); }
  std::size_t digit_count() const noexcept { return digits_; }
  // Throws ErrorKind::InvalidDigit on a missing transition.
  std::size_t step(std::size_t state, std::uint8_t digit) const;
  Symbol eval(std::span<const std::uint8_t> digits) const;

 private:
  std::size_t digits_;
  std::vector<int> transitions_;  // [state * digit_count + digit]
  std::vector<Symbol> outputs_;
  std::size_t initial_;
};

Symbol dfao_eval(const Dfao& a, const numeration::DigitString& input);

// Grows x = f_0(x_0) f_1(x_1) ... f_{r-1}(x_{r-1}) f_0(x_r) ... from x_0 = seed.
// Each produced symbol is checked against the already-known prefix.
SymbolStream alternating_fixed_point(const MorphismFamily& family, Symbol seed);

// Grows x = beta(x_0..x_{r-1}) beta(x_r..x_{2r-1}) ... from x_0 = seed. While
// the first block is still incomplete, every completion is tried and only
// their common image prefix is committed.
SymbolStream block_fixed_point(const BlockSubstitution& beta, Symbol seed);

// w_0..w_{r-1} -> f_0(w_0) ... f_{r-1}(w_{r-1}) over all r-blocks.
BlockSubstitution to_block_substitution(const MorphismFamily& family);

// Text format, one rule per line: `block -> image`. Blank lines and text
// after '#' are ignored. An empty right-hand side denotes the empty word.
// All blocks must share one length; the alphabet is every symbol that appears.
BlockSubstitution parse_block_substitution(std::istream& in);
BlockSubstitution parse_block_substitution(std::string_view text);

}  // namespace tm32
