#include "tm32/substitution.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "tm32/error.hpp"

namespace tm32 {

// ---------------------------------------------------------------- Morphism

Morphism::Morphism(Alphabet alphabet, std::map<Symbol, Word> rules) : alphabet_(std::move(alphabet)) {
  images_.resize(alphabet_.bound());
  for (Symbol s : alphabet_.symbols()) {
    auto it = rules.find(s);
    if (it == rules.end()) {
      throw Error(ErrorKind::MissingRule, std::string("morphism has no image for symbol ") + symbol_char(s));
    }
    if (!alphabet_.contains(it->second)) {
      throw Error(ErrorKind::UnsupportedAlphabet, "morphism image leaves the alphabet");
    }
    images_[s] = it->second;
  }
  if (rules.size() != alphabet_.size()) {
    throw Error(ErrorKind::UnsupportedAlphabet, "morphism has rules for symbols outside its alphabet");
  }
}

const Word& Morphism::image(Symbol s) const {
  if (!alphabet_.contains(s)) {
    throw Error(ErrorKind::UnsupportedAlphabet, std::string("symbol outside alphabet: ") + symbol_char(s));
  }
  return images_[s];
}

Word Morphism::apply(std::span<const Symbol> w) const {
  Word out;
  for (Symbol s : w) {
    const Word& img = image(s);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

MorphismFamily::MorphismFamily(std::vector<Morphism> members) : members_(std::move(members)) {
  if (members_.empty()) throw Error(ErrorKind::InvalidParameter, "morphism family needs period >= 1");
  for (const auto& m : members_) {
    if (!(m.alphabet() == members_.front().alphabet())) {
      throw Error(ErrorKind::UnsupportedAlphabet, "family members must share one alphabet");
    }
  }
}

Word MorphismFamily::apply(std::span<const Symbol> w, std::size_t phase) const {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Word& img = members_[(phase + i) % members_.size()].image(w[i]);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

// ------------------------------------------------------- BlockSubstitution

namespace {
constexpr unsigned kBitsPerSymbol = 6;
constexpr std::size_t kMaxBlockLength = 64 / kBitsPerSymbol;
}  // namespace

BlockSubstitution::BlockSubstitution(Alphabet alphabet, std::size_t block_length, std::map<Word, Word> rules)
    : alphabet_(std::move(alphabet)), r_(block_length), rules_(std::move(rules)) {
  if (r_ == 0 || r_ > kMaxBlockLength) {
    throw Error(ErrorKind::InvalidParameter, "block length must be in [1, 10]");
  }
  for (const auto& [block, img] : rules_) {
    if (block.size() != r_) throw Error(ErrorKind::InvalidParameter, "rule block has the wrong length");
    if (!alphabet_.contains(block) || !alphabet_.contains(img)) {
      throw Error(ErrorKind::UnsupportedAlphabet, "rule uses symbols outside the alphabet");
    }
    index_.emplace(key(block), img);
  }
}

std::uint64_t BlockSubstitution::key(std::span<const Symbol> block) const {
  std::uint64_t k = 0;
  for (Symbol s : block) k = (k << kBitsPerSymbol) | s;
  return k;
}

bool BlockSubstitution::total() const noexcept {
  std::size_t expected = 1;
  for (std::size_t i = 0; i < r_; ++i) expected *= alphabet_.size();
  return rules_.size() == expected;
}

const Word* BlockSubstitution::find(std::span<const Symbol> block) const {
  if (block.size() != r_) return nullptr;
  auto it = index_.find(key(block));
  return it == index_.end() ? nullptr : &it->second;
}

const Word& BlockSubstitution::image(std::span<const Symbol> block) const {
  const Word* img = find(block);
  if (img == nullptr) {
    throw Error(ErrorKind::MissingRule, "no rule for block " + to_text(block));
  }
  return *img;
}

Word BlockSubstitution::apply(std::span<const Symbol> w) const {
  Word out;
  for (std::size_t i = 0; i + r_ <= w.size(); i += r_) {
    const Word& img = image(w.subspan(i, r_));
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

BlockSubstitution to_block_substitution(const MorphismFamily& family) {
  const std::size_t r = family.period();
  const auto& symbols = family.alphabet().symbols();
  std::map<Word, Word> rules;
  Word block(r, symbols.front());
  std::vector<std::size_t> digit(r, 0);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) block[i] = symbols[digit[i]];
    rules.emplace(block, family.apply(block));
    std::size_t pos = r;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < symbols.size()) break;
      digit[pos] = 0;
      if (pos == 0) return BlockSubstitution(family.alphabet(), r, std::move(rules));
    }
  }
}

// -------------------------------------------------------------------- Dfao

Dfao::Dfao(std::size_t state_count, std::size_t digit_count, std::vector<int> transitions,
           std::vector<Symbol> outputs, std::size_t initial)
    : digits_(digit_count), transitions_(std::move(transitions)), outputs_(std::move(outputs)), initial_(initial) {
  if (outputs_.size() != state_count || transitions_.size() != state_count * digit_count) {
    throw Error(ErrorKind::InvalidParameter, "DFAO tables do not match the declared sizes");
  }
  if (initial_ >= state_count) throw Error(ErrorKind::InvalidParameter, "DFAO initial state out of range");
  for (int t : transitions_) {
    if (t != kNoTransition && (t < 0 || static_cast<std::size_t>(t) >= state_count)) {
      throw Error(ErrorKind::InvalidParameter, "DFAO transition target out of range");
    }
  }
}

std::size_t Dfao::step(std::size_t state, std::uint8_t digit) const {
  if (digit >= digits_ || transitions_[state * digits_ + digit] == kNoTransition) {
    throw Error(ErrorKind::InvalidDigit, "no transition on digit " + std::to_string(digit));
  }
  return static_cast<std::size_t>(transitions_[state * digits_ + digit]);
}

Symbol Dfao::eval(std::span<const std::uint8_t> digits) const {
  std::size_t state = initial_;
  for (auto d : digits) state = step(state, d);
  return outputs_[state];
}

Symbol dfao_eval(const Dfao& a, const numeration::DigitString& input) { return a.eval(input.digits); }

// ------------------------------------------------------------ fixed points

namespace {

// Writes `img` at positions out, out+1, ...: positions already in the buffer
// must agree, later ones are appended.
void commit(std::vector<Symbol>& buf, std::size_t out, std::span<const Symbol> img) {
  for (std::size_t t = 0; t < img.size(); ++t) {
    const std::size_t pos = out + t;
    if (pos < buf.size()) {
      if (buf[pos] != img[t]) {
        throw Error(ErrorKind::Inconsistent, "fixed point disagrees with itself at position " +
                                                 std::to_string(pos));
      }
    } else {
      buf.push_back(img[t]);
    }
  }
}

std::string seed_error(Symbol seed) { return std::string("seed ") + symbol_char(seed) + " is not in the alphabet"; }

}  // namespace

SymbolStream alternating_fixed_point(const MorphismFamily& family, Symbol seed) {
  if (!family.alphabet().contains(seed)) throw Error(ErrorKind::UnsupportedAlphabet, seed_error(seed));
  struct Cursor {
    std::size_t read = 0;
    std::size_t out = 0;
  };
  auto grow = [family, seed, cur = Cursor{}](std::vector<Symbol>& buf, std::size_t want) mutable {
    if (buf.empty()) buf.push_back(seed);
    while (buf.size() < want) {
      if (cur.read >= buf.size()) {
        throw Error(ErrorKind::GenerationStalled,
                    "alternating fixed point stopped growing at length " + std::to_string(buf.size()));
      }
      const Word& img = family.member(cur.read % family.period()).image(buf[cur.read]);
      commit(buf, cur.out, img);
      cur.out += img.size();
      ++cur.read;
    }
  };
  // Validate the seed eagerly so inconsistency surfaces at construction.
  SymbolStream s(family.alphabet(), std::move(grow), "alternating-fixed-point");
  s.prefix(1);
  return s;
}

SymbolStream block_fixed_point(const BlockSubstitution& beta, Symbol seed) {
  if (!beta.alphabet().contains(seed)) throw Error(ErrorKind::UnsupportedAlphabet, seed_error(seed));
  struct Cursor {
    std::size_t read = 0;
    std::size_t out = 0;
  };
  auto grow = [beta, seed, cur = Cursor{}](std::vector<Symbol>& buf, std::size_t want) mutable {
    const std::size_t r = beta.block_length();
    if (buf.empty()) buf.push_back(seed);
    while (buf.size() < want) {
      if (cur.read + r <= buf.size()) {
        const Word& img = beta.image(std::span<const Symbol>(buf).subspan(cur.read, r));
        commit(buf, cur.out, img);
        cur.out += img.size();
        cur.read += r;
        continue;
      }
      // Incomplete block: commit the common prefix of the images of every
      // completion that has a rule.
      const std::size_t known = buf.size() - cur.read;
      Word block(buf.begin() + static_cast<std::ptrdiff_t>(cur.read), buf.end());
      std::optional<Word> common;
      for (const auto& [candidate, img] : beta.rules()) {
        if (!std::equal(block.begin(), block.end(), candidate.begin())) continue;
        if (!common) {
          common = img;
        } else {
          auto mismatch = std::mismatch(common->begin(), common->end(), img.begin(), img.end());
          common->erase(mismatch.first, common->end());
        }
      }
      const std::size_t before = buf.size();
      if (common) commit(buf, cur.out, *common);
      if (buf.size() == before) {
        throw Error(ErrorKind::GenerationStalled, "block fixed point stopped growing at length " +
                                                      std::to_string(before) + " (" + std::to_string(known) +
                                                      " of " + std::to_string(r) + " block symbols known)");
      }
    }
  };
  SymbolStream s(beta.alphabet(), std::move(grow), "block-fixed-point");
  s.prefix(1);
  return s;
}

// ------------------------------------------------------------- text format

BlockSubstitution parse_block_substitution(std::istream& in) {
  std::map<Word, Word> rules;
  std::vector<Symbol> seen;
  std::size_t r = 0;
  std::string line;
  std::size_t lineno = 0;
  auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return std::string();
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected `block -> image`");
    }
    Word block = parse_word(trim(line.substr(0, arrow)));
    Word img = parse_word(trim(line.substr(arrow + 2)));
    if (block.empty()) throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": empty block");
    if (r == 0) r = block.size();
    if (block.size() != r) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": all blocks must have length " +
                                        std::to_string(r));
    }
    seen.insert(seen.end(), block.begin(), block.end());
    seen.insert(seen.end(), img.begin(), img.end());
    if (!rules.emplace(std::move(block), std::move(img)).second) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": duplicate block");
    }
  }
  if (rules.empty()) throw Error(ErrorKind::Parse, "no rules");
  return BlockSubstitution(Alphabet(std::move(seen)), r, std::move(rules));
}

BlockSubstitution parse_block_substitution(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_block_substitution(in);
}

}  // namespace tm32
