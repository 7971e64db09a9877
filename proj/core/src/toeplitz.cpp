#include "tm32/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tm32/error.hpp"

namespace tm32::toeplitz {

ToeplitzPattern ToeplitzPattern::parse(std::string_view text) {
  ToeplitzPattern w;
  if (text.empty()) throw Error(ErrorKind::InvalidPattern, "empty Toeplitz pattern");
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '?') {
      w.hole_rank_.push_back(w.holes_.size());
      w.holes_.push_back(i);
      w.letters_.push_back(std::nullopt);
    } else {
      Symbol s;
      try {
        s = parse_symbol(text[i]);
      } catch (const Error&) {
        throw Error(ErrorKind::InvalidPattern, "bad pattern character '" + std::string(1, text[i]) + "'");
      }
      w.hole_rank_.push_back(0);
      w.letters_.push_back(s);
    }
  }
  if (!w.letters_.front()) throw Error(ErrorKind::InvalidPattern, "pattern starts with a hole");
  return w;
}

Alphabet ToeplitzPattern::alphabet() const {
  std::vector<Symbol> s;
  for (const auto& l : letters_) {
    if (l) s.push_back(*l);
  }
  return Alphabet(std::move(s));
}

std::size_t ToeplitzPattern::count(Symbol a) const {
  std::size_t c = 0;
  for (const auto& l : letters_) c += (l && *l == a);
  return c;
}

std::string ToeplitzPattern::str() const {
  std::string out;
  for (const auto& l : letters_) out.push_back(l ? symbol_char(*l) : '?');
  return out;
}

Symbol toeplitz_symbol(const ToeplitzPattern& w, std::size_t i) {
  const std::size_t p = w.p();
  const std::size_t q = w.q();
  const auto& letters = w.letters();
  const auto& holes = w.hole_positions();
  for (;;) {
    const std::size_t m = i / p;
    const std::size_t r = i % p;
    if (letters[r]) return *letters[r];
    // r is a hole, hence r > 0, so q*m + c < p*m + r and the index shrinks.
    const std::size_t c = static_cast<std::size_t>(std::lower_bound(holes.begin(), holes.end(), r) - holes.begin());
    i = q * m + c;
  }
}

std::vector<std::optional<Symbol>> toeplitz_layer(const ToeplitzPattern& w, unsigned i, std::size_t length) {
  std::vector<std::optional<Symbol>> layer(length);
  if (i == 0) return layer;
  std::vector<std::optional<Symbol>> base(length);
  for (std::size_t n = 0; n < length; ++n) base[n] = w.letters()[n % w.p()];
  layer = base;
  for (unsigned step = 1; step < i; ++step) {
    // Holes of w^omega, in order, receive the previous layer.
    std::vector<std::optional<Symbol>> next = base;
    std::size_t fill = 0;
    for (std::size_t n = 0; n < length; ++n) {
      if (!base[n]) next[n] = layer[fill++];
    }
    layer = std::move(next);
  }
  return layer;
}

Rational letter_frequency(const ToeplitzPattern& w, Symbol a) {
  return Rational(static_cast<long long>(w.count(a)), static_cast<long long>(w.p() - w.q()));
}

Rational letter_frequency_by_iteration(const ToeplitzPattern& w, Symbol a, unsigned iterations) {
  // One step replaces each hole by a full copy of w: letters accumulate
  // |w|_a and |w|_other per hole, holes multiply by q.
  Rational count_a = 0;
  Rational count_other = 0;
  Rational holes = 1;
  const auto na = static_cast<long long>(w.count(a));
  const auto nother = static_cast<long long>(w.p() - w.q()) - na;
  for (unsigned t = 0; t < iterations; ++t) {
    count_a += holes * na;
    count_other += holes * nother;
    holes *= static_cast<long long>(w.q());
  }
  const Rational total = count_a + count_other;
  if (total == 0) return Rational(0);
  return count_a / total;
}

double complexity_exponent(const ToeplitzPattern& w) {
  if (w.q() == 0) throw Error(ErrorKind::DegeneratePattern, "pattern has no holes; the word is periodic");
  const std::size_t d = std::gcd(w.p(), w.q());
  const double p = static_cast<double>(w.p() / d);
  const double q = static_cast<double>(w.q() / d);
  return std::log(p) / std::log(p / q);
}

SymbolStream toeplitz_stream(const ToeplitzPattern& w) {
  return SymbolStream::from_index(
      w.alphabet(), [w](std::size_t i) { return toeplitz_symbol(w, i); }, "toeplitz(" + w.str() + ")");
}

}  // namespace tm32::toeplitz
