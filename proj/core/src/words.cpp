#include "tm32/words.hpp"

#include <algorithm>

#include "tm32/error.hpp"
#include "tm32/numeration.hpp"

namespace tm32::words {

namespace {

Word w(std::string_view text) { return parse_word(text); }

void require_binary(const Alphabet& a, std::string_view op) {
  if (!a.is_binary()) throw Error(ErrorKind::UnsupportedAlphabet, std::string(op) + " needs a binary alphabet");
}

}  // namespace

MorphismFamily alternating_tm_family() {
  return MorphismFamily({Morphism(Alphabet::binary(), {{0, w("00")}, {1, w("11")}}),
                         Morphism(Alphabet::binary(), {{0, w("1")}, {1, w("0")}})});
}

BlockSubstitution tau() {
  return BlockSubstitution(Alphabet::binary(), 2,
                           {{w("00"), w("001")}, {w("01"), w("000")}, {w("10"), w("111")}, {w("11"), w("110")}});
}

MorphismFamily difference_family() {
  return MorphismFamily({Morphism(Alphabet::binary(), {{0, w("01")}, {1, w("00")}}),
                         Morphism(Alphabet::binary(), {{0, w("1")}, {1, w("0")}})});
}

MorphismFamily kolakoski_family() {
  const Alphabet a{1, 2};
  return MorphismFamily({Morphism(a, {{1, w("2")}, {2, w("22")}}), Morphism(a, {{1, w("1")}, {2, w("11")}})});
}

BlockSubstitution kappa() {
  return BlockSubstitution(Alphabet{1, 2}, 2,
                           {{w("11"), w("21")}, {w("12"), w("211")}, {w("21"), w("221")}, {w("22"), w("2211")}});
}

Morphism thue_morse_morphism() { return Morphism(Alphabet::binary(), {{0, w("01")}, {1, w("10")}}); }

Morphism phi() { return Morphism(Alphabet::binary(), {{0, w("010")}, {1, w("101")}}); }

BlockSubstitution tprime_substitution() {
  return BlockSubstitution(Alphabet::binary(), 2,
                           {{w("00"), w("010")}, {w("01"), w("010")}, {w("10"), w("101")}, {w("11"), w("101")}});
}

BlockSubstitution slide2_substitution() {
  return BlockSubstitution(Alphabet::range(4), 2,
                           {{w("00"), w("012")},
                            {w("01"), w("013")},
                            {w("12"), w("000")},
                            {w("13"), w("001")},
                            {w("20"), w("332")},
                            {w("21"), w("333")},
                            {w("32"), w("320")},
                            {w("33"), w("321")}});
}

BlockSubstitution t32_mod_substitution(unsigned m) {
  if (m < 2 || m > kMaxSymbols) {
    throw Error(ErrorKind::InvalidParameter, "t32_mod needs 2 <= m <= 36, got " + std::to_string(m));
  }
  std::map<Word, Word> rules;
  for (unsigned a = 0; a < m; ++a) {
    for (unsigned b = 0; b < m; ++b) {
      rules.emplace(Word{static_cast<Symbol>(a), static_cast<Symbol>(b)},
                    Word{static_cast<Symbol>(a), static_cast<Symbol>((a + 2) % m), static_cast<Symbol>((b + 1) % m)});
    }
  }
  return BlockSubstitution(Alphabet::range(static_cast<Symbol>(m)), 2, std::move(rules));
}

Dfao t32_dfao() {
  // state x digit -> state
  return Dfao(2, 3, {0, 1, 0, /**/ 1, 0, 1}, {0, 1});
}

Dfao delta_dfao() { return Dfao(2, 3, {0, 1, 1, /**/ 0, 0, 0}, {0, 1}); }

SymbolStream t32(T32Via via) {
  switch (via) {
    case T32Via::Block: {
      SymbolStream s = block_fixed_point(tau(), 0);
      return SymbolStream(Alphabet::binary(), [s](std::vector<Symbol>& buf, std::size_t want) {
        buf = s.prefix(want);
      }, "t32");
    }
    case T32Via::Dfao:
      return SymbolStream::from_index(
          Alphabet::binary(),
          [dfao = t32_dfao()](std::size_t n) { return dfao_eval(dfao, numeration::expand(n)); }, "t32");
    case T32Via::Relations:
      // t[3n] = t[3n+1] = t[2n], t[3n+2] = 1 - t[2n+1]; every index refers back.
      return SymbolStream(Alphabet::binary(), [](std::vector<Symbol>& buf, std::size_t want) {
        buf.reserve(want);
        if (buf.empty()) buf.push_back(0);
        for (std::size_t i = buf.size(); i < want; ++i) {
          const std::size_t n = i / 3;
          buf.push_back(i % 3 == 2 ? static_cast<Symbol>(1 - buf[2 * n + 1]) : buf[2 * n]);
        }
      }, "t32");
  }
  throw Error(ErrorKind::InvalidParameter, "unknown t32 backend");
}

SymbolStream t32bar() { return block_fixed_point(tau(), 1); }

SymbolStream t_prime(TPrimeVia via) {
  if (via == TPrimeVia::Block) return block_fixed_point(tprime_substitution(), 0);
  const SymbolStream base = t32(T32Via::Relations);
  return SymbolStream(Alphabet::binary(), [base, f = phi()](std::vector<Symbol>& buf, std::size_t want) {
    // phi is 3-uniform: position i comes from base[i / 3].
    const std::size_t from = buf.size() / 3;
    buf.resize(from * 3);
    const Word src = base.prefix((want + 2) / 3);
    for (std::size_t j = from; j < src.size(); ++j) {
      const Word& img = f.image(src[j]);
      buf.insert(buf.end(), img.begin(), img.end());
    }
  }, "tprime");
}

SymbolStream kolakoski() { return block_fixed_point(kappa(), 2); }

SymbolStream thue_morse_base2() {
  return alternating_fixed_point(MorphismFamily({thue_morse_morphism()}), 0);
}

SymbolStream t32_mod(unsigned m) { return block_fixed_point(t32_mod_substitution(m), 0); }

SymbolStream delta(const SymbolStream& x) {
  require_binary(x.alphabet(), "delta");
  return SymbolStream(Alphabet::binary(), [x](std::vector<Symbol>& buf, std::size_t want) {
    const Word src = x.prefix(want + 1);
    buf.reserve(want);
    for (std::size_t n = buf.size(); n < want; ++n) buf.push_back(static_cast<Symbol>((src[n] + src[n + 1]) % 2));
  }, "delta(" + x.name() + ")");
}

SymbolStream integrate(const SymbolStream& y, Symbol first) {
  require_binary(y.alphabet(), "integrate");
  if (first > 1) throw Error(ErrorKind::InvalidParameter, "integration constant must be 0 or 1");
  return SymbolStream(Alphabet::binary(), [y, first](std::vector<Symbol>& buf, std::size_t want) {
    const Word src = y.prefix(want);
    buf.reserve(want);
    if (buf.empty()) buf.push_back(first);
    for (std::size_t n = buf.size(); n < want; ++n) buf.push_back(static_cast<Symbol>((buf[n - 1] + src[n - 1]) % 2));
  }, "integrate(" + y.name() + ")");
}

Word complement(std::span<const Symbol> w) {
  Word out;
  out.reserve(w.size());
  for (Symbol s : w) {
    if (s > 1) throw Error(ErrorKind::UnsupportedAlphabet, "complement needs a binary word");
    out.push_back(static_cast<Symbol>(1 - s));
  }
  return out;
}

SymbolStream complement(const SymbolStream& x) {
  require_binary(x.alphabet(), "complement");
  return SymbolStream(Alphabet::binary(), [x](std::vector<Symbol>& buf, std::size_t want) {
    const Word src = x.prefix(want);
    for (std::size_t n = buf.size(); n < want; ++n) buf.push_back(static_cast<Symbol>(1 - src[n]));
  }, "complement(" + x.name() + ")");
}

Word reverse(std::span<const Symbol> w) { return Word(w.rbegin(), w.rend()); }

SymbolStream slide2(const SymbolStream& x) {
  require_binary(x.alphabet(), "slide2");
  return SymbolStream(Alphabet::range(4), [x](std::vector<Symbol>& buf, std::size_t want) {
    const Word src = x.prefix(want + 1);
    for (std::size_t n = buf.size(); n < want; ++n) buf.push_back(static_cast<Symbol>(2 * src[n] + src[n + 1]));
  }, "slide2(" + x.name() + ")");
}

Word run_length_encode(std::span<const Symbol> w) {
  Word runs;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (j - i >= kMaxSymbols) throw Error(ErrorKind::UnsupportedAlphabet, "run longer than 35");
    runs.push_back(static_cast<Symbol>(j - i));
    i = j;
  }
  return runs;
}

std::vector<std::string> catalog_names() {
  return {"t32",       "t32bar",           "tprime", "delta_t32", "kolakoski", "thue_morse_base2",
          "period_doubling_analogue", "slide2_t32", "t32_mod"};
}

SymbolStream named_word(std::string_view id, unsigned m) {
  std::string key(id);
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "t32") return t32();
  if (key == "t32bar") return t32bar();
  if (key == "tprime") return t_prime();
  // The period-doubling analogue is, by definition, the difference word.
  if (key == "delta_t32" || key == "period_doubling_analogue") return delta(t32());
  if (key == "kolakoski") return kolakoski();
  if (key == "thue_morse_base2") return thue_morse_base2();
  if (key == "slide2_t32") return slide2(t32());
  if (key == "t32_mod") return t32_mod(m);
  throw Error(ErrorKind::UnknownWord, "unknown word identifier '" + std::string(id) + "'");
}

}  // namespace tm32::words
