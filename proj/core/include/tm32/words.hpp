#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tm32/stream.hpp"
#include "tm32/substitution.hpp"

// The named words and the word-level operators connecting them.
namespace tm32::words {

// f_0: 0->00, 1->11 and f_1: 0->1, 1->0.
MorphismFamily alternating_tm_family();
// 00->001, 01->000, 10->111, 11->110.
BlockSubstitution tau();
// f_0: 0->01, 1->00 and f_1: 0->1, 1->0; generates the difference word.
MorphismFamily difference_family();
// k_0: 1->2, 2->22 and k_1: 1->1, 2->11.
MorphismFamily kolakoski_family();
BlockSubstitution kappa();
// 0->01, 1->10.
Morphism thue_morse_morphism();
// 0->010, 1->101.
Morphism phi();
// 00,01 -> 010 and 10,11 -> 101.
BlockSubstitution tprime_substitution();
// The eight-rule 2-block substitution fixing the sliding block code of t32.
BlockSubstitution slide2_substitution();
// ab -> a (a+2 mod m) (b+1 mod m).
BlockSubstitution t32_mod_substitution(unsigned m);

// Sum-of-digits parity: 0,2 loop and 1 toggles; output = state.
Dfao t32_dfao();
// Parity of the length of the {1,2}-suffix after the last 0.
Dfao delta_dfao();

enum class T32Via { Dfao, Block, Relations };
enum class TPrimeVia { Block, Phi };

SymbolStream t32(T32Via via = T32Via::Block);
SymbolStream t32bar();
SymbolStream t_prime(TPrimeVia via = TPrimeVia::Block);
SymbolStream kolakoski();
SymbolStream thue_morse_base2();
// Seeded with 0; for m = 2 this is t32.
SymbolStream t32_mod(unsigned m);

// y[n] = x[n] + x[n+1] mod 2.
SymbolStream delta(const SymbolStream& x);
// x[0] = first, x[n+1] = x[n] + y[n] mod 2.
SymbolStream integrate(const SymbolStream& y, Symbol first);
Word complement(std::span<const Symbol> w);
SymbolStream complement(const SymbolStream& x);
Word reverse(std::span<const Symbol> w);
// c[n] = 2 x[n] + x[n+1].
SymbolStream slide2(const SymbolStream& x);

// Run lengths of maximal blocks of equal symbols.
Word run_length_encode(std::span<const Symbol> w);

// Catalog identifiers; '-' and '_' are interchangeable.
std::vector<std::string> catalog_names();
// `m` is only used by t32_mod. Throws ErrorKind::UnknownWord.
SymbolStream named_word(std::string_view id, unsigned m = 4);

}  // namespace tm32::words
