#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "tm32/error.hpp"
#include "tm32/substitution.hpp"
#include "tm32/words.hpp"

using namespace tm32;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Io;
}

}  // namespace

TEST(Morphism, RejectsPartialAndForeignImages) {
  EXPECT_EQ(kind_of([] { Morphism(Alphabet::binary(), {{0, parse_word("01")}}); }), ErrorKind::MissingRule);
  EXPECT_EQ(kind_of([] { Morphism(Alphabet::binary(), {{0, parse_word("02")}, {1, parse_word("1")}}); }),
            ErrorKind::UnsupportedAlphabet);
}

TEST(AlternatingFixedPoint, ThueMorse) {
  const auto s = alternating_fixed_point(MorphismFamily({words::thue_morse_morphism()}), 0);
  EXPECT_EQ(to_text(s.prefix(16)), "0110100110010110");
  EXPECT_EQ(to_text(s.prefix(4096)), oracle::thue_morse(4096));
}

TEST(AlternatingFixedPoint, Kolakoski) {
  EXPECT_EQ(to_text(alternating_fixed_point(words::kolakoski_family(), 2).prefix(6)), "221121");
}

TEST(AlternatingFixedPoint, AlternateTm) {
  const auto s = alternating_fixed_point(words::alternating_tm_family(), 0);
  EXPECT_EQ(to_text(s.prefix(17)), "00111011111011011");
  EXPECT_EQ(to_text(s.prefix(100000)), oracle::t32(100000));
}

TEST(AlternatingFixedPoint, StallAndInconsistency) {
  // Identity never grows past the seed.
  const MorphismFamily id({Morphism(Alphabet::binary(), {{0, parse_word("0")}, {1, parse_word("1")}})});
  const auto s = alternating_fixed_point(id, 0);
  EXPECT_EQ(kind_of([&] { s.at(5); }), ErrorKind::GenerationStalled);
  // 0 -> 10 cannot start with 0.
  const MorphismFamily bad({Morphism(Alphabet::binary(), {{0, parse_word("10")}, {1, parse_word("11")}})});
  EXPECT_EQ(kind_of([&] { alternating_fixed_point(bad, 0).at(3); }), ErrorKind::Inconsistent);
}

TEST(BlockFixedPoint, Tau) {
  const auto s = block_fixed_point(words::tau(), 0);
  EXPECT_EQ(to_text(s.prefix(30)), "001110111110110111110000110110");
  const auto c = block_fixed_point(words::tau(), 1);
  std::string expected = to_text(s.prefix(5000));
  for (auto& ch : expected) ch = ch == '0' ? '1' : '0';
  EXPECT_EQ(to_text(c.prefix(5000)), expected);
}

TEST(BlockFixedPoint, Kappa) {
  EXPECT_EQ(to_text(block_fixed_point(words::kappa(), 2).prefix(13)), "2211212212211");
}

TEST(BlockFixedPoint, MissingRule) {
  const BlockSubstitution partial(Alphabet::binary(), 2, {{parse_word("00"), parse_word("011")}});
  EXPECT_FALSE(partial.total());
  EXPECT_EQ(kind_of([&] { block_fixed_point(partial, 0).at(10); }), ErrorKind::MissingRule);
}

TEST(ToBlockSubstitution, Examples) {
  const auto kappa = to_block_substitution(words::kolakoski_family());
  EXPECT_EQ(to_text(kappa.image(parse_word("22"))), "2211");
  EXPECT_EQ(kappa.rules(), words::kappa().rules());
  const auto tau = to_block_substitution(words::alternating_tm_family());
  EXPECT_EQ(to_text(tau.image(parse_word("00"))), "001");
  EXPECT_EQ(tau.rules(), words::tau().rules());
  const MorphismFamily id({Morphism(Alphabet::binary(), {{0, parse_word("0")}, {1, parse_word("1")}})});
  const auto b = to_block_substitution(id);
  EXPECT_EQ(b.block_length(), 1u);
  EXPECT_EQ(to_text(b.apply(parse_word("0110"))), "0110");
}

TEST(Agreement, AlternatingVersusBlock) {
  for (const auto& [fam, seed] : {std::pair{words::kolakoski_family(), Symbol{2}},
                                  std::pair{words::alternating_tm_family(), Symbol{0}},
                                  std::pair{words::difference_family(), Symbol{0}}}) {
    const Word a = alternating_fixed_point(fam, seed).prefix(1'000'000);
    const Word b = block_fixed_point(to_block_substitution(fam), seed).prefix(1'000'000);
    EXPECT_EQ(a, b);
  }
}

TEST(PrefixStability, ApplyingTheSubstitutionReproducesThePrefix) {
  for (const auto& [beta, seed] : {std::pair{words::tau(), Symbol{0}}, std::pair{words::kappa(), Symbol{2}},
                                   std::pair{words::tprime_substitution(), Symbol{0}}}) {
    const Word w = block_fixed_point(beta, seed).prefix(30000);
    const Word img = beta.apply(w);
    const std::size_t common = std::min(img.size(), w.size());
    ASSERT_GT(common, 0u);
    EXPECT_TRUE(std::equal(img.begin(), img.begin() + static_cast<std::ptrdiff_t>(common), w.begin()));
  }
}

TEST(Kolakoski, RunLengthSelfEncoding) {
  const Word k = words::kolakoski().prefix(100'000);
  const Word rl = words::run_length_encode(k);
  ASSERT_GE(rl.size(), 40'000u);
  EXPECT_TRUE(std::equal(rl.begin(), rl.end(), k.begin()));
}

TEST(Dfao, Examples) {
  const auto a = words::t32_dfao();
  EXPECT_EQ(dfao_eval(a, numeration::DigitString::parse("2101")), 0);
  EXPECT_EQ(dfao_eval(a, numeration::DigitString{}), 0);
  EXPECT_EQ(kind_of([&] { dfao_eval(a, numeration::DigitString::parse("23")); }), ErrorKind::InvalidDigit);
}

TEST(Dfao, DifferenceAutomatonMatchesDigitSums) {
  const auto a = words::delta_dfao();
  for (std::uint64_t n = 0; n < 10'000; ++n) {
    const auto par = [](std::uint64_t m) { return numeration::sum_of_digits(m) % 2; };
    ASSERT_EQ(dfao_eval(a, numeration::expand(n)), (par(n) + par(n + 1)) % 2) << n;
  }
}

TEST(ParseBlockSubstitution, TextFormat) {
  const auto b = parse_block_substitution("# tau\n00 -> 001\n01 -> 000\n\n10 -> 111  # comment\n11 -> 110\n");
  EXPECT_EQ(b.rules(), words::tau().rules());
  EXPECT_EQ(kind_of([] { parse_block_substitution("00 -> 1\n0 -> 1\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_block_substitution("00 -> 1\n00 -> 0\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_block_substitution("00 1\n"); }), ErrorKind::Parse);
}

TEST(BlockSubstitution, ApplyDropsTrailingBlock) {
  EXPECT_EQ(to_text(words::tau().apply(parse_word("00110"))), "001110");
}
