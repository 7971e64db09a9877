#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "tm32/analysis.hpp"
#include "tm32/error.hpp"
#include "tm32/padic.hpp"
#include "tm32/words.hpp"

using namespace tm32;
using namespace tm32::padic;

namespace {

DyadicRational random_dyadic(std::mt19937_64& rng, unsigned max_level) {
  const unsigned n = static_cast<unsigned>(rng() % (max_level + 1));
  return DyadicRational(rng(), n);
}

FiniteLevelFunction random_function(std::mt19937_64& rng, unsigned level) {
  std::uniform_real_distribution<double> unit(-1, 1);
  std::vector<double> v(std::size_t{1} << level);
  for (auto& x : v) x = unit(rng);
  return FiniteLevelFunction(level, std::move(v));
}

}  // namespace

TEST(Dyadic, Canonical) {
  EXPECT_EQ(DyadicRational(2, 2), DyadicRational(1, 1));
  EXPECT_EQ(DyadicRational(4, 2), DyadicRational(0, 0));
  EXPECT_EQ(DyadicRational(5, 2), DyadicRational(1, 2));
  EXPECT_EQ(DyadicRational(0, 7).level(), 0u);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto r = random_dyadic(rng, 40);
    EXPECT_TRUE(r.level() == 0 ? r.numerator() == 0 : r.numerator() % 2 == 1);
    EXPECT_EQ(DyadicRational(r.numerator(), r.level()), r);
  }
  EXPECT_THROW(DyadicRational(1, 63), Error);
}

TEST(PMul, Examples) {
  EXPECT_EQ(p_mul(PMap::Two, DyadicRational(1, 1)), DyadicRational(0, 0));
  EXPECT_EQ(p_mul(PMap::Three, DyadicRational(1, 2)), DyadicRational(3, 2));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto r = random_dyadic(rng, 20);
    EXPECT_EQ(p_mul(PMap::Three, p_mul(PMap::Q, r)), r);
    EXPECT_EQ(p_mul(PMap::Q, p_mul(PMap::Three, r)), r);
    EXPECT_EQ(p_mul(PMap::TwoQ, r), p_mul(PMap::Two, p_mul(PMap::Q, r)));
    EXPECT_EQ(p_mul(6, r), p_mul(PMap::Two, p_mul(PMap::Three, r)));
  }
}

TEST(PMul, CountingOnEachLevel) {
  for (unsigned n = 0; n <= 12; ++n) {
    std::set<std::pair<std::uint64_t, unsigned>> three, q;
    std::map<std::pair<std::uint64_t, unsigned>, int> two;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      const DyadicRational r(a, n);
      const auto t3 = p_mul(PMap::Three, r);
      const auto tq = p_mul(PMap::Q, r);
      three.insert({t3.numerator(), t3.level()});
      q.insert({tq.numerator(), tq.level()});
      const auto t2 = p_mul(PMap::Two, r);
      ++two[{t2.numerator(), t2.level()}];
      EXPECT_EQ(p_mul(PMap::Two, p_mul(PMap::Two, r)), p_mul(4, r));
    }
    EXPECT_EQ(three.size(), std::size_t{1} << n);
    EXPECT_EQ(q.size(), std::size_t{1} << n);
    for (const auto& [k, c] : two) EXPECT_EQ(c, n == 0 ? 1 : 2);
  }
}

TEST(Inverse, OfThree) {
  for (unsigned b = 1; b <= 16; ++b) EXPECT_EQ(inverse_of_three(b), oracle::inverse_of_three(std::uint64_t{1} << b));
  EXPECT_EQ(inverse_of_three(0), 0u);
  EXPECT_EQ(3 * inverse_of_three(64), 1u);
}

TEST(Character, Values) {
  EXPECT_NEAR(std::abs(character(DyadicRational(0, 0), 12345, 20) - Complex(1)), 0, 1e-15);
  EXPECT_NEAR(std::abs(character(DyadicRational(1, 1), 1, 1) - Complex(-1)), 0, 1e-15);
  EXPECT_THROW(character(DyadicRational(1, 5), 3, 4), Error);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto r = random_dyadic(rng, 30);
    const unsigned lvl = r.level() + static_cast<unsigned>(rng() % 4);
    const std::uint64_t x = rng() % (std::uint64_t{1} << lvl);
    const std::uint64_t y = rng() % (std::uint64_t{1} << lvl);
    const std::uint64_t xy = (x + y) % (std::uint64_t{1} << lvl);
    EXPECT_NEAR(std::abs(character(r, xy, lvl) - character(r, x, lvl) * character(r, y, lvl)), 0, 1e-12);
  }
}

TEST(Multiplier, M) {
  EXPECT_NEAR(std::abs(multiplier_M(DyadicRational(0, 0)) - Complex(1.0 / 3)), 0, 1e-15);
  EXPECT_NEAR(std::abs(multiplier_M(DyadicRational(1, 1)) - Complex(1)), 0, 1e-15);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) EXPECT_LE(std::abs(multiplier_M(random_dyadic(rng, 40))), 1 + 1e-12);
}

TEST(Multiplier, Mk) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto r = random_dyadic(rng, 30);
    EXPECT_NEAR(std::abs(multiplier_Mk(r, 1) - multiplier_M(r)), 0, 1e-15);
    for (unsigned k = 1; k <= 8; ++k) {
      EXPECT_LE(std::abs(multiplier_Mk(r, k)), 1 + 1e-12);
      DyadicRational pk = r;
      for (unsigned l = 0; l < k; ++l) pk = p_mul(PMap::TwoQ, pk);
      EXPECT_NEAR(std::abs(multiplier_Mk(r, k + 1) - multiplier_M(pk) * multiplier_Mk(r, k)), 0, 1e-12);
    }
  }
}

TEST(Multiplier, MkIdentityExhaustiveAtLevelTwelve) {
  for (std::uint64_t a = 0; a < 4096; ++a) {
    const DyadicRational r(a, 12);
    DyadicRational pk = r;
    for (unsigned k = 1; k <= 6; ++k) {
      pk = p_mul(PMap::TwoQ, pk);
      ASSERT_NEAR(std::abs(multiplier_Mk(r, k + 1) - multiplier_M(pk) * multiplier_Mk(r, k)), 0, 1e-12);
    }
  }
}

TEST(Multiplier, MtildeReindexing) {
  EXPECT_NEAR(std::abs(multiplier_Mtilde(2, 0) - Complex(1.0 / 9)), 0, 1e-15);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 500; ++i) {
    const auto r = random_dyadic(rng, 30);
    for (unsigned k = 1; k <= 5; ++k) {
      std::uint64_t pow3 = 1;
      for (unsigned j = 0; j < k; ++j) pow3 *= 3;
      EXPECT_NEAR(std::abs(multiplier_Mtilde(k, r.to_double()) - multiplier_Mk(p_mul(pow3, r), k)), 0, 1e-9);
    }
  }
}

TEST(Coefficients, GVector) {
  // (1 - z^3 + z^6)(1 - z^2 + z^4) / 9, expanded by hand in rationals.
  std::vector<Rational> a(7, 0), b(5, 0), prod(11, 0);
  a[0] = 1, a[3] = -1, a[6] = 1;
  b[0] = 1, b[2] = -1, b[4] = 1;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 5; ++j) prod[i + j] += a[i] * b[j] / 9;
  }
  const auto g = mtilde_coefficients(2);
  EXPECT_EQ(g, prod);
  const std::vector<int> listed{1, 0, -1, -1, 1, 1, 1, -1, -1, 0, 1};
  ASSERT_EQ(g.size(), listed.size());
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(g[i], Rational(listed[i], 9));
}

TEST(Coefficients, ReproduceMtilde) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0, 1);
  for (unsigned k = 1; k <= 5; ++k) {
    const auto g = mtilde_coefficients(k);
    for (int i = 0; i < 50; ++i) {
      const double r = unit(rng);
      Complex sum = 0;
      for (std::size_t l = 0; l < g.size(); ++l) sum += g[l].convert_to<double>() * e(-static_cast<double>(l) * r);
      EXPECT_NEAR(std::abs(sum - multiplier_Mtilde(k, r)), 0, 1e-10);
    }
  }
}

TEST(Zeta, ClosedForm) {
  EXPECT_NEAR(zeta_k_at(2, 0), 28.0 / 81.0, 1e-15);
  for (std::size_t i = 0; i < (std::size_t{1} << 20); i += 37) {
    const double s = static_cast<double>(i) / (1 << 20);
    ASSERT_NEAR(zeta_k_at(2, s), oracle::zeta2_closed(s), 1e-12);
  }
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(-3, 3);
  for (int i = 0; i < 100; ++i) {
    const double s = unit(rng);
    EXPECT_NEAR(zeta_k_at(2, s), zeta_k_at(2, s + 1), 1e-12);
  }
  const auto b = zeta_k_cosine_coefficients(2);
  EXPECT_EQ(b, (std::vector<Rational>{Rational(36, 81), Rational(8, 81), Rational(-16, 81)}));
}

TEST(Zeta, CosineSeriesMatchesDefinition) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> unit(0, 1);
  for (unsigned k = 1; k <= 5; ++k) {
    const auto b = zeta_k_cosine_coefficients(k);
    for (int i = 0; i < 30; ++i) {
      const double s = unit(rng);
      double sum = 0;
      for (std::size_t t = 0; t < b.size(); ++t) sum += b[t].convert_to<double>() * std::cos(2 * std::numbers::pi * t * s);
      EXPECT_NEAR(sum, zeta_k_at(k, s), 1e-10);
    }
  }
}

TEST(Zeta, Supremum) {
  const auto sup = zeta_k_sup(2, std::size_t{1} << 20, 2);
  EXPECT_NEAR(sup.estimate, 35.0 / 54.0, 1e-6);
  EXPECT_LE(sup.estimate, 35.0 / 54.0 + 1e-12);
  EXPECT_GE(sup.certified, 35.0 / 54.0);
  EXPECT_LE(sup.certified, 20.0 / 27.0);
  EXPECT_EQ(sup.triangle_bound, Rational(20, 27));
  ASSERT_TRUE(sup.exact_max.has_value());
  EXPECT_EQ(*sup.exact_max, Rational(35, 54));
  EXPECT_NEAR(std::cos(2 * std::numbers::pi * sup.argmax), 0.125, 1e-3);
  const auto one = zeta_k_sup(1, 4096);
  EXPECT_GT(one.estimate, 0);
  EXPECT_THROW(zeta_k_sup(2, 100), Error);
}

TEST(Zeta, QuadraticVertexByBruteForce) {
  double best = 0;
  for (int i = 0; i <= 2'000'000; ++i) {
    const double c = -1 + i * 1e-6;
    best = std::max(best, 4.0 / 81.0 * (13 + 2 * c - 8 * c * c));
  }
  EXPECT_NEAR(best, 35.0 / 54.0, 1e-12);
}

TEST(Zeta, GridSupConvergesUpward) {
  double prev = 0;
  for (std::size_t g : {std::size_t{1024}, std::size_t{1} << 14, std::size_t{1} << 18}) {
    const auto sup = zeta_k_sup(2, g);
    EXPECT_GE(sup.estimate + 1e-15, prev);
    EXPECT_LE(sup.certified, 20.0 / 27.0);
    EXPECT_GE(sup.certified, 35.0 / 54.0);
    prev = sup.estimate;
  }
}

TEST(Dft, MatchesNaiveAndParseval) {
  std::mt19937_64 rng(10);
  for (unsigned level = 0; level <= 12; ++level) {
    const auto f = random_function(rng, level);
    const auto fast = normalized_dft(f);
    if (level <= 9) {
      const auto slow = oracle::dft(std::vector<Complex>(f.values.begin(), f.values.end()));
      for (std::size_t i = 0; i < fast.size(); ++i) ASSERT_NEAR(std::abs(fast[i] - slow[i]), 0, 1e-12);
    }
    double energy = 0;
    for (const auto& c : fast) energy += std::norm(c);
    EXPECT_NEAR(energy, f.norm2_squared(), 1e-12);
  }
}

TEST(OperatorL, Constants) {
  const auto l = apply_L(FiniteLevelFunction::constant(5, 0.9));
  EXPECT_EQ(l.level, 4u);
  for (double v : l.values) EXPECT_NEAR(v, 0.3, 1e-15);
  EXPECT_THROW(apply_L(FiniteLevelFunction::constant(0, 1)), Error);
}

TEST(OperatorL, ByDefinition) {
  std::mt19937_64 rng(11);
  for (unsigned level = 1; level <= 8; ++level) {
    const auto d = random_function(rng, level);
    const auto l = apply_L(d);
    const std::uint64_t mod = std::uint64_t{1} << level;
    const std::uint64_t q = oracle::inverse_of_three(mod);
    for (std::uint64_t x = 0; x < l.values.size(); ++x) {
      auto at = [&](std::int64_t y) { return d.values[static_cast<std::uint64_t>(((y % static_cast<std::int64_t>(mod)) + static_cast<std::int64_t>(mod)) % static_cast<std::int64_t>(mod))]; };
      const auto base = static_cast<std::int64_t>(2 * q * x);
      const auto qq = static_cast<std::int64_t>(q);
      ASSERT_NEAR(l.values[x], (at(base) - at(base - qq) + at(base - 2 * qq)) / 3, 1e-15);
    }
  }
}

TEST(OperatorL, CountingTablesAreFixed) {
  // delta_n(k) = 2^n (C_n(0,k,3m) - C_n(1,k,3m)) / (3m) and delta_{n+1} from
  // the length-2m prefix: L delta_{n+1} = delta_n exactly.
  const auto t = words::t32();
  const std::size_t m = 30'000;
  for (unsigned n = 0; n <= 5; ++n) {
    const auto coarse = analysis::filtered_counter(t, n, 3 * m);
    const auto fine = analysis::filtered_counter(t, n + 1, 2 * m);
    std::vector<double> dn(std::size_t{1} << n), dn1(std::size_t{2} << n);
    for (std::size_t k = 0; k < dn.size(); ++k) {
      const auto kk = static_cast<std::int64_t>(k);
      dn[k] = std::ldexp(static_cast<double>(coarse.count(0, kk)) - static_cast<double>(coarse.count(1, kk)), n) / (3.0 * m);
    }
    for (std::size_t k = 0; k < dn1.size(); ++k) {
      const auto kk = static_cast<std::int64_t>(k);
      dn1[k] = std::ldexp(static_cast<double>(fine.count(0, kk)) - static_cast<double>(fine.count(1, kk)), n + 1) / (2.0 * m);
    }
    const auto l = apply_L(FiniteLevelFunction(n + 1, dn1));
    for (std::size_t k = 0; k < dn.size(); ++k) EXPECT_NEAR(l.values[k], dn[k], 1e-12) << n << " " << k;
  }
}

TEST(OperatorL, FourierIdentity) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned level = 1 + static_cast<unsigned>(trial % 12);
    EXPECT_LT(fourier_identity_residual(random_function(rng, level)), 1e-9);
  }
}

TEST(Contraction, Demo) {
  const auto zero = apply_L(apply_L(FiniteLevelFunction::constant(6, 0)));
  EXPECT_EQ(zero.norm2_squared(), 0);
  const auto rep = contraction_demo(12, 1000, 42);
  EXPECT_TRUE(rep.within_bound);
  EXPECT_LE(rep.worst_ratio, 20.0 / 27.0 + 1e-12);
  EXPECT_LE(rep.worst_ratio, 35.0 / 54.0 + 1e-6);
  EXPECT_EQ(rep.bound, Rational(20, 27));
  EXPECT_THROW(contraction_demo(3, 1, 1), Error);
  const auto again = contraction_demo(12, 50, 42);
  EXPECT_EQ(again.worst_ratio, contraction_demo(12, 50, 42).worst_ratio);
}

TEST(Contraction, WorstCaseSearchStaysBelowExactSupremum) {
  // Characters concentrated near the maximizing frequency push the ratio up;
  // the finite-level ratio can never exceed sup zeta_2.
  std::mt19937_64 rng(13);
  double worst = 0;
  const unsigned level = 10;
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t a = rng() % (std::uint64_t{1} << level);
    std::vector<double> v(std::size_t{1} << level);
    for (std::size_t x = 0; x < v.size(); ++x) v[x] = std::cos(2 * std::numbers::pi * static_cast<double>((a * x) % v.size()) / static_cast<double>(v.size()));
    const FiniteLevelFunction d(level, std::move(v));
    if (d.norm2_squared() == 0) continue;
    worst = std::max(worst, apply_L(apply_L(d)).norm2_squared() / d.norm2_squared());
  }
  EXPECT_LE(worst, 35.0 / 54.0 + 1e-6);
}
