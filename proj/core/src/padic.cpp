#include "tm32/padic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "tm32/error.hpp"

namespace tm32::padic {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mask(unsigned n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t a, unsigned n) {
  return static_cast<std::uint64_t>(static_cast<u128>(x) * a) & mask(n);
}

double turns(std::uint64_t a, unsigned n) { return std::ldexp(static_cast<double>(a), -static_cast<int>(n)); }

Rational pow_int(long long base, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

constexpr unsigned kMaxCoefficientK = 12;

void require_k(unsigned k) {
  if (k == 0) throw Error(ErrorKind::InvalidParameter, "k must be positive");
}

}  // namespace

DyadicRational::DyadicRational(std::uint64_t a, unsigned n) {
  if (n > kMaxLevel) throw Error(ErrorKind::Level, "dyadic level " + std::to_string(n) + " exceeds 62");
  a &= mask(n);
  while (n > 0 && a % 2 == 0) {
    a /= 2;
    --n;
  }
  if (a == 0) n = 0;
  a_ = a;
  n_ = n;
}

double DyadicRational::to_double() const noexcept { return turns(a_, n_); }

std::string DyadicRational::str() const {
  if (n_ == 0) return "0";
  return std::to_string(a_) + "/2^" + std::to_string(n_);
}

Complex e(double t) {
  const double f = t - std::round(t);
  const double angle = 2 * std::numbers::pi * f;
  return {std::cos(angle), std::sin(angle)};
}

std::uint64_t inverse_of_three(unsigned bits) {
  if (bits > 64) throw Error(ErrorKind::InvalidParameter, "inverse_of_three: at most 64 bits");
  std::uint64_t q = 3;  // correct mod 8; each Newton step doubles the bits
  for (int i = 0; i < 5; ++i) q *= 2 - 3 * q;
  return q & mask(bits);
}

DyadicRational p_mul(std::uint64_t x, const DyadicRational& r) {
  return DyadicRational(mul_mod(x, r.numerator(), r.level()), r.level());
}

DyadicRational p_mul(PMap x, const DyadicRational& r) {
  switch (x) {
    case PMap::Two:
      return p_mul(2, r);
    case PMap::Three:
      return p_mul(3, r);
    case PMap::Q:
      return p_mul(inverse_of_three(r.level()), r);
    case PMap::TwoQ:
      return p_mul(2, p_mul(PMap::Q, r));
  }
  throw Error(ErrorKind::InvalidParameter, "unknown P map");
}

Complex character(const DyadicRational& r, std::uint64_t x, unsigned x_level) {
  if (x_level < r.level()) {
    throw Error(ErrorKind::Level, "argument given mod 2^" + std::to_string(x_level) + " but character has level " +
                                      std::to_string(r.level()));
  }
  return e(turns(mul_mod(x, r.numerator(), r.level()), r.level()));
}

Complex multiplier_M(const DyadicRational& r) {
  const double s = p_mul(PMap::Q, r).to_double();
  return (Complex(1) - e(-s) + e(-2 * s)) / 3.0;
}

Complex multiplier_Mk(const DyadicRational& r, unsigned k) {
  require_k(k);
  Complex out = 1;
  DyadicRational u = r;
  for (unsigned l = 0; l < k; ++l) {
    out *= multiplier_M(u);
    u = p_mul(PMap::TwoQ, u);
  }
  return out;
}

Complex multiplier_Mtilde(unsigned k, double r) {
  require_k(k);
  Complex out = 1;
  for (unsigned l = 0; l < k; ++l) {
    const double a = std::ldexp(std::pow(3.0, static_cast<double>(k - l - 1)), static_cast<int>(l));
    // Reduce before doubling so the argument stays in [0, 1).
    const double t = a * r - std::floor(a * r);
    out *= Complex(1) - e(-t) + e(-2 * t);
  }
  return out / std::pow(3.0, static_cast<double>(k));
}

namespace {

// Integer coefficients of prod_l (1 - z^a + z^{2a}), a = 2^l 3^{k-l-1}.
std::vector<std::int64_t> mtilde_numerators(unsigned k) {
  require_k(k);
  if (k > kMaxCoefficientK) throw Error(ErrorKind::InvalidParameter, "coefficient expansion limited to k <= 12");
  std::vector<std::int64_t> poly{1};
  for (unsigned l = 0; l < k; ++l) {
    std::size_t a = std::size_t{1} << l;
    for (unsigned i = 0; i + l + 1 < k; ++i) a *= 3;
    std::vector<std::int64_t> next(poly.size() + 2 * a, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + a] -= poly[i];
      next[i + 2 * a] += poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

std::vector<Rational> mtilde_coefficients(unsigned k) {
  const auto poly = mtilde_numerators(k);
  const Rational scale = pow_int(3, k);
  std::vector<Rational> g;
  g.reserve(poly.size());
  for (auto c : poly) g.push_back(Rational(c) / scale);
  return g;
}

std::vector<Rational> zeta_k_cosine_coefficients(unsigned k) {
  // |M~(x)|^2 = sum_d A_d e(-d x) with A the autocorrelation of g; summing
  // over the 2^k shifts keeps only the lags divisible by 2^k.
  const auto poly = mtilde_numerators(k);
  const std::size_t step = std::size_t{1} << k;
  const Rational scale = pow_int(9, k);
  const Rational width = pow_int(2, k);
  std::vector<Rational> b;
  for (std::size_t lag = 0; lag < poly.size(); lag += step) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + lag < poly.size(); ++i) acc += poly[i] * poly[i + lag];
    b.push_back(width * (lag == 0 ? 1 : 2) * Rational(acc) / scale);
  }
  while (b.size() > 1 && b.back() == 0) b.pop_back();
  return b;
}

Rational zeta_k_triangle_bound(unsigned k) {
  Rational sum = 0;
  for (const auto& c : zeta_k_cosine_coefficients(k)) sum += abs(c);
  return sum;
}

std::optional<Rational> zeta_k_quadratic_max(unsigned k) {
  auto b = zeta_k_cosine_coefficients(k);
  if (b.size() > 3) return std::nullopt;
  b.resize(3, Rational(0));
  // b0 + b1 c + b2 (2c^2 - 1) for c = cos(2 pi s) in [-1, 1].
  auto f = [&](const Rational& c) -> Rational { return b[0] + b[1] * c + b[2] * (2 * c * c - 1); };
  Rational best = std::max(f(Rational(1)), f(Rational(-1)));
  if (b[2] != 0) {
    const Rational vertex = -b[1] / (4 * b[2]);
    if (vertex >= -1 && vertex <= 1) best = std::max(best, f(vertex));
  }
  return best;
}

double zeta_k_at(unsigned k, double s) {
  require_k(k);
  const double width = std::ldexp(1.0, static_cast<int>(k));
  double sum = 0;
  for (std::size_t j = 0; j < (std::size_t{1} << k); ++j) sum += std::norm(multiplier_Mtilde(k, (s + static_cast<double>(j)) / width));
  return sum;
}

ZetaSup zeta_k_sup(unsigned k, std::size_t grid, unsigned threads) {
  require_k(k);
  if (grid < 1024) throw Error(ErrorKind::InvalidParameter, "grid must have at least 1024 points");
  threads = std::max(1u, threads);

  struct Best {
    double value = -1;
    std::size_t index = 0;
  };
  std::vector<Best> best(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        const std::size_t lo = grid * t / threads;
        const std::size_t hi = grid * (t + 1) / threads;
        for (std::size_t i = lo; i < hi; ++i) {
          const double v = zeta_k_at(k, static_cast<double>(i) / static_cast<double>(grid));
          if (v > best[t].value) best[t] = {v, i};
        }
      });
    }
  }
  Best top;
  for (const auto& b : best) {
    if (b.value > top.value) top = b;
  }

  ZetaSup out;
  out.k = k;
  out.grid = grid;
  out.estimate = top.value;
  out.argmax = static_cast<double>(top.index) / static_cast<double>(grid);
  const auto b = zeta_k_cosine_coefficients(k);
  for (std::size_t t = 1; t < b.size(); ++t) {
    out.lipschitz += std::abs(b[t].convert_to<double>()) * 2 * std::numbers::pi * static_cast<double>(t);
  }
  // Every point lies within h/2 of a grid point; 1e-12 absorbs rounding.
  out.certified = out.estimate + out.lipschitz * 0.5 / static_cast<double>(grid) + 1e-12;
  out.triangle_bound = zeta_k_triangle_bound(k);
  out.exact_max = zeta_k_quadratic_max(k);
  return out;
}

FiniteLevelFunction::FiniteLevelFunction(unsigned n, std::vector<double> v) : level(n), values(std::move(v)) {
  if (n > 30 || values.size() != (std::size_t{1} << n)) {
    throw Error(ErrorKind::Level, "function at level " + std::to_string(n) + " needs 2^" + std::to_string(n) + " values");
  }
}

FiniteLevelFunction FiniteLevelFunction::constant(unsigned n, double value) {
  return FiniteLevelFunction(n, std::vector<double>(std::size_t{1} << n, value));
}

double FiniteLevelFunction::norm2_squared() const {
  double sum = 0;
  for (double v : values) sum += v * v;
  return sum / static_cast<double>(values.size());
}

std::vector<Complex> normalized_dft(const std::vector<Complex>& f) {
  const std::size_t size = f.size();
  if (size == 0 || (size & (size - 1)) != 0) throw Error(ErrorKind::Level, "DFT length must be a power of two");
  std::vector<Complex> a = f;
  for (std::size_t i = 1, j = 0; i < size; ++i) {
    std::size_t bit = size >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= size; len <<= 1) {
    const std::size_t half = len / 2;
    for (std::size_t m = 0; m < half; ++m) {
      const Complex w = e(-static_cast<double>(m) / static_cast<double>(len));
      for (std::size_t i = m; i < size; i += len) {
        const Complex u = a[i];
        const Complex v = a[i + half] * w;
        a[i] = u + v;
        a[i + half] = u - v;
      }
    }
  }
  const double scale = 1.0 / static_cast<double>(size);
  for (auto& x : a) x *= scale;
  return a;
}

std::vector<Complex> normalized_dft(const FiniteLevelFunction& f) {
  return normalized_dft(std::vector<Complex>(f.values.begin(), f.values.end()));
}

FiniteLevelFunction apply_L(const FiniteLevelFunction& delta) {
  if (delta.level == 0) throw Error(ErrorKind::Level, "the averaging operator needs level >= 1");
  const unsigned n = delta.level - 1;
  const std::uint64_t m = mask(delta.level);
  const std::uint64_t q = inverse_of_three(delta.level);
  std::vector<double> out(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < out.size(); ++x) {
    const std::uint64_t y = (2 * q * x) & m;
    out[x] = (delta.values[y] - delta.values[(y - q) & m] + delta.values[(y - 2 * q) & m]) / 3.0;
  }
  return FiniteLevelFunction(n, std::move(out));
}

double fourier_identity_residual(const FiniteLevelFunction& delta) {
  const auto lhs = normalized_dft(apply_L(delta));
  const auto hat = normalized_dft(delta);
  const unsigned n = delta.level - 1;
  const std::uint64_t half = std::uint64_t{1} << n;
  double worst = 0;
  for (std::uint64_t a = 0; a < half; ++a) {
    // P_2q(b / 2^{n+1}) = a / 2^n  iff  b = 3a mod 2^n.
    const std::uint64_t b0 = (3 * a) & (half - 1);
    Complex rhs = 0;
    for (std::uint64_t b : {b0, b0 + half}) rhs += multiplier_M(DyadicRational(b, delta.level)) * hat[b];
    worst = std::max(worst, std::abs(lhs[a] - rhs));
  }
  return worst;
}

ContractionReport contraction_demo(unsigned level, std::size_t trials, std::uint64_t seed) {
  if (level < 4 || level > 24) throw Error(ErrorKind::Level, "contraction demo needs 4 <= level <= 24");
  ContractionReport report;
  report.level = level;
  report.trials = trials;
  report.bound = zeta_k_triangle_bound(2);
  const double bound = report.bound.convert_to<double>();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<double> v(std::size_t{1} << level);
    for (auto& x : v) x = unit(rng);
    const FiniteLevelFunction d(level, std::move(v));
    const double denom = d.norm2_squared();
    const double ratio = denom == 0 ? 0 : apply_L(apply_L(d)).norm2_squared() / denom;
    report.worst_ratio = std::max(report.worst_ratio, ratio);
  }
  report.within_bound = report.worst_ratio <= bound + 1e-12;
  return report;
}

}  // namespace tm32::padic
