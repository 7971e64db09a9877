#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tm32/symbol.hpp"

namespace tm32::padic {

using Complex = std::complex<double>;

// a / 2^n mod 1 in canonical form: 0 <= a < 2^n and a odd, or 0/2^0.
class DyadicRational {
 public:
  static constexpr unsigned kMaxLevel = 62;

  DyadicRational() = default;
  // Reduces a mod 2^n and strips common factors of 2. Throws
  // ErrorKind::Level for n > kMaxLevel.
  DyadicRational(std::uint64_t a, unsigned n);

  std::uint64_t numerator() const noexcept { return a_; }
  unsigned level() const noexcept { return n_; }
  double to_double() const noexcept;
  std::string str() const;

  bool operator==(const DyadicRational&) const = default;

 private:
  std::uint64_t a_ = 0;
  unsigned n_ = 0;
};

// e(t) = exp(2 pi i t).
Complex e(double t);

// Inverse of 3 modulo 2^bits (0 for bits = 0). bits <= 64.
std::uint64_t inverse_of_three(unsigned bits);

enum class PMap { Two, Three, Q, TwoQ };

// P_x(a/2^n) = (x a mod 2^n)/2^n; for Q the multiplier is the inverse of 3
// modulo 2^n at the level of r, and TwoQ is P_2 after P_q.
DyadicRational p_mul(PMap x, const DyadicRational& r);
DyadicRational p_mul(std::uint64_t x, const DyadicRational& r);

// chi_r(x) = e(x a / 2^n) with x given modulo 2^{x_level}. Throws
// ErrorKind::Level if x_level < level of r.
Complex character(const DyadicRational& r, std::uint64_t x, unsigned x_level);

// (1/3)(1 - e(-s) + e(-2s)), s = P_q(r).
Complex multiplier_M(const DyadicRational& r);
// Product of M over r, P_2q(r), ..., P_2q^{k-1}(r).
Complex multiplier_Mk(const DyadicRational& r, unsigned k);
// 3^{-k} prod_{l<k} (1 - e(-2^l 3^{k-l-1} r) + e(-2^{l+1} 3^{k-l-1} r)).
Complex multiplier_Mtilde(unsigned k, double r);

// Exact g with M~^{(k)}(r) = sum_l g_l e(-l r).
std::vector<Rational> mtilde_coefficients(unsigned k);
// Exact b with zeta_k(s) = sum_t b_t cos(2 pi t s).
std::vector<Rational> zeta_k_cosine_coefficients(unsigned k);
// sum_t |b_t|, an upper bound for zeta_k.
Rational zeta_k_triangle_bound(unsigned k);
// Exact maximum when zeta_k is a quadratic in cos(2 pi s); nullopt otherwise.
std::optional<Rational> zeta_k_quadratic_max(unsigned k);

// sum_{j < 2^k} |M~^{(k)}((s + j) / 2^k)|^2.
double zeta_k_at(unsigned k, double s);

struct ZetaSup {
  unsigned k = 0;
  std::size_t grid = 0;
  double estimate = 0;   // grid maximum
  double argmax = 0;
  double lipschitz = 0;  // bound on |zeta_k'| from the cosine coefficients
  double certified = 0;  // estimate + lipschitz * h / 2 + rounding slack
  Rational triangle_bound;
  std::optional<Rational> exact_max;
};

// Grid over s in [0, 1) (zeta_k is 1-periodic). Throws
// ErrorKind::InvalidParameter for grid < 1024.
ZetaSup zeta_k_sup(unsigned k, std::size_t grid, unsigned threads = 1);

// A real function on Z/2^n.
struct FiniteLevelFunction {
  unsigned level = 0;
  std::vector<double> values;  // size 2^level

  FiniteLevelFunction() = default;
  FiniteLevelFunction(unsigned n, std::vector<double> v);
  static FiniteLevelFunction constant(unsigned n, double value);
  // Mean of |f|^2 over Z/2^n.
  double norm2_squared() const;
};

// F[a] = 2^{-n} sum_x f(x) e(-x a / 2^n), indexed by numerator a at level n.
std::vector<Complex> normalized_dft(const std::vector<Complex>& f);
std::vector<Complex> normalized_dft(const FiniteLevelFunction& f);

// (L d)(x) = (1/3)[d(2qx) - d(2qx - q) + d(2qx - 2q)] mod 2^{n+1}, q the
// inverse of 3 mod 2^{n+1}. Throws ErrorKind::Level at level 0.
FiniteLevelFunction apply_L(const FiniteLevelFunction& delta);

// max_s |DFT(L d)(s) - sum_{P_2q(r) = s} M(r) DFT(d)(r)|.
double fourier_identity_residual(const FiniteLevelFunction& delta);

struct ContractionReport {
  unsigned level = 0;
  std::size_t trials = 0;
  double worst_ratio = 0;  // max ||L^2 d||^2 / ||d||^2
  Rational bound;          // 20/27
  bool within_bound = true;
};

// Random d with values uniform in [-1, 1]. Throws ErrorKind::Level for
// level < 4.
ContractionReport contraction_demo(unsigned level, std::size_t trials, std::uint64_t seed);

}  // namespace tm32::padic
