#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tm32/stream.hpp"
#include "tm32/symbol.hpp"

namespace tm32::analysis {

// Distinct length-n factors of a prefix x[0, N), with their positions.
struct FactorSet {
  std::size_t length = 0;
  std::size_t scanned = 0;
  Alphabet alphabet;
  std::map<Word, std::vector<std::size_t>> occurrences;  // sorted positions
  // Same factor count already within x[0, N/2).
  bool saturated = false;

  std::size_t count() const noexcept { return occurrences.size(); }
  bool contains(std::span<const Symbol> u) const;
  std::vector<Word> factors() const;
};

// Throws ErrorKind::EmptyWindow when N < n or n == 0.
FactorSet factor_set(std::span<const Symbol> prefix, std::size_t n, Alphabet alphabet);
FactorSet factor_set(const SymbolStream& x, std::size_t n, std::size_t N);

enum class WordMap { Complement, Reversal };

struct ClosureResult {
  bool closed = true;
  std::vector<Word> witnesses;  // factors whose image is missing
  std::optional<std::string> warning;
};

ClosureResult closed_under(const FactorSet& fs, WordMap map);

struct ParityCounts {
  std::size_t even = 0;
  std::size_t odd = 0;
};

// Throws ErrorKind::NotFound if u is not in fs.
ParityCounts parity_occurrences(const FactorSet& fs, std::span<const Symbol> u);
// Largest distance between consecutive occurrences of u. Throws
// ErrorKind::InsufficientData with fewer than two occurrences.
std::size_t recurrence_gap(const FactorSet& fs, std::span<const Symbol> u);

// C_n(c, k, N) for every symbol c and residue k mod 2^n.
class FilteredCounter {
 public:
  FilteredCounter(unsigned n, std::size_t N, std::size_t symbol_bound);

  unsigned exponent() const noexcept { return n_; }
  std::size_t scanned() const noexcept { return N_; }
  std::size_t symbol_bound() const noexcept { return bound_; }
  std::uint64_t modulus() const noexcept { return std::uint64_t{1} << n_; }
  // k is reduced mod 2^n first, so negative residues are accepted.
  std::uint64_t count(Symbol c, std::int64_t k) const;
  std::uint64_t& at(Symbol c, std::uint64_t k) { return table_[c * modulus() + k]; }
  std::uint64_t residue(std::int64_t k) const noexcept;

  FilteredCounter& operator+=(const FilteredCounter& other);

 private:
  unsigned n_;
  std::size_t N_;
  std::size_t bound_;
  std::vector<std::uint64_t> table_;  // [c * 2^n + k]
};

// Throws ErrorKind::InvalidParameter for n > 30. Scans in `threads` chunks.
FilteredCounter filtered_counter(std::span<const Symbol> prefix, unsigned n, std::size_t symbol_bound,
                                 unsigned threads = 1);
FilteredCounter filtered_counter(const SymbolStream& x, unsigned n, std::size_t N, unsigned threads = 1);

// Inverse of 3 modulo 2^{n+1}, in [1, 2^{n+1}). n <= 62.
std::uint64_t q_inverse(unsigned n);

struct Residual {
  Symbol c = 0;
  std::uint64_t k = 0;
  std::int64_t lhs = 0;  // C_n(c, k, 3m)
  std::int64_t rhs = 0;  // sum of the three level-(n+1) counts at 2m
  std::int64_t residual() const noexcept { return lhs - rhs; }
};

struct DesubstitutionReport {
  unsigned n = 0;
  std::size_t m = 0;
  std::vector<Residual> rows;
  bool exact() const noexcept;
  std::int64_t max_abs_residual() const noexcept;
};

// Compares C_n(c,k,3m) with C_{n+1}(c,2qk,2m) + C_{n+1}(c,2qk-2q,2m) +
// C_{n+1}(1-c,2qk-q,2m), q = q_inverse(n), for a binary stream.
DesubstitutionReport desubstitution_check(const SymbolStream& x, unsigned n, std::size_t m);
// Same with N = 3m given directly. Throws ErrorKind::Alignment unless 3 | N.
DesubstitutionReport desubstitution_check_length(const SymbolStream& x, unsigned n, std::size_t N);

// Counting identity for a stream over Z/mZ fixed by ab -> a (a+2)(b+1):
// C_n(c,k,3j) = C_{n+1}(c + s0, 2qk, 2j) + C_{n+1}(c + s1, 2qk-q, 2j) +
// C_{n+1}(c + s2, 2qk-2q, 2j), symbols taken mod `modulus`. The shifts are
// parameters so that competing forms of the identity can be compared.
struct SymbolShifts {
  int at_2qk = 0;
  int at_2qk_minus_q = -1;
  int at_2qk_minus_2q = -2;
};
DesubstitutionReport desubstitution_check_mod(const SymbolStream& x, unsigned modulus, unsigned n, std::size_t j,
                                              SymbolShifts shifts = {});

struct MuEstimate {
  Symbol c = 0;
  std::uint64_t k = 0;
  std::uint64_t count = 0;
  double density = 0;    // C_n(c,k,N) / N
  double target = 0;     // 1 / (|A| 2^n), i.e. 2^{-n-1} on a binary alphabet
  double deviation = 0;  // density - target
};

// Throws ErrorKind::InvalidParameter for N == 0.
std::vector<MuEstimate> mu_estimates(const SymbolStream& x, unsigned n, std::size_t N, unsigned threads = 1);

}  // namespace tm32::analysis
