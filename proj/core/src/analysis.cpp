#include "tm32/analysis.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <unordered_map>

#include "tm32/error.hpp"

namespace tm32::analysis {

bool FactorSet::contains(std::span<const Symbol> u) const {
  return occurrences.count(Word(u.begin(), u.end())) != 0;
}

std::vector<Word> FactorSet::factors() const {
  std::vector<Word> out;
  out.reserve(occurrences.size());
  for (const auto& [u, pos] : occurrences) out.push_back(u);
  return out;
}

FactorSet factor_set(std::span<const Symbol> prefix, std::size_t n, Alphabet alphabet) {
  if (n == 0) throw Error(ErrorKind::EmptyWindow, "factor length must be positive");
  if (prefix.size() < n) {
    throw Error(ErrorKind::EmptyWindow,
                "prefix of length " + std::to_string(prefix.size()) + " has no factor of length " + std::to_string(n));
  }
  // Byte strings of length <= 15 stay in the small-string buffer.
  std::unordered_map<std::string, std::vector<std::size_t>> found;
  const auto* bytes = reinterpret_cast<const char*>(prefix.data());
  for (std::size_t i = 0; i + n <= prefix.size(); ++i) found[std::string(bytes + i, n)].push_back(i);

  FactorSet fs;
  fs.length = n;
  fs.scanned = prefix.size();
  fs.alphabet = std::move(alphabet);
  const std::size_t half = prefix.size() / 2;
  std::size_t early = 0;
  for (auto& [key, pos] : found) {
    if (pos.front() + n <= half) ++early;
    fs.occurrences.emplace(Word(key.begin(), key.end()), std::move(pos));
  }
  fs.saturated = early == fs.occurrences.size();
  return fs;
}

FactorSet factor_set(const SymbolStream& x, std::size_t n, std::size_t N) {
  if (N < n) throw Error(ErrorKind::EmptyWindow, "prefix shorter than the factor length");
  const Word prefix = x.prefix(N);
  return factor_set(prefix, n, x.alphabet());
}

ClosureResult closed_under(const FactorSet& fs, WordMap map) {
  ClosureResult out;
  if (map == WordMap::Complement && !fs.alphabet.is_binary()) {
    throw Error(ErrorKind::UnsupportedAlphabet, "complement closure needs a binary alphabet");
  }
  if (!fs.saturated) {
    out.warning = "factor set of length " + std::to_string(fs.length) + " is not saturated at N=" +
                  std::to_string(fs.scanned);
  }
  for (const auto& [u, pos] : fs.occurrences) {
    Word image = u;
    if (map == WordMap::Complement) {
      for (auto& s : image) s = static_cast<Symbol>(1 - s);
    } else {
      std::reverse(image.begin(), image.end());
    }
    if (fs.occurrences.count(image) == 0) {
      out.closed = false;
      out.witnesses.push_back(u);
    }
  }
  return out;
}

namespace {

const std::vector<std::size_t>& positions(const FactorSet& fs, std::span<const Symbol> u) {
  auto it = fs.occurrences.find(Word(u.begin(), u.end()));
  if (it == fs.occurrences.end()) throw Error(ErrorKind::NotFound, "factor " + to_text(u) + " does not occur");
  return it->second;
}

}  // namespace

ParityCounts parity_occurrences(const FactorSet& fs, std::span<const Symbol> u) {
  ParityCounts pc;
  for (auto p : positions(fs, u)) (p % 2 == 0 ? pc.even : pc.odd) += 1;
  return pc;
}

std::size_t recurrence_gap(const FactorSet& fs, std::span<const Symbol> u) {
  auto it = fs.occurrences.find(Word(u.begin(), u.end()));
  if (it == fs.occurrences.end() || it->second.size() < 2) {
    throw Error(ErrorKind::InsufficientData, "factor " + to_text(u) + " occurs fewer than twice");
  }
  const auto& pos = it->second;
  std::size_t gap = 0;
  for (std::size_t i = 1; i < pos.size(); ++i) gap = std::max(gap, pos[i] - pos[i - 1]);
  return gap;
}

FilteredCounter::FilteredCounter(unsigned n, std::size_t N, std::size_t symbol_bound)
    : n_(n), N_(N), bound_(symbol_bound) {
  if (n > 30) throw Error(ErrorKind::InvalidParameter, "modulus exponent must be at most 30");
  table_.assign(bound_ << n, 0);
}

std::uint64_t FilteredCounter::residue(std::int64_t k) const noexcept {
  // Two's complement wrap is exactly reduction mod 2^n.
  return static_cast<std::uint64_t>(k) & (modulus() - 1);
}

std::uint64_t FilteredCounter::count(Symbol c, std::int64_t k) const {
  if (c >= bound_) return 0;
  return table_[c * modulus() + residue(k)];
}

FilteredCounter& FilteredCounter::operator+=(const FilteredCounter& other) {
  if (other.n_ != n_ || other.bound_ != bound_) {
    throw Error(ErrorKind::InvalidParameter, "cannot merge counters of different shapes");
  }
  for (std::size_t i = 0; i < table_.size(); ++i) table_[i] += other.table_[i];
  N_ += other.N_;
  return *this;
}

FilteredCounter filtered_counter(std::span<const Symbol> prefix, unsigned n, std::size_t symbol_bound,
                                 unsigned threads) {
  const std::size_t N = prefix.size();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(N / 4096 + 1)));
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  auto scan = [&](std::size_t lo, std::size_t hi) {
    FilteredCounter part(n, hi - lo, symbol_bound);
    for (std::size_t i = lo; i < hi; ++i) {
      if (prefix[i] >= symbol_bound) throw Error(ErrorKind::UnsupportedAlphabet, "symbol outside counter alphabet");
      ++part.at(prefix[i], i & mask);
    }
    return part;
  };
  if (threads == 1) return scan(0, N);

  std::vector<FilteredCounter> parts(threads, FilteredCounter(n, 0, symbol_bound));
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          parts[t] = scan(N * t / threads, N * (t + 1) / threads);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  FilteredCounter total(n, 0, symbol_bound);
  for (const auto& p : parts) total += p;
  return total;
}

FilteredCounter filtered_counter(const SymbolStream& x, unsigned n, std::size_t N, unsigned threads) {
  const Word prefix = x.prefix(N);
  return filtered_counter(prefix, n, x.alphabet().bound(), threads);
}

std::uint64_t q_inverse(unsigned n) {
  if (n > 62) throw Error(ErrorKind::InvalidParameter, "q_inverse: n must be at most 62");
  // Newton iteration for 1/3 in Z/2^64 doubles the correct bits each step.
  std::uint64_t q = 3;  // 3*3 = 9 = 1 mod 8
  for (int i = 0; i < 5; ++i) q *= 2 - 3 * q;
  const std::uint64_t mask = (std::uint64_t{1} << (n + 1)) - 1;
  return q & mask;
}

bool DesubstitutionReport::exact() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const Residual& r) { return r.residual() == 0; });
}

std::int64_t DesubstitutionReport::max_abs_residual() const noexcept {
  std::int64_t worst = 0;
  for (const auto& r : rows) worst = std::max(worst, r.residual() < 0 ? -r.residual() : r.residual());
  return worst;
}

namespace {

DesubstitutionReport compare_levels(const Word& prefix, unsigned modulus, unsigned n, std::size_t m,
                                    SymbolShifts shifts) {
  const std::span<const Symbol> whole(prefix);
  const FilteredCounter coarse = filtered_counter(whole.first(3 * m), n, modulus);
  const FilteredCounter fine = filtered_counter(whole.first(2 * m), n + 1, modulus);
  const auto q = static_cast<std::int64_t>(q_inverse(n));
  auto shifted = [modulus](Symbol c, int s) {
    const int mm = static_cast<int>(modulus);
    return static_cast<Symbol>(((static_cast<int>(c) + s) % mm + mm) % mm);
  };
  DesubstitutionReport report;
  report.n = n;
  report.m = m;
  for (unsigned c = 0; c < modulus; ++c) {
    const auto sym = static_cast<Symbol>(c);
    for (std::uint64_t k = 0; k < coarse.modulus(); ++k) {
      const auto kk = static_cast<std::int64_t>(k);
      Residual r;
      r.c = sym;
      r.k = k;
      r.lhs = static_cast<std::int64_t>(coarse.count(sym, kk));
      r.rhs = static_cast<std::int64_t>(fine.count(shifted(sym, shifts.at_2qk), 2 * q * kk) +
                                        fine.count(shifted(sym, shifts.at_2qk_minus_q), 2 * q * kk - q) +
                                        fine.count(shifted(sym, shifts.at_2qk_minus_2q), 2 * q * kk - 2 * q));
      report.rows.push_back(r);
    }
  }
  return report;
}

}  // namespace

DesubstitutionReport desubstitution_check(const SymbolStream& x, unsigned n, std::size_t m) {
  if (!x.alphabet().is_binary()) throw Error(ErrorKind::UnsupportedAlphabet, "desubstitution check needs a binary word");
  if (n >= 30) throw Error(ErrorKind::InvalidParameter, "modulus exponent must be below 30");
  // Over {0,1}: c + 1 = c - 1 = 1 - c and c + 2 = c - 2 = c.
  return compare_levels(x.prefix(3 * m), 2, n, m, SymbolShifts{0, 1, 0});
}

DesubstitutionReport desubstitution_check_length(const SymbolStream& x, unsigned n, std::size_t N) {
  if (N % 3 != 0) {
    throw Error(ErrorKind::Alignment, "prefix length " + std::to_string(N) + " is not a multiple of 3");
  }
  return desubstitution_check(x, n, N / 3);
}

DesubstitutionReport desubstitution_check_mod(const SymbolStream& x, unsigned modulus, unsigned n, std::size_t j,
                                              SymbolShifts shifts) {
  if (modulus < 2 || x.alphabet().bound() > modulus) {
    throw Error(ErrorKind::UnsupportedAlphabet, "stream symbols must lie in Z/" + std::to_string(modulus));
  }
  if (n >= 30) throw Error(ErrorKind::InvalidParameter, "modulus exponent must be below 30");
  return compare_levels(x.prefix(3 * j), modulus, n, j, shifts);
}

std::vector<MuEstimate> mu_estimates(const SymbolStream& x, unsigned n, std::size_t N, unsigned threads) {
  if (N == 0) throw Error(ErrorKind::InvalidParameter, "mu estimates need N >= 1");
  const FilteredCounter fc = filtered_counter(x, n, N, threads);
  const double target = 1.0 / (static_cast<double>(x.alphabet().size()) * static_cast<double>(fc.modulus()));
  std::vector<MuEstimate> out;
  for (Symbol c : x.alphabet().symbols()) {
    for (std::uint64_t k = 0; k < fc.modulus(); ++k) {
      MuEstimate e;
      e.c = c;
      e.k = k;
      e.count = fc.count(c, static_cast<std::int64_t>(k));
      e.density = static_cast<double>(e.count) / static_cast<double>(N);
      e.target = target;
      e.deviation = e.density - target;
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace tm32::analysis
