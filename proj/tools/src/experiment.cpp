#include "tm32/cli/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include <json.hpp>

#include "tm32/analysis.hpp"
#include "tm32/error.hpp"
#include "tm32/numeration.hpp"
#include "tm32/padic.hpp"
#include "tm32/substitution.hpp"
#include "tm32/toeplitz.hpp"
#include "tm32/words.hpp"

namespace tm32::cli {

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

std::string num(double v) { return fmt("%.9g", v); }

std::string rat(const Rational& r) { return r.str(); }

struct Row {
  std::uint64_t n;
  const char* expansion;
  std::uint64_t digit_sum;
};

constexpr Row kTable[] = {
    {0, "", 0},           {1, "2", 2},          {2, "21", 3},         {3, "210", 3},        {4, "212", 5},
    {5, "2101", 4},       {6, "2120", 5},       {7, "2122", 7},       {8, "21011", 5},      {9, "21200", 5},
    {10, "21202", 7},     {11, "21221", 8},     {12, "210110", 5},    {13, "210112", 7},    {14, "212001", 6},
    {15, "212020", 7},    {16, "212022", 9},    {17, "212211", 9},    {18, "2101100", 5},   {19, "2101102", 7},
    {20, "2101121", 8},   {21, "2120010", 6},   {22, "2120012", 8},   {23, "2120201", 8},   {24, "2120220", 9},
    {25, "2120222", 11},  {26, "2122111", 10},
};

CheckResult table1(const ExperimentConfig&) {
  CheckResult r;
  const Word t = words::t32().prefix(27);
  for (const auto& row : kTable) {
    const auto d = numeration::expand(row.n);
    const bool ok = d.str() == row.expansion && numeration::sum_of_digits(row.n) == row.digit_sum &&
                    t[row.n] == row.digit_sum % 2 && numeration::value_of(d) == row.n;
    if (!ok) r.witnesses.push_back("n=" + std::to_string(row.n) + " expansion=" + d.str());
  }
  r.passed = r.witnesses.empty();
  r.detail = "27 rows compared";
  return r;
}

CheckResult prefixes(const ExperimentConfig&) {
  CheckResult r;
  const std::pair<SymbolStream, std::string> cases[] = {
      {words::t32(), "001110111110110111110000110110"},
      {words::t_prime(), "0100101011011010101011011"},
      {words::delta(words::t32()), "010011000011011000010001011010"},
      {words::kolakoski(), "2211212212211"},
      {words::slide2(words::t32()), "013321333321321333320001321320"},
      {words::t32_mod(4), "023310131130132311130200132130"},
  };
  for (const auto& [stream, expected] : cases) {
    const std::string got = to_text(stream.prefix(expected.size()));
    if (got != expected) r.witnesses.push_back(stream.name() + ": " + got);
  }
  r.passed = r.witnesses.empty();
  r.detail = "6 prefixes compared";
  return r;
}

std::size_t first_mismatch(const Word& a, const Word& b) {
  const auto it = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  return static_cast<std::size_t>(it.first - a.begin());
}

CheckResult generator_agreement(const ExperimentConfig& c) {
  CheckResult r;
  const Word block = words::t32(words::T32Via::Block).prefix(c.length);
  const Word dfao = words::t32(words::T32Via::Dfao).prefix(c.length);
  const Word rel = words::t32(words::T32Via::Relations).prefix(c.length);
  if (block != dfao) r.witnesses.push_back("t32 dfao differs at " + std::to_string(first_mismatch(block, dfao)));
  if (block != rel) r.witnesses.push_back("t32 relations differs at " + std::to_string(first_mismatch(block, rel)));
  const Word tb = words::t_prime(words::TPrimeVia::Block).prefix(c.length);
  const Word tp = words::t_prime(words::TPrimeVia::Phi).prefix(c.length);
  if (tb != tp) r.witnesses.push_back("tprime phi differs at " + std::to_string(first_mismatch(tb, tp)));
  r.passed = r.witnesses.empty();
  r.detail = std::to_string(c.length) + " symbols per backend";
  return r;
}

CheckResult toeplitz_identity(const ExperimentConfig& c) {
  CheckResult r;
  const auto w = toeplitz::ToeplitzPattern::parse("01?0?10??");
  const Word y = words::delta(words::t32()).prefix(c.length);
  for (std::size_t n = 0; n < y.size() && r.witnesses.size() < 10; ++n) {
    if (toeplitz::toeplitz_symbol(w, n) != y[n]) r.witnesses.push_back("n=" + std::to_string(n));
  }
  const std::size_t relations = y.size() / 9;
  for (std::size_t m = 0; m < relations && r.witnesses.size() < 10; ++m) {
    const std::size_t b = 9 * m;
    const bool ok = y[b] == 0 && y[b + 3] == 0 && y[b + 6] == 0 && y[b + 1] == 1 && y[b + 5] == 1 &&
                    y[b + 2] == y[4 * m] && y[b + 4] == y[4 * m + 1] && y[b + 7] == y[4 * m + 2] &&
                    y[b + 8] == y[4 * m + 3];
    if (!ok) r.witnesses.push_back("relations fail at m=" + std::to_string(m));
  }
  r.passed = r.witnesses.empty();
  r.detail = std::to_string(y.size()) + " symbols, relations for m < " + std::to_string(relations);
  return r;
}

CheckResult toeplitz_frequency(const ExperimentConfig& c) {
  CheckResult r;
  const auto w = toeplitz::ToeplitzPattern::parse("01?0?10??");
  const Rational f0 = toeplitz::letter_frequency(w, 0);
  const Rational f1 = toeplitz::letter_frequency(w, 1);
  if (f0 != Rational(3, 5) || f1 != Rational(2, 5)) r.witnesses.push_back("closed form " + rat(f0) + ", " + rat(f1));
  if (toeplitz::letter_frequency_by_iteration(w, 0) != f0) r.witnesses.push_back("matrix iteration disagrees");
  const Word y = words::delta(words::t32()).prefix(c.length);
  const double empirical = static_cast<double>(std::count(y.begin(), y.end(), Symbol{0})) / static_cast<double>(y.size());
  const double dev = std::abs(empirical - 0.6);
  if (dev > c.frequency_tolerance) r.witnesses.push_back("empirical freq(0) " + num(empirical));
  r.passed = r.witnesses.empty();
  r.detail = "freq(0)=" + rat(f0) + " freq(1)=" + rat(f1) + " empirical freq(0)=" + num(empirical) +
             " deviation=" + num(dev);
  return r;
}

CheckResult counters(const ExperimentConfig&) {
  CheckResult r;
  const auto c0 = analysis::filtered_counter(words::t32(), 0, 30);
  const auto c1 = analysis::filtered_counter(words::t32(), 1, 30);
  const auto c2 = analysis::filtered_counter(words::t32(), 2, 30);
  const std::vector<std::uint64_t> got1{c1.count(0, 0), c1.count(0, 1)};
  const std::vector<std::uint64_t> got2{c2.count(0, 0), c2.count(0, 1), c2.count(0, 2), c2.count(0, 3)};
  if (c0.count(0, 0) != 11) r.witnesses.push_back("C0(0,0,30)=" + std::to_string(c0.count(0, 0)));
  if (got1 != std::vector<std::uint64_t>{5, 6}) r.witnesses.push_back("C1(0,.,30) mismatch");
  if (got2 != std::vector<std::uint64_t>{2, 4, 3, 2}) r.witnesses.push_back("C2(0,.,30) mismatch");
  r.passed = r.witnesses.empty();
  r.detail = "C1(0,.,30)=(" + std::to_string(got1[0]) + "," + std::to_string(got1[1]) + ") C2(0,.,30)=(" +
             std::to_string(got2[0]) + "," + std::to_string(got2[1]) + "," + std::to_string(got2[2]) + "," +
             std::to_string(got2[3]) + ")";
  return r;
}

CheckResult desubstitution(const ExperimentConfig& c) {
  CheckResult r;
  const SymbolStream t = words::t32();
  const std::size_t big = std::min<std::size_t>(100'000, c.length / 3);
  std::size_t rows = 0;
  for (std::size_t m : {std::size_t{10}, std::size_t{1000}, big}) {
    for (unsigned n = 0; n <= 6; ++n) {
      const auto rep = analysis::desubstitution_check(t, n, m);
      rows += rep.rows.size();
      if (!rep.exact()) {
        r.witnesses.push_back("n=" + std::to_string(n) + " m=" + std::to_string(m) +
                              " max residual=" + std::to_string(rep.max_abs_residual()));
      }
    }
  }
  r.passed = r.witnesses.empty();
  r.detail = std::to_string(rows) + " residuals, m up to " + std::to_string(big);
  return r;
}

CheckResult normalization(const ExperimentConfig& c) {
  CheckResult r;
  const Word prefix = words::t32().prefix(c.length);
  for (unsigned n = 0; n <= 6; ++n) {
    const auto fc = analysis::filtered_counter(prefix, n, 2, c.threads);
    const std::uint64_t mod = fc.modulus();
    for (std::uint64_t k = 0; k < mod; ++k) {
      const std::uint64_t expected = prefix.size() > k ? (prefix.size() - k + mod - 1) / mod : 0;
      const auto kk = static_cast<std::int64_t>(k);
      if (fc.count(0, kk) + fc.count(1, kk) != expected) {
        r.witnesses.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  r.passed = r.witnesses.empty();
  r.detail = "n <= 6, N=" + std::to_string(c.length);
  return r;
}

CheckResult closure(const ExperimentConfig& c) {
  CheckResult r;
  const Word t = words::t32().prefix(c.length);
  const Word tp = words::t_prime().prefix(c.length);
  const Word d = words::delta(words::t32()).prefix(c.length);
  std::vector<std::size_t> t_counts(c.max_factor_len + 2, 0);
  for (std::size_t n = 1; n <= c.max_factor_len + 1; ++n) {
    const auto fs = analysis::factor_set(t, n, Alphabet::binary());
    t_counts[n] = fs.count();
    if (n > c.max_factor_len) break;
    const auto fp = analysis::factor_set(tp, n, Alphabet::binary());
    for (const auto* set : {&fs, &fp}) {
      const std::string who = (set == &fs ? "t32" : "tprime") + std::string(" n=") + std::to_string(n);
      if (!set->saturated) r.witnesses.push_back(who + " not saturated");
      for (auto map : {analysis::WordMap::Complement, analysis::WordMap::Reversal}) {
        const auto res = analysis::closed_under(*set, map);
        for (const auto& u : res.witnesses) {
          r.witnesses.push_back(who + (map == analysis::WordMap::Complement ? " complement " : " reversal ") + to_text(u));
        }
      }
    }
  }
  for (std::size_t n = 1; n <= c.max_factor_len; ++n) {
    const std::size_t pd = analysis::factor_set(d, n, Alphabet::binary()).count();
    if (t_counts[n + 1] != 2 * pd) {
      r.witnesses.push_back("p_t(" + std::to_string(n + 1) + ")=" + std::to_string(t_counts[n + 1]) + " but p_delta(" +
                            std::to_string(n) + ")=" + std::to_string(pd));
    }
  }
  r.passed = r.witnesses.empty();
  r.detail = "lengths 1.." + std::to_string(c.max_factor_len) + ", p_t32(" + std::to_string(c.max_factor_len + 1) +
             ")=" + std::to_string(t_counts[c.max_factor_len + 1]);
  return r;
}

CheckResult parity_occurrences(const ExperimentConfig& c) {
  CheckResult r;
  const Word t = words::t32().prefix(c.length);
  std::size_t factors = 0;
  for (std::size_t n = 1; n <= c.parity_factor_len; ++n) {
    const auto fs = analysis::factor_set(t, n, Alphabet::binary());
    for (const auto& [u, pos] : fs.occurrences) {
      ++factors;
      const auto pc = analysis::parity_occurrences(fs, u);
      if (pc.even == 0 || pc.odd == 0) r.witnesses.push_back(to_text(u));
    }
  }
  r.passed = r.witnesses.empty();
  r.detail = std::to_string(factors) + " factors of length <= " + std::to_string(c.parity_factor_len);
  return r;
}

CheckResult parity_period(const ExperimentConfig&) {
  CheckResult r;
  for (unsigned k = 0; k <= 10; ++k) {
    const auto period = numeration::parity_vector_least_period(k, std::uint64_t{1} << (k + 3));
    if (period != (std::uint64_t{1} << (k + 1))) {
      r.witnesses.push_back("k=" + std::to_string(k) + " period=" + std::to_string(period));
    }
  }
  r.passed = r.witnesses.empty();
  r.detail = "k <= 10";
  return r;
}

CheckResult zeta2(const ExperimentConfig& c) {
  CheckResult r;
  const std::vector<int> g_expected{1, 0, -1, -1, 1, 1, 1, -1, -1, 0, 1};
  const auto g = padic::mtilde_coefficients(2);
  bool g_ok = g.size() == g_expected.size();
  for (std::size_t i = 0; g_ok && i < g.size(); ++i) g_ok = g[i] == Rational(g_expected[i], 9);
  if (!g_ok) r.witnesses.push_back("g-vector mismatch");

  constexpr std::size_t grid = std::size_t{1} << 20;
  double closed_err = 0;
  for (std::size_t i = 0; i < grid; ++i) {
    const double s = static_cast<double>(i) / grid;
    const double closed =
        4.0 / 81.0 * (9 + 2 * std::cos(2 * std::numbers::pi * s) - 4 * std::cos(4 * std::numbers::pi * s));
    closed_err = std::max(closed_err, std::abs(padic::zeta_k_at(2, s) - closed));
  }
  if (closed_err > 1e-12) r.witnesses.push_back("closed form error " + num(closed_err));

  const auto sup = padic::zeta_k_sup(2, grid, c.threads);
  const double target = 35.0 / 54.0;
  if (!(sup.certified <= 20.0 / 27.0)) r.witnesses.push_back("certified bound " + num(sup.certified));
  if (std::abs(sup.estimate - target) > 1e-6) r.witnesses.push_back("grid sup " + num(sup.estimate));
  if (!sup.exact_max || *sup.exact_max != Rational(35, 54)) r.witnesses.push_back("exact maximum mismatch");
  if (sup.triangle_bound != Rational(20, 27)) r.witnesses.push_back("triangle bound " + rat(sup.triangle_bound));
  r.passed = r.witnesses.empty();
  r.detail = "estimate=" + num(sup.estimate) + " certified=" + num(sup.certified) +
             " exact=" + (sup.exact_max ? rat(*sup.exact_max) : std::string("n/a")) +
             " triangle=" + rat(sup.triangle_bound) + " closed-form error=" + fmt("%.3g", closed_err);
  return r;
}

CheckResult fourier(const ExperimentConfig& c) {
  CheckResult r;
  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned level = 1 + static_cast<unsigned>(trial % 12);
    std::vector<double> v(std::size_t{1} << level);
    for (auto& x : v) x = unit(rng);
    worst = std::max(worst, padic::fourier_identity_residual(padic::FiniteLevelFunction(level, std::move(v))));
  }
  if (worst > 1e-9) r.witnesses.push_back("DFT identity residual " + num(worst));
  const auto demo = padic::contraction_demo(12, 1000, c.seed);
  if (!demo.within_bound) r.witnesses.push_back("contraction ratio " + num(demo.worst_ratio));
  r.passed = r.witnesses.empty();
  r.detail = "max residual=" + fmt("%.3g", worst) + " worst ratio=" + num(demo.worst_ratio) + " bound=" +
             rat(demo.bound);
  return r;
}

CheckResult frequency_monitor(const ExperimentConfig& c) {
  CheckResult r;
  const auto fc = analysis::filtered_counter(words::t32(), 0, c.monitor_length, c.threads);
  const double density = static_cast<double>(fc.count(0, 0)) / static_cast<double>(c.monitor_length);
  const double dev = std::abs(density - 0.5);
  r.passed = dev < c.monitor_tolerance;
  r.detail = "C0(0,0,N)/N=" + num(density) + " N=" + std::to_string(c.monitor_length) + " deviation=" + num(dev);
  return r;
}

CheckResult block_frequencies(const ExperimentConfig& c) {
  CheckResult r;
  const Word t = words::t32().prefix(c.length);
  const auto fs = analysis::factor_set(t, 2, Alphabet::binary());
  const double total = static_cast<double>(t.size() - 1);
  const std::pair<const char*, double> expected[] = {{"00", 0.3}, {"01", 0.2}, {"10", 0.2}, {"11", 0.3}};
  for (const auto& [block, target] : expected) {
    const auto it = fs.occurrences.find(parse_word(block));
    const double f = it == fs.occurrences.end() ? 0 : static_cast<double>(it->second.size()) / total;
    if (std::abs(f - target) > c.experimental_tolerance) r.witnesses.push_back(std::string(block) + "=" + num(f));
    r.detail += std::string(r.detail.empty() ? "" : " ") + block + "=" + num(f);
  }
  r.passed = r.witnesses.empty();
  return r;
}

CheckResult tprime_01(const ExperimentConfig& c) {
  CheckResult r;
  const Word t = words::t_prime().prefix(c.length);
  std::size_t hits = 0;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) hits += (t[i] == 0 && t[i + 1] == 1);
  const double f = static_cast<double>(hits) / static_cast<double>(t.size() - 1);
  r.passed = std::abs(f - 0.4) <= c.experimental_tolerance;
  r.detail = "freq(01)=" + num(f) + " deviation=" + num(f - 0.4);
  return r;
}

CheckResult mod_m_uniform(const ExperimentConfig& c) {
  CheckResult r;
  for (unsigned m = 2; m <= 5; ++m) {
    const Word w = words::t32_mod(m).prefix(c.length);
    for (unsigned a = 0; a < m; ++a) {
      const double f =
          static_cast<double>(std::count(w.begin(), w.end(), static_cast<Symbol>(a))) / static_cast<double>(w.size());
      const double dev = f - 1.0 / m;
      if (std::abs(dev) > c.experimental_tolerance) {
        r.witnesses.push_back("m=" + std::to_string(m) + " a=" + std::to_string(a) + " freq=" + num(f));
      }
      if (a == 0) r.detail += (m == 2 ? "" : " ") + std::string("m=") + std::to_string(m) + " freq(0)=" + num(f);
    }
  }
  r.passed = r.witnesses.empty();
  return r;
}

CheckResult mod_m_recurrence(const ExperimentConfig& c) {
  CheckResult r;
  const std::size_t j = std::min<std::size_t>(100'000, c.length / 3);
  for (unsigned m = 2; m <= 5; ++m) {
    const SymbolStream w = words::t32_mod(m);
    std::int64_t derived = 0;
    std::int64_t printed = 0;
    for (unsigned n = 0; n <= 3; ++n) {
      derived = std::max(derived, analysis::desubstitution_check_mod(w, m, n, j).max_abs_residual());
      printed = std::max(printed, analysis::desubstitution_check_mod(w, m, n, j, {0, 1, 2}).max_abs_residual());
    }
    if (derived != 0) r.witnesses.push_back("m=" + std::to_string(m) + " residual " + std::to_string(derived));
    r.detail += (m == 2 ? "" : " ") + std::string("m=") + std::to_string(m) + " shifts(0,-1,-2)=" +
                std::to_string(derived) + " shifts(0,+1,+2)=" + std::to_string(printed);
  }
  r.passed = r.witnesses.empty();
  return r;
}

struct Entry {
  const char* name;
  CheckKind kind;
  std::function<CheckResult(const ExperimentConfig&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"table1", CheckKind::Hard, table1},
      {"prefixes", CheckKind::Hard, prefixes},
      {"generator-agreement", CheckKind::Hard, generator_agreement},
      {"toeplitz-identity", CheckKind::Hard, toeplitz_identity},
      {"toeplitz-frequency", CheckKind::Hard, toeplitz_frequency},
      {"counters", CheckKind::Hard, counters},
      {"desubstitution", CheckKind::Hard, desubstitution},
      {"normalization", CheckKind::Hard, normalization},
      {"closure", CheckKind::Hard, closure},
      {"parity-occurrences", CheckKind::Hard, parity_occurrences},
      {"parity-period", CheckKind::Hard, parity_period},
      {"zeta2", CheckKind::Hard, zeta2},
      {"fourier", CheckKind::Hard, fourier},
      {"frequency-monitor", CheckKind::Soft, frequency_monitor},
      {"block-frequencies", CheckKind::Experimental, block_frequencies},
      {"tprime-01", CheckKind::Experimental, tprime_01},
      {"mod-m-uniform", CheckKind::Experimental, mod_m_uniform},
      {"mod-m-recurrence", CheckKind::Experimental, mod_m_recurrence},
  };
  return entries;
}

}  // namespace

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidParameter, what); };
  if (length == 0) fail("length must be positive");
  if (monitor_length == 0) fail("monitor length must be positive");
  if (max_factor_len == 0 || parity_factor_len == 0) fail("factor lengths must be positive");
  if (threads == 0) fail("threads must be positive");
  for (double t : {frequency_tolerance, monitor_tolerance, experimental_tolerance}) {
    if (!(t > 0 && t < 1)) fail("tolerances must lie in (0, 1)");
  }
  if (mod_exp > 30) fail("modulus exponent must be at most 30");
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.kind != CheckKind::Hard || c.passed; });
}

std::vector<std::string> check_names(CheckKind kind) {
  std::vector<std::string> out;
  for (const auto& e : registry()) {
    if (e.kind == kind) out.emplace_back(e.name);
  }
  return out;
}

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::Hard:
      return "hard";
    case CheckKind::Soft:
      return "soft";
    case CheckKind::Experimental:
      return "experimental";
  }
  return "unknown";
}

VerifyReport run_verify_suite(const ExperimentConfig& config) {
  config.validate();
  for (const auto& name : config.checks) {
    const bool known = std::any_of(registry().begin(), registry().end(), [&](const Entry& e) { return name == e.name; });
    if (!known) throw Error(ErrorKind::NotFound, "unknown check '" + name + "'");
  }
  VerifyReport report;
  for (const auto& e : registry()) {
    bool selected;
    if (config.checks.empty()) {
      selected = e.kind != CheckKind::Experimental || config.experimental;
    } else {
      selected = std::find(config.checks.begin(), config.checks.end(), e.name) != config.checks.end() ||
                 (config.experimental && e.kind == CheckKind::Experimental);
    }
    if (!selected) continue;
    CheckResult r = e.run(config);
    r.name = e.name;
    r.kind = e.kind;
    report.checks.push_back(std::move(r));
  }
  return report;
}

std::string to_json(const ExperimentConfig& config, const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = VerifyReport::kSchemaVersion;
  j["config"] = {{"length", config.length},
                 {"monitor_length", config.monitor_length},
                 {"max_factor_len", config.max_factor_len},
                 {"parity_factor_len", config.parity_factor_len},
                 {"seed", config.seed},
                 {"experimental", config.experimental}};
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"kind", to_string(c.kind)},
                      {"passed", c.passed},
                      {"detail", c.detail},
                      {"witnesses", c.witnesses}});
  }
  j["checks"] = std::move(checks);
  j["passed"] = report.passed();
  return j.dump(2) + "\n";
}

void emit_frequency_csv(const ExperimentConfig& config, std::ostream& out) {
  std::size_t top = 0;
  for (const auto& [lo, hi] : config.ranges) {
    if (lo <= hi) top = std::max(top, hi);
  }
  out << "range,N,count,density\n";
  if (top == 0) return;
  const Word w = words::named_word(config.word).prefix(top);
  // running[N] = number of zeros in w[0, N)
  std::vector<std::uint64_t> running(top + 1, 0);
  for (std::size_t i = 0; i < top; ++i) running[i + 1] = running[i] + (w[i] == 0);
  for (const auto& [lo, hi] : config.ranges) {
    const std::string label = std::to_string(lo) + "-" + std::to_string(hi);
    for (std::size_t n = std::max<std::size_t>(lo, 1); lo <= hi && n <= hi; ++n) {
      out << label << ',' << n << ',' << running[n] << ',' << fmt("%.10f", static_cast<double>(running[n]) / n)
          << '\n';
    }
  }
}

}  // namespace tm32::cli
