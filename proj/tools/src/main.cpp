#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tm32/analysis.hpp"
#include "tm32/cli/experiment.hpp"
#include "tm32/error.hpp"
#include "tm32/numeration.hpp"
#include "tm32/padic.hpp"
#include "tm32/substitution.hpp"
#include "tm32/toeplitz.hpp"
#include "tm32/words.hpp"

namespace {

using namespace tm32;
using json = nlohmann::ordered_json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Globals {
  std::optional<std::size_t> length;
  std::string format;
  std::string out;
  unsigned threads = 1;
  std::uint64_t seed = 1;

  std::size_t length_or(std::size_t fallback) const { return length.value_or(fallback); }
  std::string format_or(const std::string& fallback) const { return format.empty() ? fallback : format; }
};

std::string fixed(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

void write_output(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) throw Error(ErrorKind::Io, "cannot write " + g.out);
}

SymbolStream resolve_word(const std::string& id, unsigned m, const std::string& via, Symbol start) {
  std::string key = id;
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "t32" && !via.empty()) {
    if (via == "dfao") return words::t32(words::T32Via::Dfao);
    if (via == "block") return words::t32(words::T32Via::Block);
    if (via == "relations") return words::t32(words::T32Via::Relations);
    throw Error(ErrorKind::InvalidParameter, "t32 backends are dfao, block, relations");
  }
  if (key == "tprime" && !via.empty()) {
    if (via == "block") return words::t_prime(words::TPrimeVia::Block);
    if (via == "phi") return words::t_prime(words::TPrimeVia::Phi);
    throw Error(ErrorKind::InvalidParameter, "tprime backends are block, phi");
  }
  const auto names = words::catalog_names();
  if (std::find(names.begin(), names.end(), key) == names.end() && std::filesystem::is_regular_file(id)) {
    std::ifstream in(id);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + id);
    return block_fixed_point(parse_block_substitution(in), start);
  }
  return words::named_word(id, m);
}

SymbolStream apply_op(const std::string& op, const SymbolStream& x) {
  if (op == "slide2") return words::slide2(x);
  if (op == "delta") return words::delta(x);
  return words::complement(x);
}

std::string expand_row(std::uint64_t n, const std::string& sep) {
  const auto s = numeration::sum_of_digits(n);
  return std::to_string(n) + sep + numeration::expand(n).str() + sep + std::to_string(s) + sep +
         std::to_string(s % 2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Base-3/2 Thue-Morse toolkit: words, Toeplitz structure, counters and 2-adic bounds"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--length", g.length, "Prefix length N");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json", "raw"}));
  app.add_option("--out", g.out, "Write output to PATH instead of stdout");
  app.add_option("--threads", g.threads, "Worker threads for scans")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Random seed for the 2-adic demos");

  // expand
  auto* expand = app.add_subcommand("expand", "Base-3/2 expansion, digit sum and parity (TSV: n, expansion, digit_sum, parity)");
  std::optional<std::uint64_t> expand_n;
  std::optional<std::uint64_t> table_max;
  expand->add_option("n", expand_n, "Integer to expand");
  expand->add_option("--table", table_max, "Print rows 0..MAX");

  // seq
  auto* seq = app.add_subcommand("seq", "Print a prefix of a named word or of the fixed point of a substitution file");
  std::string seq_name;
  std::string seq_via;
  unsigned seq_m = 4;
  unsigned seq_start = 0;
  std::vector<std::string> seq_ops;
  seq->add_option("word", seq_name, "Catalog name or substitution file (`block -> image` per line)")->required();
  seq->add_option("--via", seq_via, "Backend: dfao|block|relations for t32, block|phi for tprime");
  seq->add_option("--m", seq_m, "Modulus for t32-mod")->check(CLI::Range(2, 36));
  seq->add_option("--start", seq_start, "Seed symbol for a substitution file")->check(CLI::Range(0, 35));
  seq->add_option("--op", seq_ops, "Operator applied in order; repeatable")
      ->check(CLI::IsMember({"slide2", "delta", "complement"}));

  // toeplitz
  auto* toe = app.add_subcommand("toeplitz", "Toeplitz word of a hole pattern ('?' marks a hole)");
  std::string pattern;
  bool freqs = false;
  std::optional<unsigned> layer;
  toe->add_option("--pattern", pattern, "Pattern, e.g. 01?0?10??")->required();
  toe->add_flag("--freqs", freqs, "Print exact letter frequencies and the complexity exponent");
  toe->add_option("--layer", layer, "Print layer T_i with unresolved holes as '?'");

  // factors
  auto* factors = app.add_subcommand("factors", "Factor set of a word prefix with closure and parity checks");
  std::string fac_word = "t32";
  std::size_t fac_len = 0;
  std::optional<std::size_t> fac_prefix;
  std::vector<std::string> fac_checks;
  unsigned fac_m = 4;
  factors->add_option("--word", fac_word, "Catalog name");
  factors->add_option("--len", fac_len, "Factor length n")->required()->check(CLI::PositiveNumber);
  factors->add_option("--prefix", fac_prefix, "Scanned prefix length N (default --length or 100000)");
  factors->add_option("--check", fac_checks, "complement,reversal,parity")
      ->delimiter(',')
      ->check(CLI::IsMember({"complement", "reversal", "parity"}));
  factors->add_option("--m", fac_m, "Modulus for t32-mod")->check(CLI::Range(2, 36));
  factors->footer("With --format csv, lists factor,occurrences,even,odd,max_gap (max_gap empty below two occurrences).");

  // freq
  auto* freq = app.add_subcommand("freq", "Filtered counters C_n(c,k,N) (CSV: N,c,k,count,density,deviation)");
  std::string freq_word = "t32";
  unsigned mod_exp = 0;
  std::string freq_csv;
  unsigned freq_m = 4;
  freq->add_option("--word", freq_word, "Catalog name");
  freq->add_option("--mod-exp", mod_exp, "Modulus exponent n (residues mod 2^n)")->check(CLI::Range(0, 20));
  freq->add_option("--csv", freq_csv, "Write the CSV to PATH");
  freq->add_option("--m", freq_m, "Modulus for t32-mod")->check(CLI::Range(2, 36));
  freq->footer("density = count / N; deviation = density - 1/(|A| 2^n).");

  // zeta
  auto* zeta = app.add_subcommand("zeta", "Grid supremum of zeta_k with a certified upper bound");
  unsigned zk = 2;
  std::size_t grid = std::size_t{1} << 20;
  bool zcsv = false;
  std::size_t samples = 1024;
  zeta->add_option("--k", zk, "Number of multiplier steps")->check(CLI::Range(1, 12));
  zeta->add_option("--grid", grid, "Grid points on [0,1)")->check(CLI::Range(std::size_t{1024}, std::size_t{1} << 28));
  zeta->add_flag("--csv", zcsv, "Emit s,zeta samples followed by a '# ' summary line");
  zeta->add_option("--samples", samples, "Number of CSV rows (evenly spaced)")->check(CLI::PositiveNumber);

  // contraction
  auto* contraction = app.add_subcommand("contraction", "Random check of ||L^2 d||^2 <= (20/27) ||d||^2");
  unsigned level = 12;
  std::size_t trials = 1000;
  contraction->add_option("--level", level, "Level of the random functions")->check(CLI::Range(4, 24));
  contraction->add_option("--trials", trials, "Number of random functions");

  // verify
  auto* verify = app.add_subcommand("verify", "Run named checks; exit status 1 iff a hard check fails");
  bool verify_all = false;
  std::vector<std::string> verify_checks;
  cli::ExperimentConfig config;
  verify->add_flag("--all", verify_all, "Every hard and soft check (default)");
  verify->add_option("--check", verify_checks, "Run only the named check; repeatable")->delimiter(',');
  verify->add_flag("--experimental", config.experimental, "Also report the experimental frequency claims");
  verify->add_option("--monitor-length", config.monitor_length, "Prefix length for the frequency monitor");
  verify->add_option("--max-factor-len", config.max_factor_len, "Largest factor length for closure checks");
  verify->add_option("--monitor-tolerance", config.monitor_tolerance, "Soft threshold for the frequency monitor");
  verify->add_option("--experimental-tolerance", config.experimental_tolerance, "Tolerance for experimental claims");
  std::string footer = "Hard checks:";
  for (const auto& n : cli::check_names(cli::CheckKind::Hard)) footer += " " + n;
  footer += "\nSoft checks:";
  for (const auto& n : cli::check_names(cli::CheckKind::Soft)) footer += " " + n;
  footer += "\nExperimental checks:";
  for (const auto& n : cli::check_names(cli::CheckKind::Experimental)) footer += " " + n;
  verify->footer(footer);

  // emit
  auto* emit = app.add_subcommand("emit", "Running density of 0 (CSV: range,N,count,density)");
  std::vector<std::string> ranges;
  std::string emit_word = "t32";
  emit->add_option("--word", emit_word, "Catalog name");
  emit->add_option("--range", ranges, "Inclusive range LO:HI; repeatable (default 1:2000 and 14000:15000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    std::ostringstream out;
    int status = 0;

    if (*expand) {
      if (!expand_n && !table_max) throw CLI::ValidationError("expand", "give n or --table MAX");
      const std::string fmt = g.format_or("raw");
      std::vector<std::uint64_t> rows;
      if (table_max) {
        for (std::uint64_t n = 0; n <= *table_max; ++n) rows.push_back(n);
      } else {
        rows.push_back(*expand_n);
      }
      if (fmt == "json") {
        json arr = json::array();
        for (auto n : rows) {
          const auto s = numeration::sum_of_digits(n);
          arr.push_back({{"n", n}, {"expansion", numeration::expand(n).str()}, {"digit_sum", s}, {"parity", s % 2}});
        }
        out << arr.dump(2) << "\n";
      } else {
        const std::string sep = fmt == "csv" ? "," : "\t";
        out << "n" << sep << "expansion" << sep << "digit_sum" << sep << "parity\n";
        for (auto n : rows) out << expand_row(n, sep);
      }
    } else if (*seq) {
      SymbolStream x = resolve_word(seq_name, seq_m, seq_via, static_cast<Symbol>(seq_start));
      for (const auto& op : seq_ops) x = apply_op(op, x);
      const Word w = x.prefix(g.length_or(100));
      const std::string fmt = g.format_or("raw");
      if (fmt == "csv") {
        out << "n,symbol\n";
        for (std::size_t i = 0; i < w.size(); ++i) out << i << ',' << symbol_char(w[i]) << '\n';
      } else if (fmt == "json") {
        out << json{{"word", x.name()}, {"length", w.size()}, {"symbols", to_text(w)}}.dump(2) << "\n";
      } else {
        out << to_text(w) << "\n";
      }
    } else if (*toe) {
      const auto w = toeplitz::ToeplitzPattern::parse(pattern);
      const std::size_t n = g.length_or(100);
      const std::string fmt = g.format_or("raw");
      if (layer) {
        for (const auto& s : toeplitz::toeplitz_layer(w, *layer, n)) out << (s ? symbol_char(*s) : '?');
        out << "\n";
      } else if (freqs) {
        const Word prefix = toeplitz::toeplitz_stream(w).prefix(n);
        std::string exponent;
        try {
          exponent = fixed(toeplitz::complexity_exponent(w));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::DegeneratePattern) throw;
          exponent = "degenerate";
        }
        json letters = json::array();
        const Alphabet letters_used = w.alphabet();
        for (Symbol a : letters_used.symbols()) {
          const double empirical =
              static_cast<double>(std::count(prefix.begin(), prefix.end(), a)) / static_cast<double>(prefix.size());
          letters.push_back({{"letter", std::string(1, symbol_char(a))},
                             {"frequency", toeplitz::letter_frequency(w, a).str()},
                             {"iteration", toeplitz::letter_frequency_by_iteration(w, a).str()},
                             {"empirical", empirical}});
        }
        if (fmt == "json") {
          out << json{{"pattern", w.str()}, {"p", w.p()}, {"q", w.q()}, {"length", n}, {"letters", letters},
                      {"complexity_exponent", exponent}}
                     .dump(2)
              << "\n";
        } else {
          out << "pattern=" << w.str() << " p=" << w.p() << " q=" << w.q() << "\n";
          for (const auto& l : letters) {
            out << "freq(" << l["letter"].get<std::string>() << ")=" << l["frequency"].get<std::string>()
                << " iteration=" << l["iteration"].get<std::string>() << " empirical("
                << n << ")=" << fixed(l["empirical"].get<double>(), 9) << "\n";
          }
          out << "complexity_exponent=" << exponent << "\n";
        }
      } else {
        out << to_text(toeplitz::toeplitz_stream(w).prefix(n)) << "\n";
      }
    } else if (*factors) {
      const SymbolStream x = words::named_word(fac_word, fac_m);
      const std::size_t N = fac_prefix.value_or(g.length_or(100'000));
      const auto fs = analysis::factor_set(x, fac_len, N);
      const std::string fmt = g.format_or("raw");
      json checks = json::object();
      for (const auto& c : fac_checks) {
        if (c == "parity") {
          json missing = json::array();
          for (const auto& [u, pos] : fs.occurrences) {
            const auto pc = analysis::parity_occurrences(fs, u);
            if (pc.even == 0 || pc.odd == 0) missing.push_back(to_text(u));
          }
          checks[c] = {{"passed", missing.empty()}, {"witnesses", missing}};
        } else {
          const auto res =
              analysis::closed_under(fs, c == "complement" ? analysis::WordMap::Complement : analysis::WordMap::Reversal);
          json wit = json::array();
          for (const auto& u : res.witnesses) wit.push_back(to_text(u));
          checks[c] = {{"passed", res.closed}, {"witnesses", wit}};
          if (res.warning) checks[c]["warning"] = *res.warning;
        }
        if (!checks[c]["passed"].get<bool>()) status = kExitCheckFailed;
      }
      if (fmt == "csv") {
        out << "factor,occurrences,even,odd,max_gap\n";
        for (const auto& [u, pos] : fs.occurrences) {
          const auto pc = analysis::parity_occurrences(fs, u);
          out << to_text(u) << ',' << pos.size() << ',' << pc.even << ',' << pc.odd << ',';
          if (pos.size() >= 2) out << analysis::recurrence_gap(fs, u);
          out << '\n';
        }
      } else if (fmt == "json") {
        out << json{{"word", x.name()}, {"length", fac_len}, {"prefix", N}, {"count", fs.count()},
                    {"saturated", fs.saturated}, {"checks", checks}}
                   .dump(2)
            << "\n";
      } else {
        out << "word=" << x.name() << " n=" << fac_len << " N=" << N << " count=" << fs.count()
            << " saturated=" << (fs.saturated ? "yes" : "no") << "\n";
        for (const auto& [name, r] : checks.items()) {
          out << name << ": " << (r["passed"].get<bool>() ? "pass" : "FAIL");
          for (const auto& w : r["witnesses"]) out << " " << w.get<std::string>();
          if (r.contains("warning")) out << " (warning: " << r["warning"].get<std::string>() << ")";
          out << "\n";
        }
      }
    } else if (*freq) {
      const SymbolStream x = words::named_word(freq_word, freq_m);
      const std::size_t N = g.length_or(100'000);
      const auto est = analysis::mu_estimates(x, mod_exp, N, g.threads);
      if (g.format_or("csv") == "json") {
        json rows = json::array();
        for (const auto& e : est) {
          rows.push_back({{"N", N}, {"c", e.c}, {"k", e.k}, {"count", e.count}, {"density", e.density},
                          {"deviation", e.deviation}});
        }
        out << rows.dump(2) << "\n";
      } else {
        out << "N,c,k,count,density,deviation\n";
        for (const auto& e : est) {
          out << N << ',' << symbol_char(e.c) << ',' << e.k << ',' << e.count << ',' << fixed(e.density) << ','
              << fixed(e.deviation) << '\n';
        }
      }
      if (!freq_csv.empty()) g.out = freq_csv;
    } else if (*zeta) {
      const auto sup = padic::zeta_k_sup(zk, grid, g.threads);
      const std::string exact = sup.exact_max ? sup.exact_max->str() : "n/a";
      const bool below_one = sup.certified < 1;
      const std::string summary = "k=" + std::to_string(zk) + " grid=" + std::to_string(grid) +
                                  " estimate=" + fixed(sup.estimate) + " argmax=" + fixed(sup.argmax) +
                                  " certified=" + fixed(sup.certified) + " triangle=" + sup.triangle_bound.str() +
                                  " exact=" + exact + " certified_le_triangle=" +
                                  (sup.certified <= sup.triangle_bound.convert_to<double>() ? "yes" : "no") +
                                  " below_one=" + (below_one ? "yes" : "no");
      if (g.format_or(zcsv ? "csv" : "raw") == "json") {
        out << json{{"k", zk}, {"grid", grid}, {"estimate", sup.estimate}, {"argmax", sup.argmax},
                    {"lipschitz", sup.lipschitz}, {"certified", sup.certified},
                    {"triangle_bound", sup.triangle_bound.str()}, {"exact", exact}, {"below_one", below_one}}
                   .dump(2)
            << "\n";
      } else if (zcsv || g.format == "csv") {
        out << "s,zeta\n";
        const std::size_t rows = std::min(samples, grid);
        for (std::size_t i = 0; i < rows; ++i) {
          const double s = static_cast<double>(i) / static_cast<double>(rows);
          out << fixed(s) << ',' << fixed(padic::zeta_k_at(zk, s), 15) << '\n';
        }
        out << "# " << summary << "\n";
      } else {
        out << summary << "\n";
      }
    } else if (*contraction) {
      const auto rep = padic::contraction_demo(level, trials, g.seed);
      if (!rep.within_bound) status = kExitCheckFailed;
      if (g.format_or("raw") == "json") {
        out << json{{"level", level}, {"trials", trials}, {"seed", g.seed}, {"worst_ratio", rep.worst_ratio},
                    {"bound", rep.bound.str()}, {"within_bound", rep.within_bound}}
                   .dump(2)
            << "\n";
      } else {
        out << "level=" << level << " trials=" << trials << " seed=" << g.seed << " worst_ratio="
            << fixed(rep.worst_ratio) << " bound=" << rep.bound.str()
            << " within_bound=" << (rep.within_bound ? "yes" : "no") << "\n";
      }
    } else if (*verify) {
      config.length = g.length_or(config.length);
      config.seed = g.seed;
      config.threads = g.threads;
      if (!verify_all) config.checks = verify_checks;
      const auto report = cli::run_verify_suite(config);
      if (!report.passed()) status = kExitCheckFailed;
      if (g.format_or("raw") == "json") {
        out << cli::to_json(config, report);
      } else {
        for (const auto& c : report.checks) {
          out << (c.passed ? "PASS" : "FAIL") << " " << c.name << " [" << cli::to_string(c.kind) << "] " << c.detail
              << "\n";
          for (const auto& w : c.witnesses) out << "  witness: " << w << "\n";
        }
        out << (report.passed() ? "all hard checks passed" : "hard check failure") << "\n";
      }
    } else if (*emit) {
      config.word = emit_word;
      if (!ranges.empty()) {
        config.ranges.clear();
        for (const auto& r : ranges) {
          const auto colon = r.find(':');
          if (colon == std::string::npos) throw CLI::ValidationError("--range", "expected LO:HI, got " + r);
          try {
            config.ranges.emplace_back(std::stoull(r.substr(0, colon)), std::stoull(r.substr(colon + 1)));
          } catch (const std::logic_error&) {
            throw CLI::ValidationError("--range", "expected LO:HI, got " + r);
          }
        }
      }
      cli::emit_frequency_csv(config, out);
    }

    write_output(g, out.str());
    return status;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tm32::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
