#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tm32/symbol.hpp"

namespace tm32 {

// Lazily extended infinite word. The grower is called with the current
// buffer and a requested length; it must append until the buffer holds at
// least that many symbols (or throw). Copies share one buffer, so a derived
// stream and its source never recompute the same prefix.
//
// Growth is serialized by an internal mutex: one writer at a time, and
// readers always observe a consistent prefix. Symbols, once produced, never
// change.
class SymbolStream {
 public:
  using Grower = std::function<void(std::vector<Symbol>& buffer, std::size_t want)>;

  SymbolStream(Alphabet alphabet, Grower grow, std::string name = {});

  // Stream from a closed-form index rule.
  static SymbolStream from_index(Alphabet alphabet, std::function<Symbol(std::size_t)> rule,
                                 std::string name = {});

  // Periodic stream period^omega.
  static SymbolStream periodic(Alphabet alphabet, Word period, std::string name = {});

  Symbol at(std::size_t i) const;
  Symbol operator[](std::size_t i) const { return at(i); }

  // Copy of the first n symbols, growing the buffer if needed.
  Word prefix(std::size_t n) const;

  std::size_t materialized() const;
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::string& name() const noexcept { return name_; }

 private:
  struct State {
    std::mutex mu;
    std::vector<Symbol> buffer;
    Grower grow;
  };

  void ensure_locked(State& st, std::size_t n) const;

  Alphabet alphabet_;
  std::string name_;
  std::shared_ptr<State> state_;
};

}  // namespace tm32
