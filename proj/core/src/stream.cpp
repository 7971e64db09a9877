#include "tm32/stream.hpp"

#include <algorithm>

#include "tm32/error.hpp"

namespace tm32 {

SymbolStream::SymbolStream(Alphabet alphabet, Grower grow, std::string name)
    : alphabet_(std::move(alphabet)), name_(std::move(name)), state_(std::make_shared<State>()) {
  state_->grow = std::move(grow);
}

SymbolStream SymbolStream::from_index(Alphabet alphabet, std::function<Symbol(std::size_t)> rule,
                                      std::string name) {
  return SymbolStream(
      std::move(alphabet),
      [rule = std::move(rule)](std::vector<Symbol>& buf, std::size_t want) {
        buf.reserve(want);
        for (std::size_t i = buf.size(); i < want; ++i) buf.push_back(rule(i));
      },
      std::move(name));
}

SymbolStream SymbolStream::periodic(Alphabet alphabet, Word period, std::string name) {
  if (period.empty()) throw Error(ErrorKind::InvalidParameter, "empty period");
  return from_index(
      std::move(alphabet), [period = std::move(period)](std::size_t i) { return period[i % period.size()]; },
      std::move(name));
}

void SymbolStream::ensure_locked(State& st, std::size_t n) const {
  if (st.buffer.size() >= n) return;
  // Grow geometrically so symbol-by-symbol access stays amortized linear
  // for derived streams that re-read their source prefix.
  constexpr std::size_t kMinChunk = 1024;
  constexpr std::size_t kMaxChunk = std::size_t{1} << 22;
  const std::size_t size = st.buffer.size();
  const std::size_t target = std::max(n, size + std::clamp(size, kMinChunk, kMaxChunk));
  try {
    st.grow(st.buffer, target);
  } catch (const Error&) {
    if (st.buffer.size() < n) throw;
  }
  if (st.buffer.size() < n) {
    throw Error(ErrorKind::GenerationStalled, "stream '" + name_ + "' stopped at length " +
                                                  std::to_string(st.buffer.size()));
  }
}

Symbol SymbolStream::at(std::size_t i) const {
  std::lock_guard lock(state_->mu);
  ensure_locked(*state_, i + 1);
  return state_->buffer[i];
}

Word SymbolStream::prefix(std::size_t n) const {
  std::lock_guard lock(state_->mu);
  ensure_locked(*state_, n);
  return Word(state_->buffer.begin(), state_->buffer.begin() + static_cast<std::ptrdiff_t>(n));
}

std::size_t SymbolStream::materialized() const {
  std::lock_guard lock(state_->mu);
  return state_->buffer.size();
}

}  // namespace tm32
