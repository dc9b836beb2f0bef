#include "holo/sequence.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "holo/errors.hpp"

namespace holo {

struct SequenceStream::State {
  SequenceMode mode = SequenceMode::exact;
  std::mutex mutex;
  std::vector<Rational> exact;
  ExactProducer producer;
  std::vector<hp::BigReal> real_fixed;
  RealProducer real_producer;
  std::map<long, hp::BigReal> real_cache;
};

SequenceStream::SequenceStream() : state_(std::make_shared<State>()) {}

SequenceStream SequenceStream::exact(std::vector<Rational> terms, ExactProducer producer) {
  SequenceStream s;
  for (auto& t : terms) t.canonicalize();
  s.state_->exact = std::move(terms);
  s.state_->producer = std::move(producer);
  return s;
}

SequenceStream SequenceStream::pointwise(std::function<Rational(long)> pointwise) {
  return exact({}, [f = std::move(pointwise)](long n, const std::vector<Rational>&) { return f(n); });
}

SequenceStream SequenceStream::real(RealProducer producer) {
  SequenceStream s;
  s.state_->mode = SequenceMode::real;
  s.state_->real_producer = std::move(producer);
  return s;
}

SequenceStream SequenceStream::real(std::vector<hp::BigReal> terms) {
  SequenceStream s;
  s.state_->mode = SequenceMode::real;
  s.state_->real_fixed = std::move(terms);
  return s;
}

SequenceMode SequenceStream::mode() const { return state_->mode; }

std::size_t SequenceStream::computed() const {
  std::lock_guard<std::mutex> lock(state_->mutex);
  return state_->mode == SequenceMode::exact ? state_->exact.size() : state_->real_fixed.size();
}

bool SequenceStream::extendable() const {
  return state_->mode == SequenceMode::exact ? static_cast<bool>(state_->producer)
                                              : static_cast<bool>(state_->real_producer);
}

Rational SequenceStream::exact_term(long n) const {
  if (state_->mode != SequenceMode::exact) throw std::logic_error("exact term requested from a real stream");
  if (n < 0) throw std::out_of_range("negative index");
  std::lock_guard<std::mutex> lock(state_->mutex);
  auto& v = state_->exact;
  const auto need = static_cast<std::size_t>(n) + 1;
  if (v.size() < need) {
    if (!state_->producer) throw std::out_of_range("index " + std::to_string(n) + " past end of stream");
    v.reserve(need);
    while (v.size() < need) {
      v.push_back(state_->producer(static_cast<long>(v.size()), v));
      v.back().canonicalize();
    }
  }
  return v[static_cast<std::size_t>(n)];
}

std::vector<Rational> SequenceStream::exact_prefix(std::size_t count) const {
  if (count > 0) exact_term(static_cast<long>(count) - 1);
  std::lock_guard<std::mutex> lock(state_->mutex);
  return {state_->exact.begin(), state_->exact.begin() + static_cast<long>(count)};
}

hp::BigReal SequenceStream::real_term(long n, hp::Bits bits) const {
  if (state_->mode == SequenceMode::exact) return hp::BigReal::from(exact_term(n), bits);
  if (n < 0) throw std::out_of_range("negative index");
  std::lock_guard<std::mutex> lock(state_->mutex);
  if (static_cast<std::size_t>(n) < state_->real_fixed.size()) return state_->real_fixed[static_cast<std::size_t>(n)];
  if (!state_->real_producer) throw std::out_of_range("index " + std::to_string(n) + " past end of stream");
  auto it = state_->real_cache.find(n);
  if (it != state_->real_cache.end() && it->second.precision() == bits) return it->second;
  hp::BigReal v = state_->real_producer(n, bits);
  state_->real_cache.insert_or_assign(n, v);
  return v;
}

std::vector<Integer> read_bfile(std::istream& in, long* offset) {
  std::vector<Integer> out;
  std::string line;
  long expected = 0;
  bool first = true;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string idx, val, extra;
    if (!(ls >> idx)) continue;
    if (!(ls >> val) || (ls >> extra))
      throw MalformedInput("b-file line " + std::to_string(lineno) + ": expected \"n value\"");
    long n = 0;
    Integer v;
    try {
      std::size_t pos = 0;
      n = std::stol(idx, &pos);
      if (pos != idx.size()) throw std::invalid_argument(idx);
      if (v.set_str(val, 10) != 0) throw std::invalid_argument(val);
    } catch (const std::exception&) {
      throw MalformedInput("b-file line " + std::to_string(lineno) + ": not an integer pair");
    }
    if (first) {
      expected = n;
      if (offset) *offset = n;
      first = false;
    }
    if (n != expected)
      throw MalformedInput("b-file line " + std::to_string(lineno) + ": index " + std::to_string(n) +
                           " where " + std::to_string(expected) + " was expected");
    ++expected;
    out.push_back(v);
  }
  return out;
}

std::vector<Integer> read_bfile(const std::string& path, long* offset) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  return read_bfile(in, offset);
}

}  // namespace holo
