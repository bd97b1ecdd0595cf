#include "sociallearn/rewards.hpp"

#include <fstream>
#include <sstream>

namespace sociallearn {

RewardStream::RewardStream(uint64_t seed, int64_t t_max, bool coupled_binary)
    : gen_(seed), seed_(seed), t_max_(t_max), coupled_binary_(coupled_binary) {}

RewardStream RewardStream::from_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace file: " + path);
  RewardStream s(0, 0);
  s.replay_ = true;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    RewardVector r;
    int bit;
    while (ls >> bit) {
      if (bit != 0 && bit != 1)
        throw std::runtime_error("trace file has a non-binary entry");
      r.push_back(uint8_t(bit));
    }
    if (!r.empty()) s.trace_.push_back(std::move(r));
  }
  s.t_max_ = int64_t(s.trace_.size());
  return s;
}

RewardVector RewardStream::next(const ModelParams& p) {
  if (exhausted()) throw StreamExhausted(t_);
  if (replay_) {
    const RewardVector& r = trace_[size_t(t_)];
    if (int(r.size()) != p.m)
      throw std::runtime_error("trace width does not match m");
    ++t_;
    return r;
  }
  RewardVector r(size_t(p.m), 0);
  if (coupled_binary_) {
    // Word-of-mouth variant: exactly one of the two options is good each
    // step, option 1 with probability eta[0].
    if (p.m != 2)
      throw std::runtime_error("coupled-binary rewards require m=2");
    bool first = uniform01(gen_) < p.eta[0];
    r[0] = first ? 1 : 0;
    r[1] = first ? 0 : 1;
  } else {
    for (int j = 0; j < p.m; ++j) r[size_t(j)] = uniform01(gen_) < p.eta[size_t(j)] ? 1 : 0;
  }
  ++t_;
  return r;
}

void dump_trace(const std::string& path, RewardStream stream,
                const ModelParams& p, int64_t steps) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open trace file for write: " + path);
  for (int64_t t = 0; t < steps; ++t) {
    RewardVector r = stream.next(p);
    for (size_t j = 0; j < r.size(); ++j) {
      if (j) out << ' ';
      out << int(r[j]);
    }
    out << '\n';
  }
}

}  // namespace sociallearn
