#include "qwalk/walk1d.hpp"

#include <stdexcept>

#include "qsim/circuit.hpp"

namespace qmuse::qwalk {

int quantum_die(rng::Seed seed) {
  qsim::Circuit die(1);
  die.h(0).measure_all();
  const qsim::Histogram hist = qsim::run(die, 1, seed);
  return static_cast<int>(hist.counts.begin()->first);
}

int walk1d_step(int current, int alphabet_size, int die) {
  if (alphabet_size < 2) throw std::invalid_argument("alphabet needs at least 2 notes");
  if (current < 0 || current >= alphabet_size)
    throw std::invalid_argument("walk position out of range");
  if (current == 0) return 1;
  if (current == alphabet_size - 1) return alphabet_size - 2;
  return die == 0 ? current - 1 : current + 1;
}

std::vector<int> walk1d_generate(int start, int steps, int alphabet_size,
                                 rng::Seed seed) {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  if (alphabet_size < 2) throw std::invalid_argument("alphabet needs at least 2 notes");
  if (start < 0 || start >= alphabet_size)
    throw std::invalid_argument("walk start out of range");
  std::vector<int> sequence;
  sequence.reserve(static_cast<std::size_t>(steps) + 1);
  sequence.push_back(start);
  int current = start;
  for (int k = 0; k < steps; ++k) {
    // The die is thrown every step, including at the boundaries where the
    // move is forced.
    const int die = quantum_die(seed.substream(static_cast<std::uint64_t>(k)));
    current = walk1d_step(current, alphabet_size, die);
    sequence.push_back(current);
  }
  return sequence;
}

}  // namespace qmuse::qwalk
