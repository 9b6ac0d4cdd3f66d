#pragma once

#include <vector>

#include "rng.hpp"

namespace qmuse::qwalk {

// One throw of the single-qubit quantum die: an H gate, measured once.
// Returns 0 or 1, each with probability 1/2; deterministic per seed.
int quantum_die(rng::Seed seed);

// Nearest-neighbour step over an ordered alphabet: die 0 moves left, die 1
// moves right; the first and last positions always step inward.
int walk1d_step(int current, int alphabet_size, int die);

// Walk of `steps` die throws starting at `start`; the result has steps + 1
// entries and never leaves [0, alphabet_size). Die throw k uses seed
// substream k.
std::vector<int> walk1d_generate(int start, int steps, int alphabet_size,
                                 rng::Seed seed);

}  // namespace qmuse::qwalk
