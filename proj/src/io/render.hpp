#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bm/grover.hpp"
#include "music/alphabet.hpp"
#include "music/dictionary.hpp"
#include "music/score.hpp"
#include "qwalk/cube.hpp"

namespace qmuse::io {

// All pitch classes render in octave 4; the note engines work with pitch
// classes, which carry no octave of their own.
music::Score score_from_notes(const std::vector<int>& notes,
                              const music::NoteAlphabet& alphabet,
                              double duration_beats, double tempo_bpm);

music::Score score_from_trace(const qwalk::WalkTrace& trace,
                              const music::MusicDictionary& dictionary,
                              double tempo_bpm);

std::string walk1d_csv(const std::vector<int>& sequence,
                       const music::NoteAlphabet& alphabet);

std::string walk1d_json(const std::vector<int>& sequence,
                        const music::NoteAlphabet& alphabet, std::uint64_t seed,
                        double duration_beats, double tempo_bpm);

// The two-qubit interference walkthrough plus a sampled histogram.
struct GroverDemo {
  bm::DemoChain chain;
  qsim::Histogram histogram;
  int shots = 40;
  std::uint64_t seed = 0;
};

GroverDemo run_grover_demo(int shots, rng::Seed seed);

std::string demo_text(const GroverDemo& demo);
std::string demo_json(const GroverDemo& demo);
std::string demo_csv(const GroverDemo& demo);

}  // namespace qmuse::io
