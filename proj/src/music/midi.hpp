#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "music/score.hpp"

namespace qmuse::music {

// Standard MIDI file, format 0, one track, 480 ticks per quarter note.
// One note-on (velocity 96, channel 0) and one note-off per note; durations
// are duration_beats * 480 ticks. A set-tempo meta event carries the score
// tempo. The byte stream is fully deterministic.
std::vector<std::uint8_t> write_midi(const Score& score);

// One line per note: "<name><octave> <beats>", e.g. "C4 1". An empty score
// renders as an empty string; callers decide whether to warn.
std::string render_text(const Score& score);

}  // namespace qmuse::music
