#pragma once

#include <string>
#include <string_view>

namespace qmuse::music {

// A concrete pitch: pitch class plus octave (scientific pitch notation,
// C4 = MIDI 60). The label preserves the spelling it was written with, so
// Db4 renders as "Db4" rather than "C#4".
struct Pitch {
  int pitch_class = 0;  // 0-11, C = 0
  int octave = 4;
  std::string label = "C";

  // 12 * (octave + 1) + pitch_class; throws when outside [0, 127].
  int midi_number() const;

  std::string name() const { return label + std::to_string(octave); }
};

// Parses names such as "C4", "Db4", "A#3", "C-1"; Unicode accidentals are
// accepted.
Pitch parse_pitch(std::string_view text);

Pitch pitch_from_class(int pitch_class, int octave, std::string label);

}  // namespace qmuse::music
