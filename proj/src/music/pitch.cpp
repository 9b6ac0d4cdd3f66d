#include "music/pitch.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "music/alphabet.hpp"

namespace qmuse::music {

int Pitch::midi_number() const {
  const int value = 12 * (octave + 1) + pitch_class;
  if (value < 0 || value > 127)
    throw std::invalid_argument("pitch " + name() + " is outside the MIDI range");
  return value;
}

Pitch parse_pitch(std::string_view text) {
  const std::string norm = normalize_note_name(text);
  std::size_t split = 0;
  while (split < norm.size() && (std::isalpha(static_cast<unsigned char>(norm[split])) ||
                                 norm[split] == '#'))
    ++split;
  // 'b' doubles as flat and as the note B; "Bb4" splits after the accidental.
  if (split == 0 || split > 2) throw std::invalid_argument("invalid pitch: '" + std::string(text) + "'");
  const std::string label = norm.substr(0, split);
  const std::string octave_text = norm.substr(split);
  int octave = 0;
  std::size_t consumed = 0;
  try {
    octave = std::stoi(octave_text, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid pitch octave: '" + std::string(text) + "'");
  }
  if (consumed != octave_text.size())
    throw std::invalid_argument("invalid pitch octave: '" + std::string(text) + "'");

  int base;
  switch (label[0]) {
    case 'C': base = 0; break;
    case 'D': base = 2; break;
    case 'E': base = 4; break;
    case 'F': base = 5; break;
    case 'G': base = 7; break;
    case 'A': base = 9; break;
    case 'B': base = 11; break;
    default: throw std::invalid_argument("invalid pitch letter: '" + std::string(text) + "'");
  }
  if (label.size() == 2) {
    if (label[1] == '#')
      base = (base + 1) % 12;
    else if (label[1] == 'b')
      base = (base + 11) % 12;
    else
      throw std::invalid_argument("invalid accidental: '" + std::string(text) + "'");
  } else if (label.size() > 2) {
    throw std::invalid_argument("invalid pitch: '" + std::string(text) + "'");
  }

  Pitch p;
  p.pitch_class = base;
  p.octave = octave;
  p.label = label;
  (void)p.midi_number();  // range check
  return p;
}

Pitch pitch_from_class(int pitch_class, int octave, std::string label) {
  if (pitch_class < 0 || pitch_class > 11)
    throw std::invalid_argument("pitch class must be in [0, 11]");
  Pitch p;
  p.pitch_class = pitch_class;
  p.octave = octave;
  p.label = std::move(label);
  (void)p.midi_number();
  return p;
}

}  // namespace qmuse::music
