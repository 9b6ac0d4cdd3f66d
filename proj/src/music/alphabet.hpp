#pragma once

#include <array>
#include <string>
#include <string_view>

namespace qmuse::music {

// Accidental glyphs are folded to ASCII: "♯" -> "#", "♭" -> "b".
std::string normalize_note_name(std::string_view name);

// Ordered 12-symbol pitch-class alphabet. Index i doubles as the basis
// state |i⟩ of the four-qubit note register used by the selection engine.
class NoteAlphabet {
 public:
  static constexpr int kSize = 12;

  // The chromatic series starting on E: E F G C# F# D# G# D B C A A#.
  static NoteAlphabet twelve_tone();

  // Labels must be distinct note names (letter plus optional accidental).
  static NoteAlphabet from_labels(const std::array<std::string, 12>& labels);

  const std::string& label(int index) const;

  // Index of a (possibly Unicode or enharmonically spelled) name, or -1.
  int index_of(std::string_view name) const;

  // Semitone 0-11 (C = 0) of the label at `index`.
  int pitch_class(int index) const;

 private:
  NoteAlphabet() = default;
  std::array<std::string, 12> labels_;
  std::array<int, 12> pitch_classes_;
};

}  // namespace qmuse::music
