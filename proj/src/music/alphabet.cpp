#include "music/alphabet.hpp"

#include <stdexcept>

namespace qmuse::music {

namespace {

// Semitone of a spelled pitch class, or -1 when the text is not a note name.
int parse_pitch_class(std::string_view name) {
  if (name.empty()) return -1;
  int base;
  switch (name[0]) {
    case 'C': base = 0; break;
    case 'D': base = 2; break;
    case 'E': base = 4; break;
    case 'F': base = 5; break;
    case 'G': base = 7; break;
    case 'A': base = 9; break;
    case 'B': base = 11; break;
    default: return -1;
  }
  if (name.size() == 1) return base;
  if (name.size() != 2) return -1;
  if (name[1] == '#') return (base + 1) % 12;
  if (name[1] == 'b') return (base + 11) % 12;
  return -1;
}

}  // namespace

std::string normalize_note_name(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (std::size_t i = 0; i < name.size();) {
    // UTF-8 for ♯ (U+266F) and ♭ (U+266D)
    if (i + 2 < name.size() && static_cast<unsigned char>(name[i]) == 0xE2 &&
        static_cast<unsigned char>(name[i + 1]) == 0x99) {
      const unsigned char third = static_cast<unsigned char>(name[i + 2]);
      if (third == 0xAF) {
        out += '#';
        i += 3;
        continue;
      }
      if (third == 0xAD) {
        out += 'b';
        i += 3;
        continue;
      }
    }
    if (name[i] != ' ') out += name[i];
    ++i;
  }
  return out;
}

NoteAlphabet NoteAlphabet::twelve_tone() {
  return from_labels({"E", "F", "G", "C#", "F#", "D#", "G#", "D", "B", "C", "A", "A#"});
}

NoteAlphabet NoteAlphabet::from_labels(const std::array<std::string, 12>& labels) {
  NoteAlphabet a;
  for (int i = 0; i < kSize; ++i) {
    const std::string norm = normalize_note_name(labels[i]);
    const int pc = parse_pitch_class(norm);
    if (pc < 0)
      throw std::invalid_argument("invalid note name in alphabet: '" + labels[i] + "'");
    a.labels_[i] = norm;
    a.pitch_classes_[i] = pc;
    for (int j = 0; j < i; ++j)
      if (a.labels_[j] == norm)
        throw std::invalid_argument("duplicate note name in alphabet: '" + norm + "'");
  }
  return a;
}

const std::string& NoteAlphabet::label(int index) const {
  if (index < 0 || index >= kSize) throw std::invalid_argument("note index out of range");
  return labels_[index];
}

int NoteAlphabet::index_of(std::string_view name) const {
  const std::string norm = normalize_note_name(name);
  for (int i = 0; i < kSize; ++i)
    if (labels_[i] == norm) return i;
  // Fall back to enharmonic match (Db finds C#, and so on).
  const int pc = parse_pitch_class(norm);
  if (pc >= 0)
    for (int i = 0; i < kSize; ++i)
      if (pitch_classes_[i] == pc) return i;
  return -1;
}

int NoteAlphabet::pitch_class(int index) const {
  if (index < 0 || index >= kSize) throw std::invalid_argument("note index out of range");
  return pitch_classes_[index];
}

}  // namespace qmuse::music
