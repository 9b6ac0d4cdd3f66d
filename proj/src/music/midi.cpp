#include "music/midi.hpp"

#include <cmath>
#include <stdexcept>

#include "format.hpp"

namespace qmuse::music {

namespace {

constexpr int kTicksPerQuarter = 480;
constexpr std::uint8_t kVelocity = 96;

void append_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

void append_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

void append_vlq(std::vector<std::uint8_t>& out, std::uint32_t value) {
  std::uint8_t bytes[5];
  int n = 0;
  do {
    bytes[n++] = static_cast<std::uint8_t>(value & 0x7f);
    value >>= 7;
  } while (value != 0);
  for (int i = n - 1; i > 0; --i) out.push_back(bytes[i] | 0x80);
  out.push_back(bytes[0]);
}

}  // namespace

std::vector<std::uint8_t> write_midi(const Score& score) {
  if (score.notes.empty()) throw std::invalid_argument("cannot write an empty score");
  if (!(score.tempo_bpm > 0.0)) throw std::invalid_argument("tempo must be positive");

  std::vector<std::uint8_t> track;

  // set tempo (microseconds per quarter note)
  const auto usec_per_quarter =
      static_cast<std::uint32_t>(std::llround(60000000.0 / score.tempo_bpm));
  append_vlq(track, 0);
  track.push_back(0xff);
  track.push_back(0x51);
  track.push_back(0x03);
  track.push_back(static_cast<std::uint8_t>((usec_per_quarter >> 16) & 0xff));
  track.push_back(static_cast<std::uint8_t>((usec_per_quarter >> 8) & 0xff));
  track.push_back(static_cast<std::uint8_t>(usec_per_quarter & 0xff));

  for (const ScoreNote& note : score.notes) {
    const int key = note.pitch.midi_number();
    if (!(note.duration_beats > 0.0))
      throw std::invalid_argument("note duration must be positive");
    const auto ticks =
        static_cast<std::uint32_t>(std::llround(note.duration_beats * kTicksPerQuarter));
    append_vlq(track, 0);
    track.push_back(0x90);  // note on, channel 0
    track.push_back(static_cast<std::uint8_t>(key));
    track.push_back(kVelocity);
    append_vlq(track, ticks);
    track.push_back(0x80);  // note off, channel 0
    track.push_back(static_cast<std::uint8_t>(key));
    track.push_back(0x00);
  }

  // end of track
  append_vlq(track, 0);
  track.push_back(0xff);
  track.push_back(0x2f);
  track.push_back(0x00);

  std::vector<std::uint8_t> out;
  out.reserve(14 + 8 + track.size());
  out.insert(out.end(), {'M', 'T', 'h', 'd'});
  append_u32(out, 6);
  append_u16(out, 0);  // format 0
  append_u16(out, 1);  // one track
  append_u16(out, kTicksPerQuarter);
  out.insert(out.end(), {'M', 'T', 'r', 'k'});
  append_u32(out, static_cast<std::uint32_t>(track.size()));
  out.insert(out.end(), track.begin(), track.end());
  return out;
}

std::string render_text(const Score& score) {
  std::string out;
  for (const ScoreNote& note : score.notes) {
    out += note.pitch.name();
    out += ' ';
    out += format_number(note.duration_beats);
    out += '\n';
  }
  return out;
}

}  // namespace qmuse::music
