#pragma once

#include <array>
#include <string>

#include "music/pitch.hpp"
#include "qwalk/cube_vertex.hpp"

namespace qmuse::music {

struct RhythmFigure {
  double duration_beats = 1.0;  // quarter note = 1
};

// Maps cube vertices to pitches and rhythmic figures. Defaults pin vertex
// 000 to C4 and the two text-fixed rhythm codes (100 = crochet, 000 =
// semibreve); every entry can be replaced from a JSON dictionary file:
//   {"pitch": {"000": "C4", ...}, "rhythm": {"000": 4, ...}}
struct MusicDictionary {
  std::array<Pitch, 8> pitch_map;
  std::array<RhythmFigure, 8> rhythm_map;

  static MusicDictionary defaults();
  static MusicDictionary from_file(const std::string& path);
  static MusicDictionary from_json_text(const std::string& text);

  const Pitch& pitch(qwalk::CubeVertex v) const { return pitch_map[v.code]; }
  const RhythmFigure& rhythm(qwalk::CubeVertex v) const { return rhythm_map[v.code]; }
};

// The eight default pitches: the Persian scale on C, assigned to vertex
// strings in ascending order 000..111.
std::array<Pitch, 8> persian_scale_dict();

// Default rhythm map; codes beyond the two fixed ones carry the remaining
// figures (minim, dotted minim, quaver, dotted crochet, dotted quaver,
// semiquaver) in ascending code-string order.
std::array<RhythmFigure, 8> rhythm_dict();

}  // namespace qmuse::music
