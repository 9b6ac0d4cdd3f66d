#pragma once

#include <vector>

#include "music/pitch.hpp"

namespace qmuse::music {

struct ScoreNote {
  Pitch pitch;
  double duration_beats = 1.0;
};

struct Score {
  std::vector<ScoreNote> notes;
  double tempo_bpm = 120.0;
};

}  // namespace qmuse::music
