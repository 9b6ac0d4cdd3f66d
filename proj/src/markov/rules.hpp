#pragma once

#include <array>
#include <string>
#include <vector>

#include "music/alphabet.hpp"
#include "rng.hpp"

namespace qmuse::markov {

// Allowed-successor table over a 12-symbol alphabet. The built-in table is
// the twelve-tone sequencing rule set; arbitrary tables load from JSON:
//   {"alphabet": [12 names], "rules": {"E": ["F", "D#"], ...}}
// The alphabet field is optional and defaults to the twelve-tone series.
class RuleSet {
 public:
  static RuleSet twelve_tone_default();
  static RuleSet from_json_text(const std::string& text);
  static RuleSet from_file(const std::string& path);

  const music::NoteAlphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<int>& successors(int note) const;

  // Row ordering used when the table is laid out as a matrix. The built-in
  // table keeps the conventional ordering of the printed rule tables (the
  // inverted series); custom tables use alphabet order.
  const std::array<int, 12>& row_notes() const noexcept { return row_notes_; }

 private:
  RuleSet() = default;
  music::NoteAlphabet alphabet_ = music::NoteAlphabet::twelve_tone();
  std::array<std::vector<int>, 12> successors_;
  std::array<int, 12> row_notes_{};
};

// 12x12 binary matrix of allowed successors. Row k describes the note
// row_notes[k]; column c is the note with index c (the basis-state order).
struct TargetMatrix {
  std::array<std::array<int, 12>, 12> rows{};
  std::array<int, 12> row_notes{};

  const std::array<int, 12>& row_for_note(int note) const;
};

// Row-stochastic matrix; same row/column conventions as TargetMatrix but
// with arbitrary size (the 1-D walk matrix is n x n).
struct TransitionMatrix {
  std::vector<std::vector<double>> rows;
  std::vector<int> row_notes;

  std::size_t size() const noexcept { return rows.size(); }
  const std::vector<double>& row_for_note(int note) const;
};

TargetMatrix to_target_matrix(const RuleSet& rules);

// Equal weights over each rule's successors.
TransitionMatrix to_markov(const RuleSet& rules);

// Nearest-neighbour walk matrix: interior rows 0.5/0.5, the first row moves
// to index 1 and the last to index n-2 with probability 1.
TransitionMatrix walk1d_matrix(int n);

// Draws the next symbol from the row for `current`.
int classical_sample(const TransitionMatrix& matrix, int current, rng::Xoshiro256& gen);

}  // namespace qmuse::markov
