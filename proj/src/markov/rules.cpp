#include "markov/rules.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "errors.hpp"

namespace qmuse::markov {

namespace {

// Row ordering of the printed rule tables: the inverted series
// E D# C# G D F C F# A G# B A#, expressed as alphabet indices.
constexpr std::array<int, 12> kConventionalRowOrder = {0, 5, 3, 2, 7, 1,
                                                       9, 4, 10, 6, 8, 11};

}  // namespace

RuleSet RuleSet::twelve_tone_default() {
  RuleSet rules;
  rules.alphabet_ = music::NoteAlphabet::twelve_tone();
  rules.row_notes_ = kConventionalRowOrder;
  const auto set = [&](const char* from, std::initializer_list<const char*> to) {
    const int i = rules.alphabet_.index_of(from);
    std::vector<int> succ;
    for (const char* name : to) succ.push_back(rules.alphabet_.index_of(name));
    std::sort(succ.begin(), succ.end());
    rules.successors_[i] = std::move(succ);
  };
  set("E", {"F", "D#"});
  set("D#", {"E", "C#", "F#", "G#"});
  set("C#", {"G", "F#", "D#"});
  set("G", {"F", "C#", "D"});
  set("D", {"F", "G", "G#", "B"});
  set("F", {"E", "G", "D", "C"});
  set("C", {"F", "F#", "B", "A"});
  set("F#", {"C#", "D#", "C", "A"});
  set("A", {"F#", "G#", "C", "A#"});
  set("G#", {"D#", "D", "B", "A"});
  set("B", {"G#", "D", "C", "A#"});
  set("A#", {"B", "A"});
  return rules;
}

RuleSet RuleSet::from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid rules JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rules"))
    throw std::invalid_argument("rules JSON must be an object with a \"rules\" field");

  RuleSet rules;
  if (doc.contains("alphabet")) {
    const auto& alpha = doc.at("alphabet");
    if (!alpha.is_array() || alpha.size() != 12)
      throw std::invalid_argument("alphabet must list exactly 12 note names");
    std::array<std::string, 12> labels;
    for (int i = 0; i < 12; ++i) labels[i] = alpha.at(i).get<std::string>();
    rules.alphabet_ = music::NoteAlphabet::from_labels(labels);
  }
  for (int i = 0; i < 12; ++i) rules.row_notes_[i] = i;

  const auto& table = doc.at("rules");
  if (!table.is_object()) throw std::invalid_argument("\"rules\" must map note names to lists");
  std::array<bool, 12> seen{};
  for (const auto& [name, succ_list] : table.items()) {
    const int from = rules.alphabet_.index_of(name);
    if (from < 0) throw std::invalid_argument("unknown note name in rules: '" + name + "'");
    if (!succ_list.is_array() || succ_list.empty())
      throw std::invalid_argument("rule for " + rules.alphabet_.label(from) +
                                  " must list at least one successor");
    std::vector<int> succ;
    for (const auto& entry : succ_list) {
      const int to = rules.alphabet_.index_of(entry.get<std::string>());
      if (to < 0)
        throw std::invalid_argument("unknown successor in rule for " +
                                    rules.alphabet_.label(from));
      succ.push_back(to);
    }
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    rules.successors_[from] = std::move(succ);
    seen[from] = true;
  }
  for (int i = 0; i < 12; ++i)
    if (!seen[i])
      throw std::invalid_argument("rule for " + rules.alphabet_.label(i) + " is missing");
  return rules;
}

RuleSet RuleSet::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open rules file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_json_text(text);
}

const std::vector<int>& RuleSet::successors(int note) const {
  if (note < 0 || note >= 12) throw std::invalid_argument("note index out of range");
  return successors_[note];
}

const std::array<int, 12>& TargetMatrix::row_for_note(int note) const {
  for (int r = 0; r < 12; ++r)
    if (row_notes[r] == note) return rows[r];
  throw std::invalid_argument("note index out of range");
}

const std::vector<double>& TransitionMatrix::row_for_note(int note) const {
  for (std::size_t r = 0; r < row_notes.size(); ++r)
    if (row_notes[r] == note) return rows[r];
  throw std::invalid_argument("note index out of range");
}

TargetMatrix to_target_matrix(const RuleSet& rules) {
  TargetMatrix m;
  m.row_notes = rules.row_notes();
  for (int r = 0; r < 12; ++r)
    for (int to : rules.successors(m.row_notes[r])) m.rows[r][to] = 1;
  return m;
}

TransitionMatrix to_markov(const RuleSet& rules) {
  TransitionMatrix m;
  m.row_notes.assign(rules.row_notes().begin(), rules.row_notes().end());
  m.rows.assign(12, std::vector<double>(12, 0.0));
  for (int r = 0; r < 12; ++r) {
    const auto& succ = rules.successors(m.row_notes[r]);
    const double weight = 1.0 / static_cast<double>(succ.size());
    for (int to : succ) m.rows[r][to] = weight;
  }
  return m;
}

TransitionMatrix walk1d_matrix(int n) {
  if (n < 2) throw std::invalid_argument("walk matrix needs at least 2 symbols");
  TransitionMatrix m;
  m.row_notes.resize(n);
  for (int i = 0; i < n; ++i) m.row_notes[i] = i;
  m.rows.assign(n, std::vector<double>(n, 0.0));
  m.rows[0][1] = 1.0;
  m.rows[n - 1][n - 2] = 1.0;
  for (int i = 1; i + 1 < n; ++i) {
    m.rows[i][i - 1] = 0.5;
    m.rows[i][i + 1] = 0.5;
  }
  return m;
}

int classical_sample(const TransitionMatrix& matrix, int current, rng::Xoshiro256& gen) {
  const std::vector<double>& row = matrix.row_for_note(current);
  double total = 0.0;
  for (double p : row) total += p;
  if (!(total > 0.0)) throw std::invalid_argument("transition row is all zero");
  double u = gen.next_double() * total;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] <= 0.0) continue;
    u -= row[c];
    if (u < 0.0) return static_cast<int>(c);
  }
  // Rounding pushed u past the last positive entry; return it.
  for (std::size_t c = row.size(); c-- > 0;)
    if (row[c] > 0.0) return static_cast<int>(c);
  throw std::logic_error("unreachable");
}

}  // namespace qmuse::markov
