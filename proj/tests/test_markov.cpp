#include <doctest.h>

#include <array>
#include <cmath>
#include <set>

#include "errors.hpp"
#include "markov/rules.hpp"
#include "rng.hpp"

using namespace qmuse;
using markov::RuleSet;

namespace {

// The full 12x12 successor table: rows in the conventional order
// E D# C# G D F C F# A G# B A#, columns in series order.
constexpr std::array<std::array<int, 12>, 12> kRuleTable = {{
    {0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},  // E  -> F, D#
    {1, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0},  // D# -> E, C#, F#, G#
    {0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0},  // C# -> G, F#, D#
    {0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0},  // G  -> F, C#, D
    {0, 1, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0},  // D  -> F, G, G#, B
    {1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0},  // F  -> E, G, D, C
    {0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0},  // C  -> F, F#, B, A
    {0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 1, 0},  // F# -> C#, D#, C, A
    {0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 1},  // A  -> F#, G#, C, A#
    {0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1, 0},  // G# -> D#, D, B, A
    {0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1},  // B  -> G#, D, C, A#
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0},  // A# -> B, A
}};

std::set<int> successor_set(const RuleSet& rules, const char* name) {
  const int index = rules.alphabet().index_of(name);
  REQUIRE(index >= 0);
  const auto& succ = rules.successors(index);
  return {succ.begin(), succ.end()};
}

std::set<int> named(const RuleSet& rules, std::initializer_list<const char*> names) {
  std::set<int> out;
  for (const char* n : names) out.insert(rules.alphabet().index_of(n));
  return out;
}

const char* kSingleSuccessorRules = R"({
  "rules": {
    "E": ["F"], "F": ["G"], "G": ["C#"], "C#": ["F#"], "F#": ["D#"],
    "D#": ["G#"], "G#": ["D"], "D": ["B"], "B": ["C"], "C": ["A"],
    "A": ["A#"], "A#": ["E"]
  }
})";

}  // namespace

TEST_CASE("default rule set matches the printed rules") {
  const RuleSet rules = RuleSet::twelve_tone_default();
  CHECK(successor_set(rules, "E") == named(rules, {"F", "D#"}));
  CHECK(successor_set(rules, "D#") == named(rules, {"E", "C#", "F#", "G#"}));
  CHECK(successor_set(rules, "A#") == named(rules, {"B", "A"}));
  CHECK(successor_set(rules, "C") == named(rules, {"F", "F#", "B", "A"}));
  for (int i = 0; i < 12; ++i) {
    const std::size_t n = rules.successors(i).size();
    CHECK(n >= 2);
    CHECK(n <= 4);
  }
}

TEST_CASE("target matrix equals the full table entrywise") {
  const auto matrix = markov::to_target_matrix(RuleSet::twelve_tone_default());
  for (int r = 0; r < 12; ++r)
    for (int c = 0; c < 12; ++c) CHECK(matrix.rows[r][c] == kRuleTable[r][c]);

  // second row is the D# rule
  const std::array<int, 12> dsharp = {1, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0};
  CHECK(matrix.rows[1] == dsharp);
  const RuleSet rules = RuleSet::twelve_tone_default();
  CHECK(matrix.row_notes[1] == rules.alphabet().index_of("D#"));
  CHECK(matrix.row_for_note(rules.alphabet().index_of("D#")) == dsharp);
}

TEST_CASE("single-successor rule row is a unit vector") {
  const RuleSet rules = RuleSet::from_json_text(kSingleSuccessorRules);
  const auto matrix = markov::to_target_matrix(rules);
  const auto& row = matrix.row_for_note(0);  // E -> F only
  for (int c = 0; c < 12; ++c) CHECK(row[c] == (c == 1 ? 1 : 0));
}

TEST_CASE("markov rows weight successors equally") {
  const RuleSet rules = RuleSet::twelve_tone_default();
  const auto markov_matrix = markov::to_markov(rules);
  const auto target_matrix = markov::to_target_matrix(rules);

  const auto& dsharp = markov_matrix.row_for_note(rules.alphabet().index_of("D#"));
  for (int c : {0, 3, 4, 6}) CHECK(dsharp[c] == doctest::Approx(0.25).epsilon(1e-12));
  const auto& e_row = markov_matrix.row_for_note(rules.alphabet().index_of("E"));
  CHECK(e_row[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(e_row[5] == doctest::Approx(0.5).epsilon(1e-12));

  // every markov row is the target row divided by its sum, and stochastic
  for (int r = 0; r < 12; ++r) {
    double row_sum = 0.0;
    int ones = 0;
    for (int c = 0; c < 12; ++c) ones += target_matrix.rows[r][c];
    for (int c = 0; c < 12; ++c) {
      CHECK(markov_matrix.rows[r][c] ==
            doctest::Approx(static_cast<double>(target_matrix.rows[r][c]) / ones)
                .epsilon(1e-12));
      row_sum += markov_matrix.rows[r][c];
    }
    CHECK(row_sum == doctest::Approx(1.0).epsilon(1e-12));
  }

  const RuleSet forced = RuleSet::from_json_text(kSingleSuccessorRules);
  CHECK(markov::to_markov(forced).row_for_note(0)[1] == 1.0);
}

TEST_CASE("walk matrix boundaries") {
  const auto m = markov::walk1d_matrix(12);
  CHECK(m.rows[0][1] == 1.0);  // E moves to F with certainty
  CHECK(m.rows[11][10] == 1.0);
  CHECK(m.rows[1][0] == 0.5);
  CHECK(m.rows[1][2] == 0.5);
  for (int r = 0; r < 12; ++r) {
    CHECK(m.rows[r][r] == 0.0);
    double sum = 0.0;
    for (int c = 0; c < 12; ++c) sum += m.rows[r][c];
    CHECK(sum == doctest::Approx(1.0));
  }

  const auto tiny = markov::walk1d_matrix(2);
  CHECK(tiny.rows[0][1] == 1.0);
  CHECK(tiny.rows[1][0] == 1.0);

  CHECK_THROWS_AS(markov::walk1d_matrix(1), std::invalid_argument);
}

TEST_CASE("classical sampling converges to the row") {
  const RuleSet rules = RuleSet::twelve_tone_default();
  const auto matrix = markov::to_markov(rules);
  const int dsharp = rules.alphabet().index_of("D#");

  rng::Xoshiro256 gen(7);
  std::array<int, 12> counts{};
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++counts[markov::classical_sample(matrix, dsharp, gen)];

  const double expected = draws / 4.0;
  const double sigma = std::sqrt(draws * 0.25 * 0.75);
  double chi2 = 0.0;
  for (int c = 0; c < 12; ++c) {
    if (c == 0 || c == 3 || c == 4 || c == 6) {
      CHECK(std::abs(counts[c] - expected) < 3.0 * sigma);
      chi2 += (counts[c] - expected) * (counts[c] - expected) / expected;
    } else {
      CHECK(counts[c] == 0);  // zero-probability columns are never drawn
    }
  }
  CHECK(chi2 < 16.266);  // df=3 at p > 0.001
}

TEST_CASE("classical sampling is deterministic per seed") {
  const auto matrix = markov::to_markov(RuleSet::twelve_tone_default());
  rng::Xoshiro256 a(123), b(123);
  for (int i = 0; i < 200; ++i)
    CHECK(markov::classical_sample(matrix, i % 12, a) ==
          markov::classical_sample(matrix, i % 12, b));

  const auto walk = markov::walk1d_matrix(12);
  rng::Xoshiro256 gen(1);
  for (int i = 0; i < 50; ++i) CHECK(markov::classical_sample(walk, 0, gen) == 1);
}

TEST_CASE("all-zero transition rows are rejected") {
  markov::TransitionMatrix broken;
  broken.rows = {{0.0, 0.0}, {1.0, 0.0}};
  broken.row_notes = {0, 1};
  rng::Xoshiro256 gen(5);
  CHECK_THROWS_AS(markov::classical_sample(broken, 0, gen), std::invalid_argument);
}

TEST_CASE("rules load from JSON") {
  const RuleSet rules = RuleSet::from_json_text(kSingleSuccessorRules);
  CHECK(rules.successors(0) == std::vector<int>{1});
  // custom tables use alphabet row order
  CHECK(markov::to_target_matrix(rules).row_notes[1] == 1);

  // Unicode accidentals are accepted
  const RuleSet unicode_rules = RuleSet::from_json_text(R"({
    "rules": {
      "E": ["F"], "F": ["G"], "G": ["C♯"], "C♯": ["F♯"], "F♯": ["D♯"],
      "D♯": ["G♯"], "G♯": ["D"], "D": ["B"], "B": ["C"], "C": ["A"],
      "A": ["A♯"], "A♯": ["E"]
    }
  })");
  CHECK(unicode_rules.successors(3) == std::vector<int>{4});  // C# -> F#

  // a custom alphabet reorders the indices
  const RuleSet custom = RuleSet::from_json_text(R"({
    "alphabet": ["C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B"],
    "rules": {
      "C": ["C#"], "C#": ["D"], "D": ["D#"], "D#": ["E"], "E": ["F"],
      "F": ["F#"], "F#": ["G"], "G": ["G#"], "G#": ["A"], "A": ["A#"],
      "A#": ["B"], "B": ["C"]
    }
  })");
  CHECK(custom.alphabet().index_of("C") == 0);
  CHECK(custom.successors(0) == std::vector<int>{1});
}

TEST_CASE("malformed rule files are rejected with the offending row") {
  CHECK_THROWS_WITH_AS(
      RuleSet::from_json_text(R"({"rules": {
        "E": [], "F": ["G"], "G": ["C#"], "C#": ["F#"], "F#": ["D#"],
        "D#": ["G#"], "G#": ["D"], "D": ["B"], "B": ["C"], "C": ["A"],
        "A": ["A#"], "A#": ["E"]
      }})"),
      "rule for E must list at least one successor", std::invalid_argument);

  CHECK_THROWS_AS(RuleSet::from_json_text(R"({"rules": {"E": ["F"]}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(RuleSet::from_json_text("not json"), std::invalid_argument);
  CHECK_THROWS_AS(RuleSet::from_file("/nonexistent/rules.json"), IoError);
}
