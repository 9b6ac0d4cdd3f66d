#pragma once

#include <string>
#include <vector>

#include "bm/grover.hpp"
#include "markov/rules.hpp"

namespace qmuse::bm {

// One selection cycle: the rule row for the current note becomes an oracle,
// the interference circuit amplifies its targets, and the majority vote
// over the shots picks the next note.
struct CycleRecord {
  int cycle = 0;
  int from_note = 0;
  std::vector<int> targets;
  int iterations = 0;
  qsim::Histogram histogram;
  int winner = 0;
  bool fallback_used = false;
};

struct GenerationResult {
  std::vector<int> notes;  // length + 1 entries, starting with the seed note
  std::vector<CycleRecord> cycles;
};

// Selects the successor of `current`. If the vote lands outside the target
// set (possible only for two- and three-target rules at low shot counts),
// the run repeats once with the next seed substream; failing again, the
// most frequent in-target outcome is returned and flagged.
SelectionResult select_next(const markov::RuleSet& rules, int current,
                            const GroverConfig& config);

// Generates length successors starting from `start`; cycle k draws its
// seed from substream k of the configured seed.
GenerationResult generate(const markov::RuleSet& rules, int start, int length,
                          const GroverConfig& config);

// Per-cycle histogram export with four-bit state labels (most significant
// bit first) and percentages; the data behind the selection histograms.
std::string cycles_to_csv(const GenerationResult& result, const markov::RuleSet& rules);
std::string cycles_to_json(const GenerationResult& result, const markov::RuleSet& rules,
                           int shots, std::uint64_t seed);

// "0000".."1111"
std::string state_label(int state, int n_qubits = 4);

}  // namespace qmuse::bm
