#include "bm/selector.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "format.hpp"

namespace qmuse::bm {

namespace {

bool contains(const std::vector<int>& values, int v) {
  return std::find(values.begin(), values.end(), v) != values.end();
}

// Most frequent in-target outcome; ties to the smallest index. Falls back
// to the smallest target if none was ever sampled.
int best_in_target(const qsim::Histogram& hist, const std::vector<int>& targets) {
  int best = -1;
  std::uint64_t best_count = 0;
  for (const auto& [key, count] : hist.counts) {
    const int state = static_cast<int>(key);
    if (!contains(targets, state)) continue;
    if (count > best_count) {
      best_count = count;
      best = state;
    }
  }
  if (best >= 0) return best;
  return *std::min_element(targets.begin(), targets.end());
}

}  // namespace

std::string state_label(int state, int n_qubits) {
  std::string out(n_qubits, '0');
  for (int b = 0; b < n_qubits; ++b)
    if (state & (1 << b)) out[n_qubits - 1 - b] = '1';
  return out;
}

SelectionResult select_next(const markov::RuleSet& rules, int current,
                            const GroverConfig& config) {
  const std::vector<int>& targets = rules.successors(current);
  if (targets.empty()) throw std::invalid_argument("current note has no successors");
  const OracleMatrix oracle = oracle_for_targets(targets, 4);

  SelectionResult result = grover_run(oracle, config);
  if (contains(targets, result.winner)) return result;

  GroverConfig retry = config;
  retry.seed = config.seed.substream(1);
  result = grover_run(oracle, retry);
  if (contains(targets, result.winner)) return result;

  result.winner = best_in_target(result.histogram, targets);
  result.fallback_used = true;
  return result;
}

GenerationResult generate(const markov::RuleSet& rules, int start, int length,
                          const GroverConfig& config) {
  if (length < 1) throw std::invalid_argument("length must be >= 1");
  (void)rules.successors(start);  // validates the start index

  GenerationResult out;
  out.notes.reserve(static_cast<std::size_t>(length) + 1);
  out.notes.push_back(start);

  int current = start;
  for (int cycle = 0; cycle < length; ++cycle) {
    GroverConfig cycle_config = config;
    cycle_config.seed = config.seed.substream(static_cast<std::uint64_t>(cycle));
    SelectionResult selection = select_next(rules, current, cycle_config);

    CycleRecord record;
    record.cycle = cycle;
    record.from_note = current;
    record.targets = rules.successors(current);
    record.iterations = selection.iterations_used;
    record.histogram = std::move(selection.histogram);
    record.winner = selection.winner;
    record.fallback_used = selection.fallback_used;

    current = selection.winner;
    out.notes.push_back(current);
    out.cycles.push_back(std::move(record));
  }

  // Post-check: the generated line must obey the rule set.
  for (std::size_t i = 0; i + 1 < out.notes.size(); ++i)
    if (!contains(rules.successors(out.notes[i]), out.notes[i + 1]))
      throw std::runtime_error("generated sequence violates the rule set");
  return out;
}

std::string cycles_to_csv(const GenerationResult& result, const markov::RuleSet& rules) {
  std::string out = "cycle,from,state,note,count,percent,winner\n";
  for (const CycleRecord& record : result.cycles) {
    const double shots = static_cast<double>(record.histogram.shots);
    for (const auto& [state, count] : record.histogram.counts) {
      const int s = static_cast<int>(state);
      out += std::to_string(record.cycle);
      out += ',';
      out += rules.alphabet().label(record.from_note);
      out += ',';
      out += state_label(s);
      out += ',';
      out += s < 12 ? rules.alphabet().label(s) : std::string("-");
      out += ',';
      out += std::to_string(count);
      out += ',';
      out += format_number(100.0 * static_cast<double>(count) / shots);
      out += ',';
      out += s == record.winner ? '1' : '0';
      out += '\n';
    }
  }
  return out;
}

std::string cycles_to_json(const GenerationResult& result, const markov::RuleSet& rules,
                           int shots, std::uint64_t seed) {
  nlohmann::json doc;
  doc["engine"] = "basak-miranda";
  doc["shots"] = shots;
  doc["seed"] = seed;
  nlohmann::json names = nlohmann::json::array();
  for (int note : result.notes) names.push_back(rules.alphabet().label(note));
  doc["sequence"] = std::move(names);

  nlohmann::json cycles = nlohmann::json::array();
  for (const CycleRecord& record : result.cycles) {
    nlohmann::json entry;
    entry["cycle"] = record.cycle;
    entry["from"] = rules.alphabet().label(record.from_note);
    entry["targets"] = record.targets;
    entry["iterations"] = record.iterations;
    entry["winner"] = state_label(record.winner);
    entry["winner_note"] = rules.alphabet().label(record.winner);
    entry["fallback"] = record.fallback_used;
    nlohmann::json hist = nlohmann::json::object();
    nlohmann::json percent = nlohmann::json::object();
    for (const auto& [state, count] : record.histogram.counts) {
      const std::string label = state_label(static_cast<int>(state));
      hist[label] = count;
      percent[label] =
          100.0 * static_cast<double>(count) / static_cast<double>(record.histogram.shots);
    }
    entry["histogram"] = std::move(hist);
    entry["percent"] = std::move(percent);
    cycles.push_back(std::move(entry));
  }
  doc["cycles"] = std::move(cycles);
  return doc.dump(2) + "\n";
}

}  // namespace qmuse::bm
