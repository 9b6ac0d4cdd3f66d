#include "qwalk/cube.hpp"

#include <stdexcept>

#include <json.hpp>

namespace qmuse::qwalk {

namespace {

constexpr int kMaxTieRetries = 16;

void arm_inputs(qsim::Circuit& circuit, CubeVertex start) {
  for (int q = 0; q < 3; ++q)
    if (start.code & (1 << q)) circuit.x(q);
}

// The dice-controlled cascade shared by both circuit variants.
void append_walk_cascade(qsim::Circuit& circuit) {
  circuit.cx(4, 0);
  circuit.x(4);
  circuit.cx(4, 1);
  circuit.cx(3, 2);
  circuit.ccx(3, 4, 1);
  circuit.x(4);
  circuit.ccx(3, 4, 0);
  circuit.x(4);
  circuit.ccx(3, 4, 2);
  circuit.measure({0, 1, 2});
}

nlohmann::json histogram_json(const qsim::Histogram& hist) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [key, count] : hist.counts)
    out[CubeVertex::from_code(static_cast<int>(key)).to_string()] = count;
  return out;
}

}  // namespace

qsim::Circuit cube_circuit(CubeVertex start) {
  CubeVertex::from_code(start.code);  // range check
  qsim::Circuit circuit(5);
  arm_inputs(circuit, start);
  circuit.h(3);
  circuit.h(4);
  append_walk_cascade(circuit);
  return circuit;
}

qsim::Circuit cube_circuit_armed_dice(CubeVertex start, int d3, int d4) {
  CubeVertex::from_code(start.code);
  if ((d3 | d4) & ~1) throw std::invalid_argument("dice values must be 0 or 1");
  qsim::Circuit circuit(5);
  arm_inputs(circuit, start);
  if (d3) circuit.x(3);
  if (d4) circuit.x(4);
  append_walk_cascade(circuit);
  return circuit;
}

StepOutcome cube_step_full(CubeVertex current, const WalkConfig& config) {
  if (config.shots < 1) throw std::invalid_argument("shots must be >= 1");
  const qsim::Circuit circuit = cube_circuit(current);
  const qsim::StateVector state = qsim::final_state(circuit);

  qsim::Histogram hist;
  for (int attempt = 0; attempt < kMaxTieRetries; ++attempt) {
    hist = qsim::sample_histogram(state, circuit.measured(),
                                  static_cast<std::uint64_t>(config.shots),
                                  config.seed.substream(attempt), config.threads);
    if (const auto winner = qsim::strict_majority_outcome(hist))
      return StepOutcome{CubeVertex::from_code(static_cast<int>(*winner)),
                         std::move(hist)};
  }
  const auto winner = qsim::majority_outcome(hist);
  return StepOutcome{CubeVertex::from_code(static_cast<int>(winner)), std::move(hist)};
}

CubeVertex cube_step(CubeVertex current, const WalkConfig& config) {
  return cube_step_full(current, config).winner;
}

WalkTrace cube_generate(CubeVertex start_pitch, CubeVertex start_rhythm,
                        const WalkConfig& config) {
  if (config.steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (config.shots < 1) throw std::invalid_argument("shots must be >= 1");

  WalkTrace trace;
  trace.shots = config.shots;
  trace.records.push_back(StepRecord{0, start_pitch, start_rhythm, {}, {}});

  CubeVertex pitch = start_pitch;
  CubeVertex rhythm = start_rhythm;
  for (int step = 1; step <= config.steps; ++step) {
    WalkConfig pitch_cfg = config;
    pitch_cfg.seed = config.seed.substream(2 * static_cast<std::uint64_t>(step - 1));
    WalkConfig rhythm_cfg = config;
    rhythm_cfg.seed = config.seed.substream(2 * static_cast<std::uint64_t>(step - 1) + 1);

    StepOutcome pitch_outcome = cube_step_full(pitch, pitch_cfg);
    StepOutcome rhythm_outcome = cube_step_full(rhythm, rhythm_cfg);
    pitch = pitch_outcome.winner;
    rhythm = rhythm_outcome.winner;

    StepRecord record;
    record.step = step;
    record.pitch = pitch;
    record.rhythm = rhythm;
    record.pitch_histogram = std::move(pitch_outcome.histogram);
    record.rhythm_histogram = std::move(rhythm_outcome.histogram);
    trace.records.push_back(std::move(record));
  }
  return trace;
}

std::string trace_to_csv(const WalkTrace& trace) {
  std::string out = "step,pitch_code,rhythm_code\n";
  for (const StepRecord& record : trace.records) {
    out += std::to_string(record.step);
    out += ',';
    out += record.pitch.to_string();
    out += ',';
    out += record.rhythm.to_string();
    out += '\n';
  }
  return out;
}

std::string trace_to_json(const WalkTrace& trace) {
  nlohmann::json doc;
  doc["engine"] = "cubewalk";
  doc["shots"] = trace.shots;
  doc["bit_order"] =
      "vertex strings list q0 first; quantum-simulator plots usually print "
      "the digits in the reverse order";
  nlohmann::json records = nlohmann::json::array();
  for (const StepRecord& record : trace.records) {
    nlohmann::json entry;
    entry["step"] = record.step;
    entry["pitch"] = record.pitch.to_string();
    entry["rhythm"] = record.rhythm.to_string();
    if (record.pitch_histogram) entry["pitch_histogram"] = histogram_json(*record.pitch_histogram);
    if (record.rhythm_histogram)
      entry["rhythm_histogram"] = histogram_json(*record.rhythm_histogram);
    records.push_back(std::move(entry));
  }
  doc["trace"] = std::move(records);
  return doc.dump(2) + "\n";
}

}  // namespace qmuse::qwalk
