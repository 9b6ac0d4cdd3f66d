#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsim/circuit.hpp"
#include "qwalk/cube_vertex.hpp"
#include "rng.hpp"

namespace qmuse::qwalk {

struct WalkConfig {
  int steps = 1;
  int shots = 40;
  rng::Seed seed;
  int threads = 1;
};

// The five-qubit walk circuit: q0-q2 carry the current vertex (armed with X
// gates), q3/q4 are dice put into superposition by H gates, and a cascade of
// dice-controlled NOTs leaves the vertex register in one of four branches:
//   (q3=0, q4=1) flips q0      (q3=0, q4=0) flips q1
//   (q3=1, q4=1) flips q2      (q3=1, q4=0) leaves it unchanged
// Each branch carries probability 1/4. Only q0-q2 are measured.
qsim::Circuit cube_circuit(CubeVertex start);

// Same cascade with the dice armed to fixed values instead of H gates; the
// output is then deterministic. Used to check individual branches.
qsim::Circuit cube_circuit_armed_dice(CubeVertex start, int d3, int d4);

struct StepRecord {
  int step = 0;
  CubeVertex pitch;
  CubeVertex rhythm;
  // Absent on step 0, which records the armed start.
  std::optional<qsim::Histogram> pitch_histogram;
  std::optional<qsim::Histogram> rhythm_histogram;
};

struct WalkTrace {
  std::vector<StepRecord> records;
  int shots = 0;
};

struct StepOutcome {
  CubeVertex winner;
  qsim::Histogram histogram;  // the vote that decided the winner
};

// Majority vote over `shots` runs of the walk circuit. A tied vote re-runs
// the step with the next seed substream so the winner distribution stays
// uniform over the four branches; after 16 consecutive ties (probability on
// the order of 1e-13) the smallest vertex code wins.
StepOutcome cube_step_full(CubeVertex current, const WalkConfig& config);
CubeVertex cube_step(CubeVertex current, const WalkConfig& config);

// Walks the pitch cube and the rhythm cube in parallel: each step runs the
// circuit once per cube and the winners re-arm the next step. The trace has
// steps + 1 records; record 0 is the armed start.
WalkTrace cube_generate(CubeVertex start_pitch, CubeVertex start_rhythm,
                        const WalkConfig& config);

// CSV trace, header "step,pitch_code,rhythm_code".
std::string trace_to_csv(const WalkTrace& trace);

// JSON trace including per-step histograms keyed by vertex string.
std::string trace_to_json(const WalkTrace& trace);

}  // namespace qmuse::qwalk
