#include "io/render.hpp"

#include <cmath>

#include <json.hpp>

#include "bm/selector.hpp"
#include "format.hpp"

namespace qmuse::io {

namespace {

// Display-only cleanup for the walkthrough: amplitudes are products of
// 1/sqrt(2) factors, so 0.5 arrives as 0.5000000000000001 and exact zeros
// as ~1e-16. Rounding to 12 significant digits restores the intended
// values without touching the computation.
double snap(double value) {
  if (std::abs(value) < 1e-12) return 0.0;
  const double scale = std::pow(10.0, 12 - std::ceil(std::log10(std::abs(value))));
  return std::round(value * scale) / scale;
}

std::string amplitude_text(const qsim::Complex& amp) {
  const double re = snap(amp.real()), im = snap(amp.imag());
  if (im == 0.0) return format_number(re);
  return format_number(re) + (im < 0 ? "-" : "+") + format_number(std::abs(im)) + "i";
}

std::string vector_text(const qsim::StateVector& state) {
  std::string out = "[";
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i) out += ", ";
    out += amplitude_text(state.amplitudes()[i]);
  }
  return out + "]";
}

nlohmann::json vector_json(const qsim::StateVector& state) {
  nlohmann::json out = nlohmann::json::array();
  for (const qsim::Complex& amp : state.amplitudes())
    out.push_back({snap(amp.real()), snap(amp.imag())});
  return out;
}

}  // namespace

music::Score score_from_notes(const std::vector<int>& notes,
                              const music::NoteAlphabet& alphabet,
                              double duration_beats, double tempo_bpm) {
  music::Score score;
  score.tempo_bpm = tempo_bpm;
  score.notes.reserve(notes.size());
  for (int note : notes)
    score.notes.push_back({music::pitch_from_class(alphabet.pitch_class(note), 4,
                                                   alphabet.label(note)),
                           duration_beats});
  return score;
}

music::Score score_from_trace(const qwalk::WalkTrace& trace,
                              const music::MusicDictionary& dictionary,
                              double tempo_bpm) {
  music::Score score;
  score.tempo_bpm = tempo_bpm;
  score.notes.reserve(trace.records.size());
  for (const qwalk::StepRecord& record : trace.records)
    score.notes.push_back(
        {dictionary.pitch(record.pitch), dictionary.rhythm(record.rhythm).duration_beats});
  return score;
}

std::string walk1d_csv(const std::vector<int>& sequence,
                       const music::NoteAlphabet& alphabet) {
  std::string out = "step,note_index,note\n";
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += std::to_string(sequence[i]);
    out += ',';
    out += alphabet.label(sequence[i]);
    out += '\n';
  }
  return out;
}

std::string walk1d_json(const std::vector<int>& sequence,
                        const music::NoteAlphabet& alphabet, std::uint64_t seed,
                        double duration_beats, double tempo_bpm) {
  nlohmann::json doc;
  doc["engine"] = "walk1d";
  doc["seed"] = seed;
  doc["steps"] = sequence.empty() ? 0 : sequence.size() - 1;
  nlohmann::json alpha = nlohmann::json::array();
  for (int i = 0; i < music::NoteAlphabet::kSize; ++i) alpha.push_back(alphabet.label(i));
  doc["alphabet"] = std::move(alpha);
  doc["sequence"] = sequence;
  nlohmann::json names = nlohmann::json::array();
  for (int note : sequence) names.push_back(alphabet.label(note));
  doc["notes"] = std::move(names);
  doc["duration_beats"] = duration_beats;
  doc["tempo_bpm"] = tempo_bpm;
  return doc.dump(2) + "\n";
}

GroverDemo run_grover_demo(int shots, rng::Seed seed) {
  GroverDemo demo;
  demo.chain = bm::grover_demo_chain();
  demo.shots = shots;
  demo.seed = seed.master;
  demo.histogram = qsim::sample_histogram(demo.chain.stages.back(), {0, 1},
                                          static_cast<std::uint64_t>(shots), seed);
  return demo;
}

std::string demo_text(const GroverDemo& demo) {
  const auto& stages = demo.chain.stages;
  std::string out;
  out += "Grover interference walkthrough: 2 qubits, target |01>\n";
  out += "phi1 uniform superposition  " + vector_text(stages[0]) +
         "  delta = " + format_number(demo.chain.delta_uniform) + "\n";
  out += "phi2 oracle marks |01>      " + vector_text(stages[1]) +
         "  delta = " + format_number(demo.chain.delta_marked) + "\n";
  out += "phi3 H tensor H             " + vector_text(stages[2]) + "\n";
  out += "phi4 conditional shift      " + vector_text(stages[3]) + "\n";
  out += "phi5 H tensor H             " + vector_text(stages[4]) + "\n";

  out += "exact probabilities:";
  for (std::size_t i = 0; i < demo.chain.final_probabilities.size(); ++i)
    out += " " + bm::state_label(static_cast<int>(i), 2) + " -> " +
           format_number(snap(demo.chain.final_probabilities[i]));
  out += "\n";

  out += "histogram over " + std::to_string(demo.shots) + " shots:";
  for (const auto& [state, count] : demo.histogram.counts)
    out += " " + bm::state_label(static_cast<int>(state), 2) + " -> " +
           std::to_string(count);
  out += "\n";

  const double p01 = snap(demo.chain.final_probabilities[1]);
  out += "final: probability " + format_number(p01) + " for 01\n";
  return out;
}

std::string demo_json(const GroverDemo& demo) {
  nlohmann::json doc;
  doc["engine"] = "demo-grover";
  doc["n_qubits"] = 2;
  doc["target"] = "01";
  doc["seed"] = demo.seed;
  doc["shots"] = demo.shots;
  const char* names[] = {"phi1", "phi2", "phi3", "phi4", "phi5"};
  nlohmann::json chain = nlohmann::json::array();
  for (std::size_t i = 0; i < demo.chain.stages.size(); ++i) {
    nlohmann::json stage;
    stage["label"] = names[i];
    stage["amplitudes"] = vector_json(demo.chain.stages[i]);
    if (i == 0) stage["delta"] = snap(demo.chain.delta_uniform);
    if (i == 1) stage["delta"] = snap(demo.chain.delta_marked);
    chain.push_back(std::move(stage));
  }
  doc["chain"] = std::move(chain);
  nlohmann::json probs = nlohmann::json::object();
  for (std::size_t i = 0; i < demo.chain.final_probabilities.size(); ++i)
    probs[bm::state_label(static_cast<int>(i), 2)] =
        snap(demo.chain.final_probabilities[i]);
  doc["final_probabilities"] = std::move(probs);
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [state, count] : demo.histogram.counts)
    hist[bm::state_label(static_cast<int>(state), 2)] = count;
  doc["histogram"] = std::move(hist);
  return doc.dump(2) + "\n";
}

std::string demo_csv(const GroverDemo& demo) {
  std::string out = "state,count,percent\n";
  for (const auto& [state, count] : demo.histogram.counts) {
    out += bm::state_label(static_cast<int>(state), 2);
    out += ',';
    out += std::to_string(count);
    out += ',';
    out += format_number(100.0 * static_cast<double>(count) /
                         static_cast<double>(demo.histogram.shots));
    out += '\n';
  }
  return out;
}

}  // namespace qmuse::io
