#include "qmuse/qmuse.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "bm/selector.hpp"
#include "errors.hpp"
#include "io/render.hpp"
#include "markov/rules.hpp"
#include "music/midi.hpp"
#include "qwalk/walk1d.hpp"

using namespace qmuse;

namespace {
thread_local std::string g_last_error;

void clear_error() { g_last_error.clear(); }

qmuse_status fail(qmuse_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body` and maps exceptions onto status codes.
template <typename Fn>
qmuse_status guarded(Fn&& body) {
  clear_error();
  try {
    return body();
  } catch (const IoError& e) {
    return fail(QMUSE_ERROR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(QMUSE_ERROR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(QMUSE_ERROR_INTERNAL, e.what());
  }
}

std::string alphabet_listing(const music::NoteAlphabet& alphabet) {
  std::string out;
  for (int i = 0; i < music::NoteAlphabet::kSize; ++i) {
    if (i) out += ' ';
    out += alphabet.label(i);
  }
  return out;
}

int require_note(const music::NoteAlphabet& alphabet, const char* name) {
  if (name == nullptr) throw std::invalid_argument("start note is required");
  const int index = alphabet.index_of(name);
  if (index < 0)
    throw std::invalid_argument("unknown note '" + std::string(name) +
                                "'; the alphabet is: " + alphabet_listing(alphabet));
  return index;
}
}  // namespace

struct qmuse_rules {
  markov::RuleSet rules;
};

struct qmuse_dictionary {
  music::MusicDictionary dictionary;
};

struct qmuse_result {
  enum class Engine { kWalk1d, kCubeWalk, kBasakMiranda, kGroverDemo } engine;

  music::Score score;

  // walk1d
  std::vector<int> sequence;
  music::NoteAlphabet alphabet = music::NoteAlphabet::twelve_tone();
  std::uint64_t seed = 0;
  double duration_beats = 1.0;

  // cubewalk
  qwalk::WalkTrace trace;

  // basak-miranda
  bm::GenerationResult generation;
  markov::RuleSet rules = markov::RuleSet::twelve_tone_default();
  int shots = 40;

  // demo
  io::GroverDemo demo;

  std::string render(qmuse_format format) const;
  std::vector<std::uint8_t> render_midi() const;
};

std::vector<std::uint8_t> qmuse_result::render_midi() const {
  if (engine == Engine::kGroverDemo)
    throw std::invalid_argument("the Grover demo has no MIDI rendering");
  return music::write_midi(score);
}

std::string qmuse_result::render(qmuse_format format) const {
  switch (engine) {
    case Engine::kWalk1d:
      switch (format) {
        case QMUSE_FORMAT_TEXT: return music::render_text(score);
        case QMUSE_FORMAT_CSV: return io::walk1d_csv(sequence, alphabet);
        case QMUSE_FORMAT_JSON:
          return io::walk1d_json(sequence, alphabet, seed, duration_beats,
                                 score.tempo_bpm);
        default: break;
      }
      break;
    case Engine::kCubeWalk:
      switch (format) {
        case QMUSE_FORMAT_TEXT: return music::render_text(score);
        case QMUSE_FORMAT_CSV: return qwalk::trace_to_csv(trace);
        case QMUSE_FORMAT_JSON: return qwalk::trace_to_json(trace);
        default: break;
      }
      break;
    case Engine::kBasakMiranda:
      switch (format) {
        case QMUSE_FORMAT_TEXT: {
          std::string out;
          for (int note : generation.notes) {
            out += rules.alphabet().label(note);
            out += '\n';
          }
          return out;
        }
        case QMUSE_FORMAT_CSV: return bm::cycles_to_csv(generation, rules);
        case QMUSE_FORMAT_JSON: return bm::cycles_to_json(generation, rules, shots, seed);
        default: break;
      }
      break;
    case Engine::kGroverDemo:
      switch (format) {
        case QMUSE_FORMAT_TEXT: return io::demo_text(demo);
        case QMUSE_FORMAT_CSV: return io::demo_csv(demo);
        case QMUSE_FORMAT_JSON: return io::demo_json(demo);
        default: break;
      }
      break;
  }
  throw std::invalid_argument("unsupported render format for this result");
}

extern "C" {

const char* qmuse_version(void) { return "0.1.0"; }

const char* qmuse_last_error(void) { return g_last_error.c_str(); }

void qmuse_buffer_free(char* data) { delete[] data; }

qmuse_status qmuse_rules_create_default(qmuse_rules** out) {
  return guarded([&]() -> qmuse_status {
    if (out == nullptr) throw std::invalid_argument("output handle is null");
    *out = new qmuse_rules{markov::RuleSet::twelve_tone_default()};
    return QMUSE_OK;
  });
}

qmuse_status qmuse_rules_load_file(const char* path, qmuse_rules** out) {
  return guarded([&]() -> qmuse_status {
    if (path == nullptr || out == nullptr)
      throw std::invalid_argument("path and output handle are required");
    *out = new qmuse_rules{markov::RuleSet::from_file(path)};
    return QMUSE_OK;
  });
}

void qmuse_rules_destroy(qmuse_rules* rules) { delete rules; }

int qmuse_rules_note_index(const qmuse_rules* rules, const char* name) {
  if (rules == nullptr || name == nullptr) return -1;
  return rules->rules.alphabet().index_of(name);
}

const char* qmuse_rules_note_name(const qmuse_rules* rules, int index) {
  if (rules == nullptr || index < 0 || index >= music::NoteAlphabet::kSize)
    return nullptr;
  return rules->rules.alphabet().label(index).c_str();
}

qmuse_status qmuse_dictionary_create_default(qmuse_dictionary** out) {
  return guarded([&]() -> qmuse_status {
    if (out == nullptr) throw std::invalid_argument("output handle is null");
    *out = new qmuse_dictionary{music::MusicDictionary::defaults()};
    return QMUSE_OK;
  });
}

qmuse_status qmuse_dictionary_load_file(const char* path, qmuse_dictionary** out) {
  return guarded([&]() -> qmuse_status {
    if (path == nullptr || out == nullptr)
      throw std::invalid_argument("path and output handle are required");
    *out = new qmuse_dictionary{music::MusicDictionary::from_file(path)};
    return QMUSE_OK;
  });
}

void qmuse_dictionary_destroy(qmuse_dictionary* dictionary) { delete dictionary; }

qmuse_status qmuse_walk1d_run(const qmuse_walk1d_params* params, qmuse_result** out) {
  return guarded([&]() -> qmuse_status {
    if (params == nullptr || out == nullptr)
      throw std::invalid_argument("params and output handle are required");
    if (params->steps < 0) throw std::invalid_argument("steps must be >= 0");

    auto result = std::make_unique<qmuse_result>();
    result->engine = qmuse_result::Engine::kWalk1d;
    result->alphabet = music::NoteAlphabet::twelve_tone();
    result->seed = params->seed;
    result->duration_beats = params->duration_beats > 0 ? params->duration_beats : 1.0;
    const double tempo = params->tempo_bpm > 0 ? params->tempo_bpm : 120.0;

    const int start = require_note(result->alphabet, params->start_note);
    result->sequence = qwalk::walk1d_generate(start, params->steps,
                                              music::NoteAlphabet::kSize,
                                              rng::Seed{params->seed});
    result->score = io::score_from_notes(result->sequence, result->alphabet,
                                         result->duration_beats, tempo);
    *out = result.release();
    return QMUSE_OK;
  });
}

qmuse_status qmuse_cubewalk_run(const qmuse_cubewalk_params* params,
                                qmuse_result** out) {
  return guarded([&]() -> qmuse_status {
    if (params == nullptr || out == nullptr)
      throw std::invalid_argument("params and output handle are required");
    if (params->start_pitch == nullptr || params->start_rhythm == nullptr)
      throw std::invalid_argument("start pitch and rhythm codes are required");

    qwalk::WalkConfig config;
    config.steps = params->steps;
    config.shots = params->shots > 0 ? params->shots : 40;
    config.threads = params->threads > 0 ? params->threads : 1;
    config.seed = rng::Seed{params->seed};

    auto result = std::make_unique<qmuse_result>();
    result->engine = qmuse_result::Engine::kCubeWalk;
    result->seed = params->seed;
    result->trace = qwalk::cube_generate(
        qwalk::CubeVertex::from_string(params->start_pitch),
        qwalk::CubeVertex::from_string(params->start_rhythm), config);

    const music::MusicDictionary dictionary = params->dictionary
                                                  ? params->dictionary->dictionary
                                                  : music::MusicDictionary::defaults();
    const double tempo = params->tempo_bpm > 0 ? params->tempo_bpm : 120.0;
    result->score = io::score_from_trace(result->trace, dictionary, tempo);
    *out = result.release();
    return QMUSE_OK;
  });
}

qmuse_status qmuse_basak_miranda_run(const qmuse_basak_miranda_params* params,
                                     qmuse_result** out) {
  return guarded([&]() -> qmuse_status {
    if (params == nullptr || out == nullptr)
      throw std::invalid_argument("params and output handle are required");

    auto result = std::make_unique<qmuse_result>();
    result->engine = qmuse_result::Engine::kBasakMiranda;
    result->rules = params->rules ? params->rules->rules
                                  : markov::RuleSet::twelve_tone_default();
    result->seed = params->seed;
    result->shots = params->shots > 0 ? params->shots : 40;
    result->duration_beats = params->duration_beats > 0 ? params->duration_beats : 1.0;
    const double tempo = params->tempo_bpm > 0 ? params->tempo_bpm : 120.0;

    bm::GroverConfig config;
    config.shots = result->shots;
    config.threads = params->threads > 0 ? params->threads : 1;
    config.seed = rng::Seed{params->seed};

    const int start = require_note(result->rules.alphabet(), params->start_note);
    result->generation = bm::generate(result->rules, start, params->length, config);
    result->score = io::score_from_notes(result->generation.notes,
                                         result->rules.alphabet(),
                                         result->duration_beats, tempo);
    *out = result.release();
    return QMUSE_OK;
  });
}

qmuse_status qmuse_grover_demo_run(int shots, uint64_t seed, qmuse_result** out) {
  return guarded([&]() -> qmuse_status {
    if (out == nullptr) throw std::invalid_argument("output handle is null");
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");
    auto result = std::make_unique<qmuse_result>();
    result->engine = qmuse_result::Engine::kGroverDemo;
    result->seed = seed;
    result->shots = shots;
    result->demo = io::run_grover_demo(shots, rng::Seed{seed});
    *out = result.release();
    return QMUSE_OK;
  });
}

size_t qmuse_result_note_count(const qmuse_result* result) {
  if (result == nullptr) return 0;
  return result->score.notes.size();
}

int qmuse_result_midi_note(const qmuse_result* result, size_t index) {
  if (result == nullptr || index >= result->score.notes.size()) return -1;
  try {
    return result->score.notes[index].pitch.midi_number();
  } catch (const std::exception&) {
    return -1;
  }
}

qmuse_status qmuse_result_render(const qmuse_result* result, qmuse_format format,
                                 char** data, size_t* size) {
  return guarded([&]() -> qmuse_status {
    if (result == nullptr || data == nullptr || size == nullptr)
      throw std::invalid_argument("result, data and size are required");
    std::string text;
    if (format == QMUSE_FORMAT_MIDI) {
      const std::vector<std::uint8_t> bytes = result->render_midi();
      text.assign(bytes.begin(), bytes.end());
    } else {
      text = result->render(format);
    }
    char* buffer = new char[text.size() + 1];
    std::memcpy(buffer, text.data(), text.size());
    buffer[text.size()] = '\0';
    *data = buffer;
    *size = text.size();
    return QMUSE_OK;
  });
}

qmuse_status qmuse_result_write_file(const qmuse_result* result, qmuse_format format,
                                     const char* path) {
  return guarded([&]() -> qmuse_status {
    if (result == nullptr || path == nullptr)
      throw std::invalid_argument("result and path are required");
    std::string payload;
    if (format == QMUSE_FORMAT_MIDI) {
      const std::vector<std::uint8_t> bytes = result->render_midi();
      payload.assign(bytes.begin(), bytes.end());
    } else {
      payload = result->render(format);
    }
    std::ofstream outfile(path, std::ios::binary | std::ios::trunc);
    if (!outfile) throw IoError("cannot open output file: " + std::string(path));
    outfile.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!outfile) throw IoError("failed writing output file: " + std::string(path));
    return QMUSE_OK;
  });
}

void qmuse_result_destroy(qmuse_result* result) { delete result; }

}  // extern "C"
