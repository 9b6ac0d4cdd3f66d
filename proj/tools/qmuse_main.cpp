// qmuse command line: the three generators plus the interference demo,
// driven entirely through the public C API.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <qmuse/qmuse.h>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

int exit_code_for(qmuse_status status) {
  switch (status) {
    case QMUSE_OK: return 0;
    case QMUSE_ERROR_ARGUMENT: return kExitUsage;
    case QMUSE_ERROR_IO: return kExitIo;
    default: return kExitInternal;
  }
}

int report(qmuse_status status) {
  if (status != QMUSE_OK) std::cerr << "qmuse: " << qmuse_last_error() << "\n";
  return exit_code_for(status);
}

std::optional<qmuse_format> format_from_name(const std::string& name) {
  if (name == "text") return QMUSE_FORMAT_TEXT;
  if (name == "csv") return QMUSE_FORMAT_CSV;
  if (name == "json") return QMUSE_FORMAT_JSON;
  if (name == "midi") return QMUSE_FORMAT_MIDI;
  return std::nullopt;
}

std::optional<qmuse_format> format_from_extension(const std::string& path) {
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos) return std::nullopt;
  std::string ext = path.substr(dot + 1);
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (ext == "mid" || ext == "midi") return QMUSE_FORMAT_MIDI;
  if (ext == "csv") return QMUSE_FORMAT_CSV;
  if (ext == "json") return QMUSE_FORMAT_JSON;
  if (ext == "txt" || ext == "text") return QMUSE_FORMAT_TEXT;
  return std::nullopt;
}

struct OutputOptions {
  std::vector<std::string> out_paths;
  std::string format_name;  // optional override for extension inference
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--out", opts.out_paths,
                  "Output file; repeatable. The format follows the extension "
                  "(.mid/.midi, .csv, .json, .txt) unless --format is given.");
  cmd->add_option("--format", opts.format_name,
                  "Force an output format: text, csv, json or midi.")
      ->check(CLI::IsMember({"text", "csv", "json", "midi"}));
}

// Writes every --out artifact, then the default format to stdout when no
// --out was given.
int emit(const qmuse_result* result, const OutputOptions& opts,
         qmuse_format stdout_default) {
  std::optional<qmuse_format> forced;
  if (!opts.format_name.empty()) forced = format_from_name(opts.format_name);

  for (const std::string& path : opts.out_paths) {
    qmuse_format format;
    if (forced) {
      format = *forced;
    } else if (const auto inferred = format_from_extension(path)) {
      format = *inferred;
    } else {
      std::cerr << "qmuse: cannot infer a format from '" << path
                << "'; use --format or a known extension\n";
      return kExitUsage;
    }
    const qmuse_status status = qmuse_result_write_file(result, format, path.c_str());
    if (status != QMUSE_OK) return report(status);
  }
  if (!opts.out_paths.empty()) return 0;

  const qmuse_format format = forced.value_or(stdout_default);
  if (format == QMUSE_FORMAT_MIDI) {
    std::cerr << "qmuse: MIDI output needs --out\n";
    return kExitUsage;
  }
  char* data = nullptr;
  size_t size = 0;
  const qmuse_status status = qmuse_result_render(result, format, &data, &size);
  if (status != QMUSE_OK) return report(status);
  std::fwrite(data, 1, size, stdout);
  qmuse_buffer_free(data);
  if (size == 0) std::cerr << "qmuse: warning: empty output\n";
  return 0;
}

using ResultPtr = std::unique_ptr<qmuse_result, decltype(&qmuse_result_destroy)>;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-circuit generative music engines"};
  app.require_subcommand(1);
  // Let --seed/--threads appear after the subcommand as well.
  app.fallthrough();

  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Master seed; every run is a pure function of it.")
      ->envname("QMUSE_SEED");
  int threads = 1;
  app.add_option("--threads", threads, "Shot-sampling worker threads; the output is identical for any value.")
      ->check(CLI::PositiveNumber);

  // walk1d
  auto* walk1d = app.add_subcommand(
      "walk1d", "One-qubit quantum-die random walk over the 12-tone series");
  std::string walk_start;
  int walk_steps = 0;
  double walk_duration = 1.0, walk_tempo = 120.0;
  OutputOptions walk_out;
  walk1d->add_option("--start", walk_start, "Starting note, e.g. C#")->required();
  walk1d->add_option("--steps", walk_steps, "Number of die throws")
      ->required()
      ->check(CLI::NonNegativeNumber);
  walk1d->add_option("--duration", walk_duration, "Note length in beats")
      ->check(CLI::PositiveNumber);
  walk1d->add_option("--tempo", walk_tempo, "Tempo in BPM")->check(CLI::PositiveNumber);
  add_output_flags(walk1d, walk_out);

  // cubewalk
  auto* cubewalk = app.add_subcommand(
      "cubewalk", "Five-qubit walk over pitch and rhythm cubes");
  std::string cube_pitch, cube_rhythm, cube_dict;
  int cube_steps = 0, cube_shots = 40;
  double cube_tempo = 120.0;
  OutputOptions cube_out;
  cubewalk->add_option("--start-pitch", cube_pitch, "Starting pitch code, e.g. 000")
      ->required();
  cubewalk->add_option("--start-rhythm", cube_rhythm, "Starting rhythm code, e.g. 100")
      ->required();
  cubewalk->add_option("--steps", cube_steps, "Walk steps beyond the armed start")
      ->required()
      ->check(CLI::PositiveNumber);
  cubewalk->add_option("--shots", cube_shots, "Shots per majority vote")
      ->check(CLI::PositiveNumber);
  cubewalk->add_option("--dict", cube_dict, "Dictionary JSON overriding the defaults");
  cubewalk->add_option("--tempo", cube_tempo, "Tempo in BPM")->check(CLI::PositiveNumber);
  add_output_flags(cubewalk, cube_out);

  // basak-miranda
  auto* selection = app.add_subcommand(
      "basak-miranda", "Grover-interference Markov-chain note selection");
  std::string sel_start, sel_rules;
  int sel_length = 0, sel_shots = 40;
  double sel_duration = 1.0, sel_tempo = 120.0;
  OutputOptions sel_out;
  selection->add_option("--start", sel_start, "Starting note, e.g. D#")->required();
  selection->add_option("--length", sel_length, "Selection cycles to run")
      ->required()
      ->check(CLI::PositiveNumber);
  selection->add_option("--shots", sel_shots, "Shots per cycle")
      ->check(CLI::PositiveNumber);
  selection->add_option("--rules", sel_rules, "Rules JSON overriding the built-in table");
  selection->add_option("--duration", sel_duration, "Note length in beats")
      ->check(CLI::PositiveNumber);
  selection->add_option("--tempo", sel_tempo, "Tempo in BPM")->check(CLI::PositiveNumber);
  add_output_flags(selection, sel_out);

  // demo-grover
  auto* demo = app.add_subcommand(
      "demo-grover", "Two-qubit interference walkthrough for the |01> target");
  int demo_shots = 40;
  bool demo_json = false;
  OutputOptions demo_out;
  demo->add_option("--shots", demo_shots, "Shots for the sampled histogram")
      ->check(CLI::PositiveNumber);
  demo->add_flag("--json", demo_json, "Print the machine-readable chain");
  add_output_flags(demo, demo_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "qmuse: " << e.what() << "\n";
    return kExitUsage;
  }

  if (walk1d->parsed()) {
    qmuse_walk1d_params params{};
    params.seed = seed;
    params.steps = walk_steps;
    params.start_note = walk_start.c_str();
    params.duration_beats = walk_duration;
    params.tempo_bpm = walk_tempo;
    qmuse_result* raw = nullptr;
    if (const qmuse_status status = qmuse_walk1d_run(&params, &raw); status != QMUSE_OK)
      return report(status);
    ResultPtr result(raw, &qmuse_result_destroy);
    return emit(result.get(), walk_out, QMUSE_FORMAT_TEXT);
  }

  if (cubewalk->parsed()) {
    qmuse_dictionary* dict = nullptr;
    if (!cube_dict.empty()) {
      if (const qmuse_status status = qmuse_dictionary_load_file(cube_dict.c_str(), &dict);
          status != QMUSE_OK)
        return report(status);
    }
    std::unique_ptr<qmuse_dictionary, decltype(&qmuse_dictionary_destroy)> dict_guard(
        dict, &qmuse_dictionary_destroy);

    qmuse_cubewalk_params params{};
    params.seed = seed;
    params.steps = cube_steps;
    params.shots = cube_shots;
    params.threads = threads;
    params.start_pitch = cube_pitch.c_str();
    params.start_rhythm = cube_rhythm.c_str();
    params.dictionary = dict;
    params.tempo_bpm = cube_tempo;
    qmuse_result* raw = nullptr;
    if (const qmuse_status status = qmuse_cubewalk_run(&params, &raw); status != QMUSE_OK)
      return report(status);
    ResultPtr result(raw, &qmuse_result_destroy);
    return emit(result.get(), cube_out, QMUSE_FORMAT_CSV);
  }

  if (selection->parsed()) {
    qmuse_rules* rules = nullptr;
    if (!sel_rules.empty()) {
      if (const qmuse_status status = qmuse_rules_load_file(sel_rules.c_str(), &rules);
          status != QMUSE_OK)
        return report(status);
    }
    std::unique_ptr<qmuse_rules, decltype(&qmuse_rules_destroy)> rules_guard(
        rules, &qmuse_rules_destroy);

    qmuse_basak_miranda_params params{};
    params.seed = seed;
    params.length = sel_length;
    params.shots = sel_shots;
    params.threads = threads;
    params.start_note = sel_start.c_str();
    params.rules = rules;
    params.duration_beats = sel_duration;
    params.tempo_bpm = sel_tempo;
    qmuse_result* raw = nullptr;
    if (const qmuse_status status = qmuse_basak_miranda_run(&params, &raw);
        status != QMUSE_OK)
      return report(status);
    ResultPtr result(raw, &qmuse_result_destroy);
    return emit(result.get(), sel_out, QMUSE_FORMAT_TEXT);
  }

  if (demo->parsed()) {
    qmuse_result* raw = nullptr;
    if (const qmuse_status status = qmuse_grover_demo_run(demo_shots, seed, &raw);
        status != QMUSE_OK)
      return report(status);
    ResultPtr result(raw, &qmuse_result_destroy);
    return emit(result.get(), demo_out,
                demo_json ? QMUSE_FORMAT_JSON : QMUSE_FORMAT_TEXT);
  }

  return kExitUsage;
}
