#include "music/dictionary.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "errors.hpp"

namespace qmuse::music {

namespace {

int vertex_index(const std::string& key) {
  return qmuse::qwalk::CubeVertex::from_string(key).code;
}

// Vertex strings in ascending order: 000, 001, 010, ..., 111.
const std::array<std::string, 8> kOrderedCodes = {"000", "001", "010", "011",
                                                  "100", "101", "110", "111"};

}  // namespace

std::array<Pitch, 8> persian_scale_dict() {
  const std::array<std::string, 8> scale = {"C4",  "Db4", "E4", "F4",
                                            "Gb4", "Ab4", "B4", "C5"};
  std::array<Pitch, 8> map;
  for (std::size_t i = 0; i < 8; ++i)
    map[vertex_index(kOrderedCodes[i])] = parse_pitch(scale[i]);
  return map;
}

std::array<RhythmFigure, 8> rhythm_dict() {
  std::array<RhythmFigure, 8> map;
  map[vertex_index("100")] = {1.0};  // crochet
  map[vertex_index("000")] = {4.0};  // semibreve
  const std::array<double, 6> remaining = {2.0, 3.0, 0.5, 1.5, 0.75, 0.25};
  std::size_t next = 0;
  for (const std::string& code : kOrderedCodes) {
    if (code == "100" || code == "000") continue;
    map[vertex_index(code)] = {remaining[next++]};
  }
  return map;
}

MusicDictionary MusicDictionary::defaults() {
  return MusicDictionary{persian_scale_dict(), rhythm_dict()};
}

MusicDictionary MusicDictionary::from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid dictionary JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("dictionary JSON must be an object");

  MusicDictionary dict = defaults();
  if (doc.contains("pitch")) {
    for (const auto& [key, value] : doc.at("pitch").items()) {
      if (!value.is_string())
        throw std::invalid_argument("dictionary pitch values must be names like \"C4\"");
      dict.pitch_map[vertex_index(key)] = parse_pitch(value.get<std::string>());
    }
  }
  if (doc.contains("rhythm")) {
    for (const auto& [key, value] : doc.at("rhythm").items()) {
      if (!value.is_number())
        throw std::invalid_argument("dictionary rhythm values must be beat counts");
      const double beats = value.get<double>();
      if (!(beats > 0.0))
        throw std::invalid_argument("rhythm duration must be positive for code " + key);
      dict.rhythm_map[vertex_index(key)] = {beats};
    }
  }
  return dict;
}

MusicDictionary MusicDictionary::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open dictionary file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_json_text(text);
}

}  // namespace qmuse::music
