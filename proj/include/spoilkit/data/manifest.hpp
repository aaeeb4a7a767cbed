#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "spoilkit/core/csv.hpp"
#include "spoilkit/core/error.hpp"
#include "spoilkit/core/fs.hpp"

namespace spoilkit {

// The five classification targets carried by every image record: the four
// weighted attributes plus the overall category.
inline constexpr std::array<const char*, 5> kClassificationTargets = {
    "particle_size", "relative_density", "fabric_structure", "plasticity", "bmac_category"};

inline bool is_classification_target(const std::string& name) {
  for (const char* t : kClassificationTargets)
    if (name == t) return true;
  return false;
}

struct AttributeLabels {
  std::array<std::string, 5> values;  // indexed in kClassificationTargets order

  const std::string& of(const std::string& target) const {
    for (std::size_t i = 0; i < kClassificationTargets.size(); ++i)
      if (target == kClassificationTargets[i]) return values[i];
    throw Error(ErrorKind::ConfigError, "unknown classification target '" + target + "'");
  }
};

struct ImageRecord {
  std::string id;
  std::filesystem::path path;  // resolved against the manifest directory
  AttributeLabels labels;
};

// A labelled image manifest plus the label vocabulary declared for each
// target. Vocabularies come from the manifest header, not from code, so
// combined classes ("Cat-2 or 3") and site-specific vocabularies pass
// through unchanged.
struct Manifest {
  std::filesystem::path directory;
  std::map<std::string, std::vector<std::string>> vocabularies;
  std::vector<ImageRecord> records;

  const std::vector<std::string>& vocabulary(const std::string& target) const {
    auto it = vocabularies.find(target);
    if (it == vocabularies.end())
      throw Error(ErrorKind::ConfigError, "no vocabulary declared for target '" + target + "'");
    return it->second;
  }
};

// Manifest format: UTF-8 delimited text. Leading '#' lines declare label
// vocabularies, one per target:
//
//   # vocab particle_size = Cat-1,Cat-2,Cat-2 or 3,Cat-3,Cat-4
//
// followed by one header row and one data row per image:
//
//   id,path,particle_size,relative_density,fabric_structure,plasticity,bmac_category
//
// Image paths are resolved relative to the manifest's directory.
inline Manifest parse_manifest_text(const std::string& text, const std::filesystem::path& directory,
                                    bool check_files = true) {
  Manifest m;
  m.directory = directory;

  const auto lines = split_lines(text);
  std::size_t row = 0;

  for (; row < lines.size(); ++row) {
    const std::string line = strip(lines[row]);
    if (line.empty()) continue;
    if (line[0] != '#') break;
    // "# vocab <target> = v1,v2,..."
    const std::string body = strip(line.substr(1));
    if (body.rfind("vocab ", 0) != 0)
      throw Error(ErrorKind::ConfigError, "unrecognised manifest directive: " + line);
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::ConfigError, "malformed vocab directive: " + line);
    const std::string target = strip(body.substr(6, eq - 6));
    if (!is_classification_target(target))
      throw Error(ErrorKind::ConfigError, "vocab declared for unknown target '" + target + "'");
    std::vector<std::string> vocab;
    for (const auto& v : split_fields(body.substr(eq + 1))) {
      const std::string entry = strip(v);
      if (!entry.empty()) vocab.push_back(entry);
    }
    if (vocab.empty())
      throw Error(ErrorKind::ConfigError, "empty vocabulary for target '" + target + "'");
    std::set<std::string> uniq(vocab.begin(), vocab.end());
    if (uniq.size() != vocab.size())
      throw Error(ErrorKind::ConfigError, "duplicate entry in vocabulary for '" + target + "'");
    m.vocabularies[target] = vocab;
  }

  for (const char* t : kClassificationTargets)
    if (!m.vocabularies.count(t))
      throw Error(ErrorKind::ConfigError, std::string("manifest declares no vocabulary for '") + t + "'");

  if (row >= lines.size())
    throw Error(ErrorKind::ConfigError, "manifest has no header row");
  const auto header = split_fields(strip(lines[row]));
  std::vector<std::string> expected = {"id", "path"};
  for (const char* t : kClassificationTargets) expected.emplace_back(t);
  std::vector<std::string> got;
  for (const auto& h : header) got.push_back(strip(h));
  if (got != expected)
    throw Error(ErrorKind::ConfigError,
                "manifest header must be 'id,path," + join_fields({expected.begin() + 2, expected.end()}) + "'");
  ++row;

  std::set<std::string> seen_ids;
  for (; row < lines.size(); ++row) {
    const std::string line = lines[row];
    if (strip(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != expected.size())
      throw Error(ErrorKind::ConfigError,
                  "row " + std::to_string(row + 1) + " has " + std::to_string(fields.size()) +
                      " fields, expected " + std::to_string(expected.size()));
    ImageRecord rec;
    rec.id = strip(fields[0]);
    if (rec.id.empty())
      throw Error(ErrorKind::ConfigError, "row " + std::to_string(row + 1) + " has empty id");
    if (!seen_ids.insert(rec.id).second)
      throw Error(ErrorKind::DuplicateId, "id '" + rec.id + "' appears more than once");
    rec.path = directory / std::filesystem::path(strip(fields[1]));
    for (std::size_t t = 0; t < kClassificationTargets.size(); ++t) {
      const std::string value = strip(fields[2 + t]);
      const auto& vocab = m.vocabularies[kClassificationTargets[t]];
      if (std::find(vocab.begin(), vocab.end(), value) == vocab.end())
        throw Error(ErrorKind::UnknownLabel, std::string("target '") + kClassificationTargets[t] +
                                                 "' has value '" + value + "' outside its vocabulary (id '" +
                                                 rec.id + "')");
      rec.labels.values[t] = value;
    }
    if (check_files && !std::filesystem::exists(rec.path))
      throw Error(ErrorKind::MissingFile, "image for id '" + rec.id + "' not found: " + rec.path.string());
    m.records.push_back(std::move(rec));
  }
  return m;
}

inline Manifest load_manifest(const std::filesystem::path& path, bool check_files = true) {
  return parse_manifest_text(read_text_file(path), path.parent_path(), check_files);
}

}  // namespace spoilkit
