// Copyright 2026 The Wikinames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WIKINAMES_PIPELINE_HPP_
#define WIKINAMES_PIPELINE_HPP_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "wikinames/closure.hpp"
#include "wikinames/dump_reader.hpp"
#include "wikinames/extract.hpp"
#include "wikinames/language_config.hpp"

namespace wikinames {

enum class Stage { kIngest, kClosure, kExtract, kStats };

std::string_view to_string(Stage stage);

inline const std::set<Stage> kAllStages = {Stage::kIngest, Stage::kClosure,
                                           Stage::kExtract, Stage::kStats};

struct PipelineConfig {
  std::filesystem::path store_dir;
  std::filesystem::path dump_path;
  std::filesystem::path out_dir;
  std::optional<std::filesystem::path> language_config_path;
  RootConfig roots;
  int threads = 1;
  Compression compression = Compression::kAuto;
  int max_prefix = 3;  // coverage prefix heuristic knob
  bool include_aliases = false;

  static PipelineConfig from_toml(std::string_view text);
  static PipelineConfig load(const std::filesystem::path& path);
  std::string to_toml() const;

  // The configured language set (file if given, built-in defaults else).
  LanguageConfig load_languages() const;

  bool operator==(const PipelineConfig&) const = default;
};

struct StageOutcome {
  Stage stage;
  nlohmann::ordered_json summary;
};

// Checks that every requested stage will find its inputs, counting on
// earlier requested stages to produce theirs. Throws before any stage has
// run: ConfigError for missing prerequisite artifacts, IoError for a
// missing dump file.
void validate_pipeline(const PipelineConfig& config,
                       const std::set<Stage>& stages);

// Runs the requested stages in dependency order. Each stage writes
// `<stage>_summary.json` (duration-free, so reruns are byte-identical)
// into the output directory and its outcome is returned.
std::vector<StageOutcome> run_pipeline(const PipelineConfig& config,
                                       const std::set<Stage>& stages);

// Writes `<stage>_summary.json` into `out_dir`; returns the path.
std::filesystem::path write_stage_summary(const std::filesystem::path& out_dir,
                                          Stage stage,
                                          const nlohmann::ordered_json& summary);

// Reads a finished extraction back from disk: every configured language's
// `<code>.tsv` plus `extract_summary.json`. Throws ConfigError when a
// configured language has no name list in `out_dir`.
std::pair<std::vector<NameRecord>, ExtractionSummary> read_extraction_outputs(
    const std::filesystem::path& out_dir, const LanguageConfig& languages);

}  // namespace wikinames

#endif  // WIKINAMES_PIPELINE_HPP_
