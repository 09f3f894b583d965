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

#include "wikinames/pipeline.hpp"

#include <fstream>
#include <sstream>

#include <spdlog/spdlog.h>

#include "wikinames/entity_store.hpp"
#include "wikinames/errors.hpp"
#include "wikinames/extract.hpp"
#include "wikinames/ingest.hpp"
#include "wikinames/stats.hpp"
#include "wikinames/toml_lite.hpp"

namespace wikinames {
namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read config: " + path.string());
  return std::move(buf).str();
}

nlohmann::json parse_json_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw DataError("invalid JSON in " + path.string());
  return doc;
}

void check_counts(const PipelineConfig& config) {
  if (config.threads < 1) throw ConfigError("threads must be at least 1");
  if (config.max_prefix < 0) throw ConfigError("max_prefix must not be negative");
}

}  // namespace

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::kIngest: return "ingest";
    case Stage::kClosure: return "closure";
    case Stage::kExtract: return "extract";
    case Stage::kStats: return "stats";
  }
  return "ingest";
}

fs::path write_stage_summary(const fs::path& out_dir, Stage stage,
                             const nlohmann::ordered_json& summary) {
  const fs::path path =
      out_dir / (std::string(to_string(stage)) + "_summary.json");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << summary.dump(2) << '\n';
  if (!out.good()) throw IoError("cannot write " + path.string());
  return path;
}

std::pair<std::vector<NameRecord>, ExtractionSummary> read_extraction_outputs(
    const fs::path& out_dir, const LanguageConfig& languages) {
  std::vector<NameRecord> records;
  for (const LanguageSpec& lang : languages.languages()) {
    const fs::path file = out_dir / (lang.wikimedia_code + ".tsv");
    if (!fs::exists(file)) {
      throw ConfigError("missing name list " + file.string() +
                        "; run extract with this language configured");
    }
    std::vector<NameRecord> part = read_name_list(file, lang.wikimedia_code);
    records.insert(records.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
  }
  ExtractionSummary summary = ExtractionSummary::from_json(
      parse_json_file(out_dir / "extract_summary.json"));
  return {std::move(records), std::move(summary)};
}

PipelineConfig PipelineConfig::from_toml(std::string_view text) {
  const toml_lite::Document doc = toml_lite::parse(text);
  const toml_lite::Table& root = doc.root;

  PipelineConfig config;
  config.store_dir = toml_lite::get_string(root, "store");
  config.out_dir = toml_lite::get_string(root, "out");
  config.dump_path = toml_lite::get_string_or(root, "dump", "");
  const std::string langs = toml_lite::get_string_or(root, "languages", "");
  if (!langs.empty()) config.language_config_path = langs;

  if (root.count("roots") > 0) {
    const auto& roots = toml_lite::get_string_array(root, "roots");
    std::string csv;
    for (const auto& r : roots) {
      if (!csv.empty()) csv += ',';
      csv += r;
    }
    config.roots = RootConfig::from_flag(csv);
  }
  config.threads =
      static_cast<int>(toml_lite::get_int_or(root, "threads", 1));
  config.compression =
      parse_compression(toml_lite::get_string_or(root, "compression", "auto"));
  config.max_prefix =
      static_cast<int>(toml_lite::get_int_or(root, "max_prefix", 3));
  config.include_aliases =
      toml_lite::get_bool_or(root, "include_aliases", false);
  check_counts(config);
  return config;
}

PipelineConfig PipelineConfig::load(const fs::path& path) {
  try {
    return from_toml(read_file(path));
  } catch (const ConfigError& err) {
    throw ConfigError(path.string() + ": " + err.what());
  }
}

std::string PipelineConfig::to_toml() const {
  toml_lite::Document doc;
  doc.root["store"] = store_dir.string();
  doc.root["out"] = out_dir.string();
  if (!dump_path.empty()) doc.root["dump"] = dump_path.string();
  if (language_config_path) {
    doc.root["languages"] = language_config_path->string();
  }
  doc.root["roots"] = roots.roots();
  doc.root["threads"] = static_cast<std::int64_t>(threads);
  doc.root["compression"] = std::string(to_string(compression));
  doc.root["max_prefix"] = static_cast<std::int64_t>(max_prefix);
  doc.root["include_aliases"] = include_aliases;
  return toml_lite::serialize(doc);
}

LanguageConfig PipelineConfig::load_languages() const {
  if (language_config_path) return LanguageConfig::load(*language_config_path);
  return LanguageConfig::defaults();
}

void validate_pipeline(const PipelineConfig& config,
                       const std::set<Stage>& stages) {
  if (stages.empty()) throw ConfigError("no stages requested");
  check_counts(config);
  if (config.store_dir.empty()) throw ConfigError("store directory not set");
  if (config.out_dir.empty()) throw ConfigError("output directory not set");

  if (config.language_config_path && !fs::exists(*config.language_config_path)) {
    throw ConfigError("language config not found: " +
                      config.language_config_path->string());
  }

  const bool want_ingest = stages.count(Stage::kIngest) > 0;
  const bool want_closure = stages.count(Stage::kClosure) > 0;
  const bool want_extract = stages.count(Stage::kExtract) > 0;
  const bool want_stats = stages.count(Stage::kStats) > 0;

  if (want_ingest) {
    if (config.dump_path.empty()) throw ConfigError("ingest requires a dump path");
    if (!fs::exists(config.dump_path)) {
      throw IoError("dump not found: " + config.dump_path.string());
    }
  }
  const bool store_materializes = want_ingest || EntityStore::exists(config.store_dir);
  if ((want_closure || want_extract) && !store_materializes) {
    throw ConfigError("store not found in " + config.store_dir.string() +
                      "; run ingest first");
  }
  if (want_extract && !want_closure) {
    // The closure has to be on disk already; no stage in this run makes one.
    const bool closure_present =
        EntityStore::exists(config.store_dir) &&
        EntityStore(config.store_dir, EntityStore::OpenMode::kReadOnly)
            .has_closure();
    if (!closure_present) {
      throw ConfigError("no subclass closure in " + config.store_dir.string() +
                        "; run closure first");
    }
  }
  if (want_stats && !want_extract &&
      !fs::exists(config.out_dir / "extract_summary.json")) {
    throw ConfigError("no extraction outputs in " + config.out_dir.string() +
                      "; run extract first");
  }
}

std::vector<StageOutcome> run_pipeline(const PipelineConfig& config,
                                       const std::set<Stage>& stages) {
  validate_pipeline(config, stages);
  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + config.out_dir.string() +
                  ": " + ec.message());
  }

  LanguageConfig languages;
  if (stages.count(Stage::kExtract) > 0 || stages.count(Stage::kStats) > 0) {
    languages = config.load_languages();
  }

  std::vector<StageOutcome> outcomes;
  for (const Stage stage :
       {Stage::kIngest, Stage::kClosure, Stage::kExtract, Stage::kStats}) {
    if (stages.count(stage) == 0) continue;
    spdlog::info("stage {} started", to_string(stage));
    nlohmann::ordered_json summary;
    switch (stage) {
      case Stage::kIngest: {
        EntityStore store(config.store_dir, EntityStore::OpenMode::kReadWrite);
        DumpReader reader = DumpReader::open(config.dump_path, config.compression);
        IngestOptions options;
        options.threads = config.threads;
        summary = ingest(reader, store, options).to_json(false);
        break;
      }
      case Stage::kClosure: {
        EntityStore store(config.store_dir, EntityStore::OpenMode::kReadWrite);
        const SubclassGraph graph = SubclassGraph::from_store(store);
        const ClosureTable table = compute_closure(graph, config.roots.roots());
        table.save(store);
        summary = table.summary_json();
        summary["graph"] = {{"nodes", graph.node_count()},
                            {"edges", graph.edge_count()}};
        break;
      }
      case Stage::kExtract: {
        EntityStore store(config.store_dir, EntityStore::OpenMode::kReadOnly);
        const ClosureTable table = ClosureTable::load(store);
        ExtractOptions options;
        options.include_aliases = config.include_aliases;
        const ExtractionResult result =
            extract(store, table, config.roots, languages, options);
        write_name_lists(result, languages, config.out_dir);
        summary = result.summary.to_json();
        break;
      }
      case Stage::kStats: {
        const auto [records, extract_summary] =
            read_extraction_outputs(config.out_dir, languages);
        const StatsReport report =
            compute_stats(records, extract_summary, languages);
        report.write_tsv(config.out_dir);
        report.write_json(config.out_dir);
        summary = report.to_json();
        break;
      }
    }
    write_stage_summary(config.out_dir, stage, summary);
    spdlog::info("stage {} finished", to_string(stage));
    outcomes.push_back({stage, std::move(summary)});
  }
  return outcomes;
}

}  // namespace wikinames
