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

// Command-line entry point. Summaries go to stdout as JSON; logs go to
// stderr. Exit codes: 0 success, 1 usage/config error, 2 data error,
// 3 I/O error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "wikinames/conll.hpp"
#include "wikinames/coverage.hpp"
#include "wikinames/dump_reader.hpp"
#include "wikinames/entity_store.hpp"
#include "wikinames/errors.hpp"
#include "wikinames/extract.hpp"
#include "wikinames/ingest.hpp"
#include "wikinames/pipeline.hpp"
#include "wikinames/stats.hpp"

namespace {

using namespace wikinames;

void apply_log_level(const std::string& name) {
  spdlog::set_level(
      spdlog::level::from_str(name == "warn" ? "warning" : name));
}

void require_set(const std::filesystem::path& value, const char* flag) {
  if (value.empty()) {
    throw ConfigError(std::string("missing required ") + flag +
                      " (give the flag or set it in --config)");
  }
}

void print_json(const nlohmann::ordered_json& doc) {
  std::cout << doc.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_default_logger(spdlog::stderr_color_mt("wikinames"));

  CLI::App app{"Build per-language PER/LOC/ORG name lists from a raw "
               "Wikidata entity dump"};
  app.require_subcommand(1);

  std::string store_dir;
  std::string config_path;
  std::string log_level = "info";
  int threads = 1;
  app.add_option("--store", store_dir, "Entity store directory")
      ->group("Global");
  app.add_option("--config", config_path, "Pipeline config file")
      ->group("Global");
  app.add_option("--threads", threads, "Ingest worker threads")
      ->check(CLI::PositiveNumber)
      ->group("Global");
  app.add_option("--log-level", log_level, "Log verbosity")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "warning",
                             "error", "critical", "off"}))
      ->group("Global");

  // Effective settings: config file values first, then explicit flags.
  auto base_config = [&]() {
    PipelineConfig config;
    if (!config_path.empty()) config = PipelineConfig::load(config_path);
    if (app.count("--store") > 0) config.store_dir = store_dir;
    if (app.count("--threads") > 0) config.threads = threads;
    return config;
  };

  // --- ingest ---------------------------------------------------------
  auto* ingest_cmd =
      app.add_subcommand("ingest", "Stream a dump into the entity store");
  ingest_cmd->fallthrough();
  std::string ingest_dump;
  std::string ingest_compression;
  ingest_cmd->add_option("--dump", ingest_dump, "Dump file to read");
  ingest_cmd->add_option("--compression", ingest_compression, "Dump encoding")
      ->check(CLI::IsMember({"auto", "none", "bz2-style"}));
  ingest_cmd->callback([&] {
    apply_log_level(log_level);
    PipelineConfig config = base_config();
    if (ingest_cmd->count("--dump") > 0) config.dump_path = ingest_dump;
    if (ingest_cmd->count("--compression") > 0) {
      config.compression = parse_compression(ingest_compression);
    }
    require_set(config.store_dir, "--store");
    require_set(config.dump_path, "--dump");
    EntityStore store(config.store_dir, EntityStore::OpenMode::kReadWrite);
    DumpReader reader = DumpReader::open(config.dump_path, config.compression);
    IngestOptions options;
    options.threads = config.threads;
    const IngestSummary summary = ingest(reader, store, options);
    print_json(summary.to_json(/*include_duration=*/true));
  });

  // --- closure --------------------------------------------------------
  auto* closure_cmd = app.add_subcommand(
      "closure", "Compute and persist the subclass closure of the roots");
  closure_cmd->fallthrough();
  std::string closure_roots;
  closure_cmd->add_option("--roots", closure_roots,
                          "Root qids as PER,LOC,ORG (default Q5,Q82794,Q43229)");
  closure_cmd->callback([&] {
    apply_log_level(log_level);
    PipelineConfig config = base_config();
    if (closure_cmd->count("--roots") > 0) {
      config.roots = RootConfig::from_flag(closure_roots);
    }
    require_set(config.store_dir, "--store");
    if (!EntityStore::exists(config.store_dir)) {
      throw ConfigError("store not found in " + config.store_dir.string() +
                        "; run ingest first");
    }
    EntityStore store(config.store_dir, EntityStore::OpenMode::kReadWrite);
    const SubclassGraph graph = SubclassGraph::from_store(store);
    const ClosureTable table = compute_closure(graph, config.roots.roots());
    table.save(store);
    nlohmann::ordered_json summary = table.summary_json();
    summary["graph"] = {{"nodes", graph.node_count()},
                        {"edges", graph.edge_count()}};
    print_json(summary);
  });

  // --- extract --------------------------------------------------------
  auto* extract_cmd = app.add_subcommand(
      "extract", "Classify entities and write per-language name lists");
  extract_cmd->fallthrough();
  std::string extract_languages;
  std::string extract_out;
  bool extract_aliases = false;
  extract_cmd->add_option("--languages", extract_languages,
                          "Language config file (defaults built in)");
  extract_cmd->add_option("--out", extract_out, "Output directory");
  extract_cmd->add_flag("--include-aliases", extract_aliases,
                        "Also write <code>.aliases.tsv files");
  extract_cmd->callback([&] {
    apply_log_level(log_level);
    PipelineConfig config = base_config();
    if (extract_cmd->count("--languages") > 0) {
      config.language_config_path = extract_languages;
    }
    if (extract_cmd->count("--out") > 0) config.out_dir = extract_out;
    if (extract_aliases) config.include_aliases = true;
    require_set(config.store_dir, "--store");
    require_set(config.out_dir, "--out");
    if (!EntityStore::exists(config.store_dir)) {
      throw ConfigError("store not found in " + config.store_dir.string() +
                        "; run ingest first");
    }
    const LanguageConfig languages = config.load_languages();
    EntityStore store(config.store_dir, EntityStore::OpenMode::kReadOnly);
    const ClosureTable closure = ClosureTable::load(store);
    ExtractOptions options;
    options.include_aliases = config.include_aliases;
    const ExtractionResult result =
        extract(store, closure, config.roots, languages, options);
    std::filesystem::create_directories(config.out_dir);
    write_name_lists(result, languages, config.out_dir);
    const nlohmann::ordered_json summary = result.summary.to_json();
    write_stage_summary(config.out_dir, Stage::kExtract, summary);
    print_json(summary);
  });

  // --- stats ----------------------------------------------------------
  auto* stats_cmd = app.add_subcommand(
      "stats", "Aggregate name-list statistics from an extraction");
  stats_cmd->fallthrough();
  std::string stats_out;
  std::string stats_format = "tsv";
  std::string stats_languages;
  stats_cmd->add_option("--out", stats_out,
                        "Directory with extraction outputs");
  stats_cmd->add_option("--format", stats_format, "Report format")
      ->check(CLI::IsMember({"tsv", "json"}));
  stats_cmd->add_option("--languages", stats_languages,
                        "Language config file (defaults built in)");
  stats_cmd->callback([&] {
    apply_log_level(log_level);
    PipelineConfig config = base_config();
    if (stats_cmd->count("--out") > 0) config.out_dir = stats_out;
    if (stats_cmd->count("--languages") > 0) {
      config.language_config_path = stats_languages;
    }
    require_set(config.out_dir, "--out");
    const LanguageConfig languages = config.load_languages();
    const auto [records, extract_summary] =
        read_extraction_outputs(config.out_dir, languages);
    const StatsReport report =
        compute_stats(records, extract_summary, languages);
    if (stats_format == "json") {
      report.write_json(config.out_dir);
    } else {
      report.write_tsv(config.out_dir);
    }
    print_json(report.to_json());
  });

  // --- coverage -------------------------------------------------------
  auto* coverage_cmd = app.add_subcommand(
      "coverage", "Score a CoNLL file's mentions against a name list");
  coverage_cmd->fallthrough();
  std::string coverage_conll;
  std::string coverage_language;
  std::string coverage_out;
  int coverage_max_prefix = -1;
  bool coverage_unique = false;
  coverage_cmd->add_option("--conll", coverage_conll, "CoNLL file to score");
  coverage_cmd->add_option("--language", coverage_language,
                           "Wikimedia code of the name list");
  coverage_cmd->add_option("--out", coverage_out,
                           "Directory with extraction outputs");
  coverage_cmd->add_option("--max-prefix", coverage_max_prefix,
                           "Longest prefix to strip when matching (default 3)");
  coverage_cmd->add_flag("--unique", coverage_unique,
                         "Count distinct (text, type) mentions once");
  coverage_cmd->callback([&] {
    apply_log_level(log_level);
    PipelineConfig config = base_config();
    if (coverage_cmd->count("--out") > 0) config.out_dir = coverage_out;
    if (coverage_cmd->count("--max-prefix") > 0) {
      config.max_prefix = coverage_max_prefix;
    }
    require_set(coverage_conll, "--conll");
    require_set(config.out_dir, "--out");
    if (coverage_language.empty()) throw ConfigError("missing required --language");
    const std::filesystem::path list =
        config.out_dir / (coverage_language + ".tsv");
    if (!std::filesystem::exists(list)) {
      throw ConfigError("no extraction output for language '" +
                        coverage_language + "' in " + config.out_dir.string());
    }
    const std::vector<NameRecord> records =
        read_name_list(list, coverage_language);
    const NameIndex names = NameIndex::build(records);
    const ConllDocument doc = read_conll_file(coverage_conll);
    CoverageOptions options;
    options.max_prefix = config.max_prefix;
    options.unique_mentions = coverage_unique;
    const CoverageReport report = evaluate_coverage(doc, names, options);
    print_json(report.to_json());
  });

  // --- export ---------------------------------------------------------
  auto* export_cmd = app.add_subcommand(
      "export", "Write every stored entity as JSON lines on stdout");
  export_cmd->fallthrough();
  std::string export_format;
  export_cmd->add_option("--format", export_format, "Only jsonl is supported")
      ->required()
      ->check(CLI::IsMember({"jsonl"}));
  export_cmd->callback([&] {
    apply_log_level(log_level);
    PipelineConfig config = base_config();
    require_set(config.store_dir, "--store");
    if (!EntityStore::exists(config.store_dir)) {
      throw ConfigError("store not found in " + config.store_dir.string());
    }
    EntityStore store(config.store_dir, EntityStore::OpenMode::kReadOnly);
    store.export_jsonl(std::cout);
  });

  // --- run ------------------------------------------------------------
  auto* run_cmd =
      app.add_subcommand("run", "Run ingest, closure, extract, and stats");
  run_cmd->fallthrough();
  std::string run_dump;
  std::string run_out;
  std::string run_languages;
  std::string run_roots;
  std::string run_compression;
  bool run_aliases = false;
  run_cmd->add_option("--dump", run_dump, "Dump file to read");
  run_cmd->add_option("--out", run_out, "Output directory");
  run_cmd->add_option("--languages", run_languages,
                      "Language config file (defaults built in)");
  run_cmd->add_option("--roots", run_roots,
                      "Root qids as PER,LOC,ORG (default Q5,Q82794,Q43229)");
  run_cmd->add_option("--compression", run_compression, "Dump encoding")
      ->check(CLI::IsMember({"auto", "none", "bz2-style"}));
  run_cmd->add_flag("--include-aliases", run_aliases,
                    "Also write <code>.aliases.tsv files");
  run_cmd->callback([&] {
    apply_log_level(log_level);
    PipelineConfig config = base_config();
    if (run_cmd->count("--dump") > 0) config.dump_path = run_dump;
    if (run_cmd->count("--out") > 0) config.out_dir = run_out;
    if (run_cmd->count("--languages") > 0) {
      config.language_config_path = run_languages;
    }
    if (run_cmd->count("--roots") > 0) {
      config.roots = RootConfig::from_flag(run_roots);
    }
    if (run_cmd->count("--compression") > 0) {
      config.compression = parse_compression(run_compression);
    }
    if (run_aliases) config.include_aliases = true;
    require_set(config.store_dir, "--store");
    require_set(config.dump_path, "--dump");
    require_set(config.out_dir, "--out");
    const std::vector<StageOutcome> outcomes =
        run_pipeline(config, kAllStages);
    nlohmann::ordered_json combined;
    for (const StageOutcome& outcome : outcomes) {
      combined[std::string(to_string(outcome.stage))] = outcome.summary;
    }
    print_json(combined);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 1;
  } catch (const ConfigError& err) {
    spdlog::error("{}", err.what());
    return 1;
  } catch (const DataError& err) {
    spdlog::error("{}", err.what());
    return 2;
  } catch (const IoError& err) {
    spdlog::error("{}", err.what());
    return 3;
  } catch (const std::exception& err) {
    spdlog::error("unexpected error: {}", err.what());
    return 1;
  }
  return 0;
}
