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

#include "wikinames/extract.hpp"

#include <algorithm>
#include <fstream>
#include <spdlog/spdlog.h>

#include "wikinames/errors.hpp"
#include "wikinames/unicode/script.hpp"

namespace wikinames {
namespace {

constexpr std::string_view kTsvHeader = "qid\ttype\tname\tenglish_match";

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

bool whitespace_only(std::string_view s) {
  for (const char c : s) {
    if (!is_ascii_space(c)) return false;
  }
  return true;
}

// TSV safety: the output columns may not contain tabs.
std::string sanitize_name(const std::string& label, LanguageCounters& counters) {
  if (label.find('\t') == std::string::npos) return label;
  std::string name = label;
  std::replace(name.begin(), name.end(), '\t', ' ');
  ++counters.tabs_replaced;
  return name;
}

int type_index(EntityType type) { return static_cast<int>(type); }

nlohmann::ordered_json counts_json(const std::array<std::int64_t, 3>& counts) {
  nlohmann::ordered_json out;
  out["LOC"] = counts[type_index(EntityType::kLoc)];
  out["ORG"] = counts[type_index(EntityType::kOrg)];
  out["PER"] = counts[type_index(EntityType::kPer)];
  return out;
}

std::array<std::int64_t, 3> counts_from_json(const nlohmann::json& doc) {
  std::array<std::int64_t, 3> counts{};
  counts[type_index(EntityType::kLoc)] = doc.at("LOC").get<std::int64_t>();
  counts[type_index(EntityType::kOrg)] = doc.at("ORG").get<std::int64_t>();
  counts[type_index(EntityType::kPer)] = doc.at("PER").get<std::int64_t>();
  return counts;
}

bool record_order(const NameRecord& a, const NameRecord& b) {
  if (a.language != b.language) return a.language < b.language;
  const std::string_view ta = to_string(a.type), tb = to_string(b.type);
  if (ta != tb) return ta < tb;
  return qid_number(a.qid) < qid_number(b.qid);
}

void write_rows(std::ofstream& out, const std::vector<NameRecord>& records,
                std::string_view language) {
  for (const NameRecord& record : records) {
    if (record.language != language) continue;
    out << record.qid << '\t' << to_string(record.type) << '\t' << record.name
        << '\t' << (record.english_match ? "true" : "false") << '\n';
  }
}

}  // namespace

bool compute_english_match(const CompactEntity& entity, std::string_view name) {
  const std::optional<std::string_view> english = entity.english_label();
  return english.has_value() && *english == name;
}

nlohmann::ordered_json ExtractionSummary::to_json() const {
  nlohmann::ordered_json out;
  out["entities_classified"] = entities_classified;
  out["multi_type_entities"] = multi_type_entities;
  out["loc_per_conflicts"] = loc_per_conflicts;
  nlohmann::ordered_json languages = nlohmann::ordered_json::object();
  for (const auto& [code, counters] : per_language) {
    nlohmann::ordered_json row;
    row["records"] = counts_json(counters.records);
    row["total"] = counters.records_total();
    row["candidates"] = counts_json(counters.candidates);
    row["latin_only"] = counts_json(counters.latin_only);
    row["excluded_by_script"] = counters.excluded_by_script;
    row["dropped_empty"] = counters.dropped_empty;
    row["tabs_replaced"] = counters.tabs_replaced;
    languages[code] = std::move(row);
  }
  out["languages"] = std::move(languages);
  out["empty_languages"] = empty_languages;
  return out;
}

ExtractionSummary ExtractionSummary::from_json(const nlohmann::json& doc) {
  ExtractionSummary summary;
  summary.entities_classified = doc.at("entities_classified").get<std::int64_t>();
  summary.multi_type_entities = doc.at("multi_type_entities").get<std::int64_t>();
  summary.loc_per_conflicts = doc.at("loc_per_conflicts").get<std::int64_t>();
  for (const auto& [code, row] : doc.at("languages").items()) {
    LanguageCounters counters;
    counters.records = counts_from_json(row.at("records"));
    counters.candidates = counts_from_json(row.at("candidates"));
    counters.latin_only = counts_from_json(row.at("latin_only"));
    counters.excluded_by_script = row.at("excluded_by_script").get<std::int64_t>();
    counters.dropped_empty = row.at("dropped_empty").get<std::int64_t>();
    counters.tabs_replaced = row.at("tabs_replaced").get<std::int64_t>();
    summary.per_language.emplace(code, counters);
  }
  summary.empty_languages =
      doc.at("empty_languages").get<std::vector<std::string>>();
  return summary;
}

ExtractionResult extract(const EntityStore& store, const ClosureTable& closure,
                         const RootConfig& roots, const LanguageConfig& config,
                         const ExtractOptions& options) {
  if (closure.members.empty()) {
    throw ConfigError("extract: closure table is empty; run closure first");
  }
  if (config.empty()) {
    throw ConfigError("extract: no languages configured");
  }

  ExtractionResult result;
  for (const LanguageSpec& spec : config.languages()) {
    result.summary.per_language[spec.wikimedia_code];
  }

  store.for_each([&](const CompactEntity& entity) {
    const TypeSet types = classify(entity, closure, roots);
    if (types.empty()) return true;
    ExtractionSummary& summary = result.summary;
    ++summary.entities_classified;
    if (types.size() > 1) ++summary.multi_type_entities;
    if (types.size() == 2 && types.contains(EntityType::kLoc) &&
        types.contains(EntityType::kPer)) {
      ++summary.loc_per_conflicts;
      spdlog::info("type conflict {{LOC,PER}} on {} resolved to PER",
                   entity.qid);
    }
    const EntityType type = resolve_type(types);
    const int idx = type_index(type);

    for (const LanguageSpec& spec : config.languages()) {
      const auto label_it = entity.labels.find(spec.wikimedia_code);
      if (label_it == entity.labels.end()) continue;
      LanguageCounters& counters = summary.per_language[spec.wikimedia_code];
      const std::string& label = label_it->second;
      if (label.empty() || whitespace_only(label)) {
        ++counters.dropped_empty;
        continue;
      }
      ++counters.candidates[idx];
      if (unicode::is_latin_only(label)) ++counters.latin_only[idx];
      if (!passes_script_policy(label, spec.policy)) {
        ++counters.excluded_by_script;
        continue;
      }
      NameRecord record;
      record.qid = entity.qid;
      record.language = spec.wikimedia_code;
      record.type = type;
      record.name = sanitize_name(label, counters);
      record.english_match = compute_english_match(entity, record.name);
      ++counters.records[idx];
      result.records.push_back(std::move(record));

      if (options.include_aliases) {
        const auto alias_it = entity.aliases.find(spec.wikimedia_code);
        if (alias_it == entity.aliases.end()) continue;
        // Aliases stay out of the headline statistics, so they get a
        // throwaway counter for tab sanitation.
        LanguageCounters alias_scratch;
        for (const std::string& alias : alias_it->second) {
          if (alias.empty() || whitespace_only(alias)) continue;
          if (!passes_script_policy(alias, spec.policy)) continue;
          NameRecord alias_record;
          alias_record.qid = entity.qid;
          alias_record.language = spec.wikimedia_code;
          alias_record.type = type;
          alias_record.name = sanitize_name(alias, alias_scratch);
          alias_record.english_match =
              compute_english_match(entity, alias_record.name);
          result.alias_records.push_back(std::move(alias_record));
        }
      }
    }
    return true;
  });

  std::sort(result.records.begin(), result.records.end(), record_order);
  // Aliases share (language, type, qid) keys; stable sort keeps the dump's
  // alias order within an entity for deterministic output.
  std::stable_sort(result.alias_records.begin(), result.alias_records.end(),
                   record_order);

  for (const LanguageSpec& spec : config.languages()) {
    if (result.summary.per_language[spec.wikimedia_code].records_total() == 0) {
      result.summary.empty_languages.push_back(spec.wikimedia_code);
    }
  }
  return result;
}

std::vector<std::filesystem::path> write_name_lists(
    const ExtractionResult& result, const LanguageConfig& config,
    const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir.string());

  std::vector<std::filesystem::path> written;
  for (const LanguageSpec& spec : config.languages()) {
    const std::filesystem::path file = out_dir / (spec.wikimedia_code + ".tsv");
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IoError("cannot write " + file.string());
    out << kTsvHeader << '\n';
    write_rows(out, result.records, spec.wikimedia_code);
    if (!out.good()) throw IoError("write failure on " + file.string());
    written.push_back(file);
  }
  for (const LanguageSpec& spec : config.languages()) {
    const bool any_alias = std::any_of(
        result.alias_records.begin(), result.alias_records.end(),
        [&](const NameRecord& r) { return r.language == spec.wikimedia_code; });
    if (!any_alias) continue;  // no header-only alias stubs
    const std::filesystem::path file =
        out_dir / (spec.wikimedia_code + ".aliases.tsv");
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IoError("cannot write " + file.string());
    out << kTsvHeader << '\n';
    write_rows(out, result.alias_records, spec.wikimedia_code);
    if (!out.good()) throw IoError("write failure on " + file.string());
    written.push_back(file);
  }
  return written;
}

std::vector<NameRecord> read_name_list(const std::filesystem::path& file,
                                       std::string_view language) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open name list: " + file.string());
  std::string line;
  if (!std::getline(in, line) || line != kTsvHeader) {
    throw DataError("bad name-list header in " + file.string());
  }
  std::vector<NameRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fail = [&](const char* what) -> DataError {
      return DataError(file.string() + ":" + std::to_string(line_no) + ": " +
                       what);
    };
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    const std::size_t t3 = t2 == std::string::npos ? t2 : line.find('\t', t2 + 1);
    if (t3 == std::string::npos || line.find('\t', t3 + 1) != std::string::npos) {
      throw fail("expected four tab-separated columns");
    }
    NameRecord record;
    record.qid = line.substr(0, t1);
    if (!is_valid_qid(record.qid)) throw fail("bad qid");
    const auto type = parse_entity_type(line.substr(t1 + 1, t2 - t1 - 1));
    if (!type.has_value()) throw fail("bad entity type");
    record.type = *type;
    record.language = std::string(language);
    record.name = line.substr(t2 + 1, t3 - t2 - 1);
    if (record.name.empty()) throw fail("empty name");
    const std::string flag = line.substr(t3 + 1);
    if (flag == "true") record.english_match = true;
    else if (flag == "false") record.english_match = false;
    else throw fail("bad english_match flag");
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace wikinames
