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

#include "wikinames/language_config.hpp"

#include <fstream>
#include <sstream>

#include "wikinames/errors.hpp"
#include "wikinames/toml_lite.hpp"

namespace wikinames {

bool passes_script_policy(std::string_view name, const ScriptPolicy& policy) {
  if (policy.kind == ScriptPolicy::Kind::kAny) return true;
  return unicode::contains_script_and_no_latin(name, policy.script);
}

const LanguageSpec* LanguageConfig::find(std::string_view wikimedia_code) const {
  for (const LanguageSpec& spec : languages_) {
    if (spec.wikimedia_code == wikimedia_code) return &spec;
  }
  return nullptr;
}

void LanguageConfig::add(LanguageSpec spec) {
  if (spec.wikimedia_code.empty()) {
    throw ConfigError("language entry with empty wikimedia code");
  }
  if (find(spec.wikimedia_code) != nullptr) {
    throw ConfigError("duplicate language code: " + spec.wikimedia_code);
  }
  languages_.push_back(std::move(spec));
}

LanguageConfig LanguageConfig::defaults() {
  // The populated languages first, then the languages for which no names
  // are expected; order matches their presentation order.
  struct Row {
    const char* code;
    const char* iso;
    const char* name;
    bool ethiopic;
  };
  static constexpr Row kRows[] = {
      {"aa", "aar", "Afar", false},
      {"af", "afr", "Afrikaans", false},
      {"ak", "aka", "Akan", false},
      {"am", "amh", "Amharic", true},
      {"kea", "kea", "Cape Verdean Creole", false},
      {"ny", "nya", "Chewa", false},
      {"ha", "hau", "Hausa", false},
      {"ig", "ibo", "Igbo", false},
      {"rw", "kin", "Kinyarwanda", false},
      {"rn", "run", "Kirundi", false},
      {"kg", "kon", "Kongo", false},
      {"ln", "lin", "Lingala", false},
      {"lg", "lug", "Luganda", false},
      {"mg", "mlg", "Malagasy", false},
      {"nso", "nso", "Northern Sotho", false},
      {"om", "orm", "Oromo", false},
      {"sn", "sna", "Shona", false},
      {"so", "som", "Somali", false},
      {"sw", "swa", "Swahili", false},
      {"ss", "ssw", "Swati", false},
      {"ti", "tir", "Tigrinya", true},
      {"ts", "tso", "Tsonga", false},
      {"tn", "tsn", "Tswana", false},
      {"ve", "ven", "Venda", false},
      {"wo", "wol", "Wolof", false},
      {"xh", "xho", "Xhosa", false},
      {"yo", "yor", "Yoruba", false},
      {"zu", "zul", "Zulu", false},
      {"ada", "ada", "Dangme", false},
      {"fon", "fon", "Fon", false},
      {"ff", "ful", "Fulani", false},
      {"gaa", "gaa", "Ga", false},
      {"ki", "kik", "Gikuyu", false},
      {"naq", "naq", "Khoekhoe", false},
      {"kmb", "kmb", "Kimbundu", false},
      {"mkw", "mkw", "Kituba", false},
      {"luo", "luo", "Luo", false},
      {"mfe", "mfe", "Mauritian Creole", false},
      {"mos", "mos", "Mossi", false},
      {"nmq", "nmq", "Nambya", false},
      {"ndc", "ndc", "Ndau", false},
      {"snf", "snf", "Noon", false},
      {"nd", "nde", "Northern Ndebele", false},
      {"st", "sot", "Sesotho", false},
      {"crs", "crs", "Seychellois Creole", false},
      {"nr", "nbl", "Southern Ndebele", false},
      {"lua", "lua", "Tshiluba", false},
      {"umb", "umb", "Umbundu", false},
  };
  LanguageConfig config;
  for (const Row& row : kRows) {
    LanguageSpec spec;
    spec.wikimedia_code = row.code;
    spec.iso639_3 = row.iso;
    spec.display_name = row.name;
    spec.policy = row.ethiopic ? ScriptPolicy::require(unicode::kEthiopicScript)
                               : ScriptPolicy::any();
    config.add(std::move(spec));
  }
  return config;
}

LanguageConfig LanguageConfig::from_toml(std::string_view text) {
  const toml_lite::Document doc = toml_lite::parse(text);
  LanguageConfig config;
  for (const auto& [section, table] : doc.table_arrays) {
    if (section != "language") {
      throw ConfigError("language config: unexpected section [[" + section + "]]");
    }
    LanguageSpec spec;
    spec.wikimedia_code = toml_lite::get_string(table, "code");
    spec.iso639_3 = toml_lite::get_string(table, "iso639_3");
    spec.display_name = toml_lite::get_string(table, "name");
    const std::string script = toml_lite::get_string_or(table, "script", "any");
    if (script == "any") {
      spec.policy = ScriptPolicy::any();
    } else {
      const auto id = unicode::find_script(script);
      if (!id.has_value()) {
        throw ConfigError("language " + spec.wikimedia_code +
                          ": unknown script '" + script + "'");
      }
      spec.policy = ScriptPolicy::require(*id);
    }
    config.add(std::move(spec));
  }
  if (config.empty()) {
    throw ConfigError("language config has no [[language]] entries");
  }
  return config;
}

LanguageConfig LanguageConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open language config: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_toml(buffer.str());
}

std::string LanguageConfig::to_toml() const {
  toml_lite::Document doc;
  for (const LanguageSpec& spec : languages_) {
    toml_lite::Table table;
    table.emplace("code", spec.wikimedia_code);
    table.emplace("iso639_3", spec.iso639_3);
    table.emplace("name", spec.display_name);
    table.emplace("script",
                  spec.policy.kind == ScriptPolicy::Kind::kAny
                      ? std::string("any")
                      : std::string(unicode::script_name(spec.policy.script)));
    doc.table_arrays.emplace_back("language", std::move(table));
  }
  return toml_lite::serialize(doc);
}

}  // namespace wikinames
