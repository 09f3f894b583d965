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

#ifndef WIKINAMES_LANGUAGE_CONFIG_HPP_
#define WIKINAMES_LANGUAGE_CONFIG_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wikinames/unicode/script.hpp"

namespace wikinames {

// What a label must look like to enter a language's name list.
struct ScriptPolicy {
  enum class Kind { kAny, kRequireScript };

  Kind kind = Kind::kAny;
  unicode::Script script = unicode::kUnknownScript;  // set for kRequireScript

  static ScriptPolicy any() { return {}; }
  static ScriptPolicy require(unicode::Script script) {
    return {Kind::kRequireScript, script};
  }

  bool operator==(const ScriptPolicy&) const = default;
};

// True if `name` may be kept under `policy`: an `any` policy admits
// everything; require-script(S) demands at least one character of script S
// and no Latin character at all.
bool passes_script_policy(std::string_view name, const ScriptPolicy& policy);

struct LanguageSpec {
  std::string wikimedia_code;  // label key in the dumps, e.g. "sw"
  std::string iso639_3;        // e.g. "swa"
  std::string display_name;    // e.g. "Swahili"
  ScriptPolicy policy;

  bool operator==(const LanguageSpec&) const = default;
};

// An ordered set of target languages, unique by wikimedia code.
class LanguageConfig {
 public:
  const std::vector<LanguageSpec>& languages() const { return languages_; }
  const LanguageSpec* find(std::string_view wikimedia_code) const;
  bool empty() const { return languages_.empty(); }
  std::size_t size() const { return languages_.size(); }

  // Throws ConfigError on a duplicate code or an empty code.
  void add(LanguageSpec spec);

  // The built-in target set: 48 languages, with the Ethiopic script
  // requirement on Tigrinya and Amharic. Everything else is policy `any`.
  static LanguageConfig defaults();

  // Config file I/O; the format is a [[language]] table array with keys
  // code, iso639_3, name, and script ("any" or a Unicode script name).
  static LanguageConfig load(const std::filesystem::path& path);
  static LanguageConfig from_toml(std::string_view text);
  std::string to_toml() const;

  bool operator==(const LanguageConfig&) const = default;

 private:
  std::vector<LanguageSpec> languages_;
};

}  // namespace wikinames

#endif  // WIKINAMES_LANGUAGE_CONFIG_HPP_
