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

#include "wikinames/toml_lite.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "wikinames/errors.hpp"
#include "wikinames/unicode/utf8.hpp"

namespace wikinames::toml_lite {
namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& message) {
  throw ConfigError("config line " + std::to_string(line_no) + ": " + message);
}

bool is_bare_key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Removes a trailing comment, respecting quoted strings.
std::string_view strip_comment(std::string_view s) {
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (in_string) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_string = false;
      }
    } else if (c == '"') {
      in_string = true;
    } else if (c == '#') {
      return s.substr(0, i);
    }
  }
  return s;
}

// Parses one quoted string starting at s[pos] == '"'; advances pos past
// the closing quote.
std::string parse_quoted(std::string_view s, std::size_t& pos,
                         std::size_t line_no) {
  std::string out;
  ++pos;  // opening quote
  while (pos < s.size()) {
    const char c = s[pos];
    if (c == '"') {
      ++pos;
      return out;
    }
    if (c != '\\') {
      out.push_back(c);
      ++pos;
      continue;
    }
    ++pos;
    if (pos >= s.size()) break;
    const char esc = s[pos++];
    switch (esc) {
      case '"': out.push_back('"'); break;
      case '\\': out.push_back('\\'); break;
      case 'n': out.push_back('\n'); break;
      case 't': out.push_back('\t'); break;
      case 'r': out.push_back('\r'); break;
      case 'u': {
        if (pos + 4 > s.size()) fail(line_no, "bad \\u escape");
        std::uint32_t cp = 0;
        for (int k = 0; k < 4; ++k) {
          const char h = s[pos++];
          cp <<= 4;
          if (h >= '0' && h <= '9') cp |= static_cast<std::uint32_t>(h - '0');
          else if (h >= 'a' && h <= 'f') cp |= static_cast<std::uint32_t>(h - 'a' + 10);
          else if (h >= 'A' && h <= 'F') cp |= static_cast<std::uint32_t>(h - 'A' + 10);
          else fail(line_no, "bad \\u escape");
        }
        unicode::append(out, static_cast<char32_t>(cp));
        break;
      }
      default:
        fail(line_no, std::string("unsupported escape \\") + esc);
    }
  }
  fail(line_no, "unterminated string");
}

Value parse_value(std::string_view raw, std::size_t line_no) {
  raw = trim(raw);
  if (raw.empty()) fail(line_no, "missing value");
  if (raw.front() == '"') {
    std::size_t pos = 0;
    std::string s = parse_quoted(raw, pos, line_no);
    if (trim(raw.substr(pos)) != "") fail(line_no, "trailing characters after string");
    return s;
  }
  if (raw.front() == '[') {
    std::vector<std::string> items;
    std::size_t pos = 1;
    while (true) {
      while (pos < raw.size() && (raw[pos] == ' ' || raw[pos] == '\t' || raw[pos] == ',')) {
        ++pos;
      }
      if (pos >= raw.size()) fail(line_no, "unterminated array");
      if (raw[pos] == ']') {
        ++pos;
        break;
      }
      if (raw[pos] != '"') fail(line_no, "only string arrays are supported");
      items.push_back(parse_quoted(raw, pos, line_no));
    }
    if (trim(raw.substr(pos)) != "") fail(line_no, "trailing characters after array");
    return items;
  }
  if (raw == "true") return true;
  if (raw == "false") return false;
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(raw.data(), raw.data() + raw.size(), value);
  if (ec == std::errc() && ptr == raw.data() + raw.size()) return value;
  fail(line_no, "unsupported value: " + std::string(raw));
}

const Value* find_value(const Table& table, const std::string& key) {
  const auto it = table.find(key);
  return it == table.end() ? nullptr : &it->second;
}

[[noreturn]] void fail_key(const std::string& key, const char* expected) {
  throw ConfigError("config key '" + key + "': expected " + expected);
}

void write_value(std::ostringstream& out, const Value& value) {
  if (const auto* s = std::get_if<std::string>(&value)) {
    out << '"';
    for (const char c : *s) {
      switch (c) {
        case '"': out << "\\\""; break;
        case '\\': out << "\\\\"; break;
        case '\n': out << "\\n"; break;
        case '\t': out << "\\t"; break;
        case '\r': out << "\\r"; break;
        default: out << c;
      }
    }
    out << '"';
  } else if (const auto* i = std::get_if<std::int64_t>(&value)) {
    out << *i;
  } else if (const auto* b = std::get_if<bool>(&value)) {
    out << (*b ? "true" : "false");
  } else {
    const auto& items = std::get<std::vector<std::string>>(value);
    out << '[';
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (k > 0) out << ", ";
      write_value(out, Value(items[k]));
    }
    out << ']';
  }
}

void write_table(std::ostringstream& out, const Table& table) {
  for (const auto& [key, value] : table) {
    out << key << " = ";
    write_value(out, value);
    out << '\n';
  }
}

}  // namespace

const Table* Document::table(std::string_view name) const {
  const auto it = tables.find(std::string(name));
  return it == tables.end() ? nullptr : &it->second;
}

Document parse(std::string_view text) {
  Document doc;
  Table* current = &doc.root;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view line =
        text.substr(start, (nl == std::string_view::npos ? text.size() : nl) - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    line = trim(strip_comment(line));
    if (line.empty()) continue;

    if (line.front() == '[') {
      const bool is_array = line.size() > 1 && line[1] == '[';
      const std::string_view close = is_array ? "]]" : "]";
      const std::size_t name_begin = is_array ? 2 : 1;
      if (line.size() < name_begin + close.size() ||
          line.substr(line.size() - close.size()) != close) {
        fail(line_no, "malformed section header");
      }
      std::string_view name =
          trim(line.substr(name_begin, line.size() - name_begin - close.size()));
      if (name.empty()) fail(line_no, "empty section name");
      for (const char c : name) {
        if (!is_bare_key_char(c)) fail(line_no, "unsupported section name");
      }
      if (is_array) {
        doc.table_arrays.emplace_back(std::string(name), Table{});
        current = &doc.table_arrays.back().second;
      } else {
        current = &doc.tables[std::string(name)];
      }
      continue;
    }

    std::size_t key_end = 0;
    while (key_end < line.size() && is_bare_key_char(line[key_end])) ++key_end;
    if (key_end == 0) fail(line_no, "expected a key");
    const std::string key(line.substr(0, key_end));
    std::string_view rest = trim(line.substr(key_end));
    if (rest.empty() || rest.front() != '=') fail(line_no, "expected '='");
    rest.remove_prefix(1);
    if (current->count(key) > 0) fail(line_no, "duplicate key '" + key + "'");
    current->emplace(key, parse_value(rest, line_no));
  }
  return doc;
}

Document parse_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string serialize(const Document& doc) {
  std::ostringstream out;
  write_table(out, doc.root);
  bool first = doc.root.empty();
  for (const auto& [name, table] : doc.tables) {
    if (!first) out << '\n';
    first = false;
    out << '[' << name << "]\n";
    write_table(out, table);
  }
  for (const auto& [name, table] : doc.table_arrays) {
    if (!first) out << '\n';
    first = false;
    out << "[[" << name << "]]\n";
    write_table(out, table);
  }
  return out.str();
}

const std::string& get_string(const Table& table, const std::string& key) {
  const Value* v = find_value(table, key);
  if (v == nullptr || !std::holds_alternative<std::string>(*v)) {
    fail_key(key, "a string");
  }
  return std::get<std::string>(*v);
}

std::int64_t get_int(const Table& table, const std::string& key) {
  const Value* v = find_value(table, key);
  if (v == nullptr || !std::holds_alternative<std::int64_t>(*v)) {
    fail_key(key, "an integer");
  }
  return std::get<std::int64_t>(*v);
}

bool get_bool(const Table& table, const std::string& key) {
  const Value* v = find_value(table, key);
  if (v == nullptr || !std::holds_alternative<bool>(*v)) {
    fail_key(key, "a boolean");
  }
  return std::get<bool>(*v);
}

const std::vector<std::string>& get_string_array(const Table& table,
                                                 const std::string& key) {
  const Value* v = find_value(table, key);
  if (v == nullptr || !std::holds_alternative<std::vector<std::string>>(*v)) {
    fail_key(key, "a string array");
  }
  return std::get<std::vector<std::string>>(*v);
}

std::string get_string_or(const Table& table, const std::string& key,
                          std::string_view fallback) {
  const Value* v = find_value(table, key);
  if (v == nullptr) return std::string(fallback);
  if (!std::holds_alternative<std::string>(*v)) fail_key(key, "a string");
  return std::get<std::string>(*v);
}

std::int64_t get_int_or(const Table& table, const std::string& key,
                        std::int64_t fallback) {
  const Value* v = find_value(table, key);
  if (v == nullptr) return fallback;
  if (!std::holds_alternative<std::int64_t>(*v)) fail_key(key, "an integer");
  return std::get<std::int64_t>(*v);
}

bool get_bool_or(const Table& table, const std::string& key, bool fallback) {
  const Value* v = find_value(table, key);
  if (v == nullptr) return fallback;
  if (!std::holds_alternative<bool>(*v)) fail_key(key, "a boolean");
  return std::get<bool>(*v);
}

}  // namespace wikinames::toml_lite
