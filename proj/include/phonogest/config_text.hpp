#pragma once

#include "phonogest/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace phonogest {

/// Sectioned key/value text format shared by all configuration files.
///
///     # comment
///     [kind]            or   [kind name]
///     key = value
///         continued value (indented lines extend the previous value)
///
/// Keys may repeat; order is preserved.
struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
};

struct ConfigSection {
  std::string kind;
  std::string name;
  int line = 0;
  std::vector<ConfigEntry> entries;

  const ConfigEntry* find(std::string_view key) const {
    for (const auto& e : entries)
      if (e.key == key) return &e;
    return nullptr;
  }

  std::string get(std::string_view key) const {
    if (auto e = find(key)) return e->value;
    throw ConfigError(where() + ": missing key '" + std::string(key) + "'");
  }

  std::string get_or(std::string_view key, std::string fallback) const {
    if (auto e = find(key)) return e->value;
    return fallback;
  }

  std::vector<std::string> all(std::string_view key) const {
    std::vector<std::string> out;
    for (const auto& e : entries)
      if (e.key == key) out.push_back(e.value);
    return out;
  }

  std::string where() const {
    return "[" + kind + (name.empty() ? "" : " " + name) + "] (line " + std::to_string(line) + ")";
  }
};

class ConfigDocument {
 public:
  static ConfigDocument parse(std::string_view text, std::string source = "<config>") {
    ConfigDocument doc;
    doc.source_ = std::move(source);
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    ConfigEntry* last = nullptr;
    while (std::getline(in, raw)) {
      ++lineno;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      auto hash = raw.find('#');
      std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
      if (trim(line).empty()) continue;
      bool indented = std::isspace(static_cast<unsigned char>(line[0]));
      std::string body = trim(line);
      if (body.front() == '[') {
        if (body.back() != ']') doc.fail(lineno, "unterminated section header");
        std::string inner = trim(body.substr(1, body.size() - 2));
        auto sp = inner.find_first_of(" \t");
        ConfigSection s;
        s.kind = inner.substr(0, sp);
        s.name = sp == std::string::npos ? "" : trim(inner.substr(sp));
        s.line = lineno;
        if (s.kind.empty()) doc.fail(lineno, "empty section header");
        doc.sections_.push_back(std::move(s));
        last = nullptr;
        continue;
      }
      if (indented && last) {
        last->value += " " + body;
        continue;
      }
      auto eq = body.find('=');
      if (eq == std::string::npos) doc.fail(lineno, "expected 'key = value'");
      if (doc.sections_.empty()) doc.fail(lineno, "entry outside of any section");
      ConfigEntry e{trim(body.substr(0, eq)), trim(body.substr(eq + 1)), lineno};
      if (e.key.empty()) doc.fail(lineno, "empty key");
      doc.sections_.back().entries.push_back(std::move(e));
      last = &doc.sections_.back().entries.back();
    }
    return doc;
  }

  static ConfigDocument load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read configuration file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse(ss.str(), path);
  }

  const std::vector<ConfigSection>& sections() const { return sections_; }

  std::vector<const ConfigSection*> of_kind(std::string_view kind) const {
    std::vector<const ConfigSection*> out;
    for (const auto& s : sections_)
      if (s.kind == kind) out.push_back(&s);
    return out;
  }

  const std::string& source() const { return source_; }

  static std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
  }

 private:
  [[noreturn]] void fail(int line, const std::string& msg) const {
    throw ConfigError(source_ + ":" + std::to_string(line) + ": " + msg);
  }

  std::string source_;
  std::vector<ConfigSection> sections_;
};

/// Whitespace-separated words.
inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

/// Splits on `sep`, trimming each piece and dropping empties.
inline std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) pos = s.size();
    auto piece = ConfigDocument::trim(s.substr(start, pos - start));
    if (!piece.empty()) out.push_back(piece);
    start = pos + 1;
  }
  return out;
}

}  // namespace phonogest
