#include "rieszkit/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace rieszkit::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string where(const std::string& source, int line) {
  std::ostringstream os;
  os << source;
  if (line > 0) os << ":" << line;
  return os.str();
}

bool valid_name(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

template <class T>
std::optional<T> parse_number(const std::string& text) {
  T v{};
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

ConfigError::ConfigError(const std::string& source, int line, const std::string& message)
    : DomainError(where(source, line) + ": " + message), line_(line) {}

void Section::fail(const std::string& key, const std::string& message) const {
  const auto it = entries_.find(key);
  const int line = it != entries_.end() ? it->second.line : line_;
  throw ConfigError(source_, line, "[" + name_ + "] " + key + ": " + message);
}

const Section::Entry& Section::entry(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw ConfigError(source_, line_, "[" + name_ + "] missing required key '" + key + "'");
  return it->second;
}

std::string Section::get_string(const std::string& key) const {
  const std::string& v = entry(key).value;
  if (v.empty()) fail(key, "empty value");
  return v;
}

std::string Section::get_string(const std::string& key, const std::string& fallback) const {
  return has(key) ? get_string(key) : fallback;
}

double Section::get_real(const std::string& key) const {
  const std::string v = get_string(key);
  const auto x = parse_number<double>(v);
  if (!x) fail(key, "expected a real number, got '" + v + "'");
  return *x;
}

double Section::get_real(const std::string& key, double fallback) const {
  return has(key) ? get_real(key) : fallback;
}

int Section::get_int(const std::string& key) const {
  const std::string v = get_string(key);
  const auto x = parse_number<int>(v);
  if (!x) fail(key, "expected an integer, got '" + v + "'");
  return *x;
}

int Section::get_int(const std::string& key, int fallback) const { return has(key) ? get_int(key) : fallback; }

bool Section::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const std::string v = get_string(key);
  if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
  if (v == "false" || v == "no" || v == "off" || v == "0") return false;
  fail(key, "expected true or false, got '" + v + "'");
}

std::vector<std::string> Section::get_list(const std::string& key) const {
  const std::string& raw = entry(key).value;
  if (raw.empty()) fail(key, "empty list");
  std::vector<std::string> items = split(raw, ',');
  for (const auto& i : items)
    if (i.empty()) fail(key, "empty item in list '" + raw + "'");
  return items;
}

std::vector<double> Section::get_real_list(const std::string& key) const {
  std::vector<double> out;
  for (const auto& item : get_list(key)) {
    const auto x = parse_number<double>(item);
    if (!x) fail(key, "expected a real number, got '" + item + "'");
    out.push_back(*x);
  }
  return out;
}

std::vector<int> Section::get_int_list(const std::string& key) const {
  std::vector<int> out;
  for (const auto& item : get_list(key)) {
    const auto x = parse_number<int>(item);
    if (!x) fail(key, "expected an integer, got '" + item + "'");
    out.push_back(*x);
  }
  return out;
}

std::vector<std::pair<int, int>> Section::get_ladder(const std::string& key) const {
  std::vector<std::pair<int, int>> out;
  for (const auto& item : get_list(key)) {
    const auto parts = split(item, ':');
    std::optional<int> m, n;
    if (parts.size() == 2) {
      m = parse_number<int>(parts[0]);
      n = parse_number<int>(parts[1]);
    }
    if (!m || !n) fail(key, "expected M:N, got '" + item + "'");
    out.emplace_back(*m, *n);
  }
  return out;
}

void Section::require_known(const std::vector<std::string>& allowed) const {
  for (const auto& [key, e] : entries_) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      throw ConfigError(source_, e.line, "[" + name_ + "] unknown key '" + key + "' (expected one of: " + list + ")");
    }
  }
}

Config Config::parse(std::istream& in, const std::string& source) {
  Config cfg;
  cfg.source_ = source;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s[0] == '[') {
      if (s.back() != ']') throw ConfigError(source, line, "unterminated section header '" + s + "'");
      const std::string name = trim(std::string_view(s).substr(1, s.size() - 2));
      if (!valid_name(name)) throw ConfigError(source, line, "invalid section name '" + name + "'");
      if (cfg.has_section(name))
        throw ConfigError(source, line, "duplicate section [" + name + "] (first at line " +
                                            std::to_string(cfg.section(name).line()) + ")");
      cfg.sections_.emplace_back(source, name, line);
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError(source, line, "expected 'key = value', got '" + s + "'");
    const std::string key = trim(std::string_view(s).substr(0, eq));
    if (!valid_name(key)) throw ConfigError(source, line, "invalid key '" + key + "'");
    if (cfg.sections_.empty()) throw ConfigError(source, line, "key '" + key + "' appears before any [section]");
    Section& sec = cfg.sections_.back();
    const auto prev = sec.entries_.find(key);
    if (prev != sec.entries_.end())
      throw ConfigError(source, line, "[" + sec.name() + "] duplicate key '" + key + "' (first at line " +
                                          std::to_string(prev->second.line) + ")");
    sec.entries_.emplace(key, Section::Entry{trim(std::string_view(s).substr(eq + 1)), line});
  }
  return cfg;
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), 0, "cannot open config file");
  return parse(in, path.string());
}

bool Config::has_section(const std::string& name) const {
  return std::any_of(sections_.begin(), sections_.end(), [&](const Section& s) { return s.name() == name; });
}

const Section& Config::section(const std::string& name) const {
  for (const auto& s : sections_)
    if (s.name() == name) return s;
  throw ConfigError(source_, 0, "missing section [" + name + "]");
}

}  // namespace rieszkit::cli
