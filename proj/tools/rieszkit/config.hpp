#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rieszkit/error.hpp"

namespace rieszkit::cli {

// Malformed or inconsistent configuration. `line` is 0 when no single line is to blame.
class ConfigError : public DomainError {
 public:
  ConfigError(const std::string& source, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// One `[name]` block of `key = value` lines.
class Section {
 public:
  Section(std::string source, std::string name, int line) : source_(std::move(source)), name_(std::move(name)), line_(line) {}

  const std::string& name() const { return name_; }
  int line() const { return line_; }
  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_real(const std::string& key) const;
  double get_real(const std::string& key, double fallback) const;
  int get_int(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  // Comma-separated lists; an empty list is an error.
  std::vector<std::string> get_list(const std::string& key) const;
  std::vector<double> get_real_list(const std::string& key) const;
  std::vector<int> get_int_list(const std::string& key) const;
  // "M:N, M:N, ..."
  std::vector<std::pair<int, int>> get_ladder(const std::string& key) const;

  // Rejects any key outside `allowed`, naming the offending line.
  void require_known(const std::vector<std::string>& allowed) const;

  // Error attributed to the line that holds `key` (or the section header if absent).
  [[noreturn]] void fail(const std::string& key, const std::string& message) const;

 private:
  friend class Config;
  struct Entry {
    std::string value;
    int line;
  };
  const Entry& entry(const std::string& key) const;

  std::string source_;
  std::string name_;
  int line_;
  std::map<std::string, Entry> entries_;
};

class Config {
 public:
  static Config parse(std::istream& in, const std::string& source = "<config>");
  static Config load(const std::filesystem::path& path);

  const std::string& source() const { return source_; }
  bool has_section(const std::string& name) const;
  const Section& section(const std::string& name) const;

 private:
  std::string source_;
  std::vector<Section> sections_;
};

}  // namespace rieszkit::cli
