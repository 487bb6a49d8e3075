// SPDX-License-Identifier: Apache-2.0
#pragma once

// Minimal "key = value" configuration file reader. Lines are
//   dotted.key = value tokens...
// with '#' comments and blank lines ignored. Values keep their raw text;
// typed getters parse on demand. Shared by calibration files, scene files
// and the pipeline configuration.

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace curb {

class KeyValueFile {
public:
  static KeyValueFile load(const std::string& path);
  static KeyValueFile parse(const std::string& text);

  bool has(const std::string& key) const;
  std::vector<std::string> keys_with_prefix(const std::string& prefix) const;

  std::optional<std::string> get(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& dflt) const;
  double get_double(const std::string& key, double dflt) const;
  long long get_int(const std::string& key, long long dflt) const;
  bool get_bool(const std::string& key, bool dflt) const;

  // Required variants throw ConfigError when missing or malformed.
  double require_double(const std::string& key) const;
  std::vector<double> require_doubles(const std::string& key,
                                      std::size_t count) const;
  std::vector<double> get_doubles(const std::string& key) const;

  void set(const std::string& key, const std::string& value);

private:
  std::map<std::string, std::string> entries_;
};

}  // namespace curb
