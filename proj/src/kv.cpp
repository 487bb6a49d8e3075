// SPDX-License-Identifier: Apache-2.0

#include "curb/kv.hpp"

#include <fstream>
#include <sstream>

#include "curb/types.hpp"

namespace curb {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

KeyValueFile KeyValueFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

KeyValueFile KeyValueFile::parse(const std::string& text) {
  KeyValueFile kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected 'key = value', got: " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    }
    kv.entries_[key] = value;
  }
  return kv;
}

bool KeyValueFile::has(const std::string& key) const {
  return entries_.count(key) > 0;
}

std::vector<std::string> KeyValueFile::keys_with_prefix(
    const std::string& prefix) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries_) {
    if (k.rfind(prefix, 0) == 0) out.push_back(k);
  }
  return out;
}

std::optional<std::string> KeyValueFile::get(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::string KeyValueFile::get_string(const std::string& key,
                                     const std::string& dflt) const {
  const auto v = get(key);
  return v ? *v : dflt;
}

double KeyValueFile::get_double(const std::string& key, double dflt) const {
  const auto v = get(key);
  if (!v) return dflt;
  try {
    std::size_t pos = 0;
    const double d = std::stod(*v, &pos);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': not a number: " + *v);
  }
}

long long KeyValueFile::get_int(const std::string& key, long long dflt) const {
  const auto v = get(key);
  if (!v) return dflt;
  try {
    return std::stoll(*v);
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': not an integer: " + *v);
  }
}

bool KeyValueFile::get_bool(const std::string& key, bool dflt) const {
  const auto v = get(key);
  if (!v) return dflt;
  if (*v == "true" || *v == "1" || *v == "on") return true;
  if (*v == "false" || *v == "0" || *v == "off") return false;
  throw ConfigError("key '" + key + "': not a boolean: " + *v);
}

double KeyValueFile::require_double(const std::string& key) const {
  if (!has(key)) throw ConfigError("missing required key: " + key);
  return get_double(key, 0.0);
}

std::vector<double> KeyValueFile::get_doubles(const std::string& key) const {
  std::vector<double> out;
  const auto v = get(key);
  if (!v) return out;
  std::istringstream ss(*v);
  std::string tok;
  while (ss >> tok) {
    // allow comma separators too
    if (!tok.empty() && tok.back() == ',') tok.pop_back();
    if (tok.empty()) continue;
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw ConfigError("key '" + key + "': not a number list: " + *v);
    }
  }
  return out;
}

std::vector<double> KeyValueFile::require_doubles(const std::string& key,
                                                  std::size_t count) const {
  if (!has(key)) throw ConfigError("missing required key: " + key);
  auto v = get_doubles(key);
  if (v.size() != count) {
    throw ConfigError("key '" + key + "': expected " + std::to_string(count) +
                      " numbers, got " + std::to_string(v.size()));
  }
  return v;
}

void KeyValueFile::set(const std::string& key, const std::string& value) {
  entries_[key] = value;
}

}  // namespace curb
