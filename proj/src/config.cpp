#include "typealign/config.hpp"

#include <charconv>
#include <istream>

#include "typealign/util.hpp"

namespace typealign {

std::map<std::string, std::string> parse_key_value(std::istream& in,
                                                   const std::string& origin) {
  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw DataError(origin + ":" + std::to_string(line_no) + ": expected key = value");
    }
    std::string key(trim(body.substr(0, eq)));
    std::string value(trim(body.substr(eq + 1)));
    if (key.empty()) {
      throw DataError(origin + ":" + std::to_string(line_no) + ": empty key");
    }
    if (!kv.emplace(key, value).second) {
      throw DataError(origin + ":" + std::to_string(line_no) + ": duplicate key '" + key +
                      "'");
    }
  }
  return kv;
}

std::map<std::string, std::string> parse_key_value_file(const std::string& path) {
  require_file(path);
  std::ifstream in = open_input(path);
  return parse_key_value(in, path);
}

std::uint64_t config_u64(const std::map<std::string, std::string>& kv,
                         const std::string& key, std::uint64_t fallback) {
  auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  std::uint64_t v = 0;
  const char* first = it->second.data();
  const char* last = first + it->second.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last) {
    throw DataError("bad integer for '" + key + "': " + it->second);
  }
  return v;
}

double config_double(const std::map<std::string, std::string>& kv, const std::string& key,
                     double fallback) {
  auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  double v = 0.0;
  const char* first = it->second.data();
  const char* last = first + it->second.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last) {
    throw DataError("bad number for '" + key + "': " + it->second);
  }
  return v;
}

bool config_bool(const std::map<std::string, std::string>& kv, const std::string& key,
                 bool fallback) {
  auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  const std::string& v = it->second;
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw DataError("bad boolean for '" + key + "': " + v);
}

}  // namespace typealign
