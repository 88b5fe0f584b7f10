#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

namespace typealign {

/// Flat `key = value` file: blank lines and #-comment lines are skipped,
/// whitespace around keys and values is trimmed, duplicate keys are an error.
/// Keys keep file-independent (sorted) order in the returned map.
std::map<std::string, std::string> parse_key_value(std::istream& in,
                                                   const std::string& origin);
std::map<std::string, std::string> parse_key_value_file(const std::string& path);

// Typed accessors; all throw DataError naming key and origin on bad input.
std::uint64_t config_u64(const std::map<std::string, std::string>& kv,
                         const std::string& key, std::uint64_t fallback);
double config_double(const std::map<std::string, std::string>& kv, const std::string& key,
                     double fallback);
bool config_bool(const std::map<std::string, std::string>& kv, const std::string& key,
                 bool fallback);

}  // namespace typealign
