#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "typealign/property_table.hpp"

namespace typealign {

/// True for bytes that belong to a token: ASCII alphanumerics plus all bytes
/// >= 0x80, so multi-byte UTF-8 sequences stay intact. Everything else is a
/// delimiter.
constexpr bool is_token_byte(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z') || c >= 0x80;
}

/// Splits `text` on delimiter bytes, lowercases ASCII letters, and appends
/// the pieces (duplicates included) to `out`.
void tokenize_field(std::string_view text, std::vector<std::string>& out);

/// Token set of one instance: the union over all value fields, duplicates
/// collapsed, sorted ascending. A token occurring many times within the
/// instance counts once.
std::vector<std::string> tokenize_instance(const InstanceRecord& rec);

}  // namespace typealign
