#include "typealign/tokenize.hpp"

#include <algorithm>

namespace typealign {

void tokenize_field(std::string_view text, std::vector<std::string>& out) {
  std::string current;
  for (unsigned char c : text) {
    if (is_token_byte(c)) {
      if (c >= 'A' && c <= 'Z') c = static_cast<unsigned char>(c - 'A' + 'a');
      current.push_back(static_cast<char>(c));
    } else if (!current.empty()) {
      out.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
}

std::vector<std::string> tokenize_instance(const InstanceRecord& rec) {
  std::vector<std::string> tokens;
  for (const std::string& field : rec.value_fields) {
    tokenize_field(field, tokens);
  }
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  return tokens;
}

}  // namespace typealign
