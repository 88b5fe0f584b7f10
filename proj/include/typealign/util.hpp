#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace typealign {

// Raised for problems with input data or referenced files; the CLI maps it
// to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view trim(std::string_view s);

// Splits on every occurrence of `delim`, keeping empty pieces.
std::vector<std::string_view> split(std::string_view s, char delim);

std::string to_lower_ascii(std::string_view s);

// Fixed-point decimal rendering used by every report writer, so reruns are
// byte-identical.
std::string format_fixed(double v, int digits = 6);

std::ifstream open_input(const std::string& path);
std::ofstream open_output(const std::string& path);

void require_file(const std::string& path);  // DataError naming the path

}  // namespace typealign
