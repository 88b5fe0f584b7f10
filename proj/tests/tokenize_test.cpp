#include <doctest.h>

#include "typealign/tokenize.hpp"

using namespace typealign;

namespace {

std::vector<std::string> tokens_of(std::string_view text) {
  std::vector<std::string> out;
  tokenize_field(text, out);
  return out;
}

}  // namespace

TEST_CASE("fields split on non-alphanumeric bytes and lowercase") {
  CHECK(tokens_of("Hello, World!") == std::vector<std::string>{"hello", "world"});
  CHECK(tokens_of("Alan_Turing") == std::vector<std::string>{"alan", "turing"});
  CHECK(tokens_of("a-b/c.d") == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(tokens_of("route 66") == std::vector<std::string>{"route", "66"});
}

TEST_CASE("delimiters only or empty input yields nothing") {
  CHECK(tokens_of("").empty());
  CHECK(tokens_of(" ,;:!?").empty());
}

TEST_CASE("repeated tokens in one field are kept by the field tokenizer") {
  CHECK(tokens_of("ha ha ha") == std::vector<std::string>{"ha", "ha", "ha"});
}

TEST_CASE("bytes above ascii stay inside tokens") {
  // UTF-8 continuation bytes are all >= 0x80, so multibyte words hold together.
  CHECK(tokens_of("caf\xC3\xA9 bar") == std::vector<std::string>{"caf\xC3\xA9", "bar"});
}

TEST_CASE("instance tokens are the deduplicated union over fields") {
  InstanceRecord rec;
  rec.subject = "http://ex/i";
  rec.value_fields = {"Deep Blue", "blue chess machine", "IBM"};
  CHECK(tokenize_instance(rec) ==
        std::vector<std::string>{"blue", "chess", "deep", "ibm", "machine"});
}

TEST_CASE("instance with no fields has no tokens") {
  InstanceRecord rec;
  rec.subject = "http://ex/i";
  CHECK(tokenize_instance(rec).empty());
}
