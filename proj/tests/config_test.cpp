#include <doctest.h>

#include <sstream>

#include "typealign/config.hpp"
#include "typealign/util.hpp"

using namespace typealign;

namespace {

std::map<std::string, std::string> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_key_value(in, "mem");
}

}  // namespace

TEST_CASE("key-value files tolerate comments, blanks and stray spaces") {
  auto kv = parse(
      "# a comment\n"
      "\n"
      "alpha = 1\n"
      "  beta=two words  \n"
      "gamma =\n");
  REQUIRE(kv.size() == 3);
  CHECK(kv["alpha"] == "1");
  CHECK(kv["beta"] == "two words");
  CHECK(kv["gamma"] == "");
}

TEST_CASE("key-value parsing rejects duplicates and junk") {
  CHECK_THROWS_AS(parse("a=1\na=2\n"), DataError);
  CHECK_THROWS_AS(parse("no equals sign\n"), DataError);
  CHECK_THROWS_AS(parse("=value\n"), DataError);
}

TEST_CASE("typed accessors convert or fall back") {
  auto kv = parse("n=42\nx=0.25\nyes=true\nno=0\n");
  CHECK(config_u64(kv, "n", 7) == 42);
  CHECK(config_u64(kv, "absent", 7) == 7);
  CHECK(config_double(kv, "x", 1.0) == 0.25);
  CHECK(config_double(kv, "absent", 1.5) == 1.5);
  CHECK(config_bool(kv, "yes", false) == true);
  CHECK(config_bool(kv, "no", true) == false);
  CHECK(config_bool(kv, "absent", true) == true);

  auto bad = parse("n=minus\nx=wide load\nb=perhaps\nneg=-3\n");
  CHECK_THROWS_AS(config_u64(bad, "n", 0), DataError);
  CHECK_THROWS_AS(config_u64(bad, "neg", 0), DataError);
  CHECK_THROWS_AS(config_double(bad, "x", 0.0), DataError);
  CHECK_THROWS_AS(config_bool(bad, "b", false), DataError);
}
