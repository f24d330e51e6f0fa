#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "charcrf/kv.hpp"
#include "charcrf/rng.hpp"
#include "doctest.h"

using namespace charcrf;

TEST_CASE("key-value parsing") {
  const KeyValueMap kv = parse_kv(
      "# a comment\n"
      "  lr = 0.01  \n"
      "\n"
      "name=tagger\n"
      "lr = 0.02\n"
      "types = PER, LOC\n");
  CHECK(kv.size() == 3);
  CHECK(kv.at("lr") == "0.02");  // later duplicate wins
  CHECK(kv.at("name") == "tagger");
  CHECK(kv.at("types") == "PER, LOC");
}

TEST_CASE("key-value dump parses back") {
  KeyValueMap kv{{"alpha", "1"}, {"beta", "two words"}, {"gamma", ""}};
  CHECK(parse_kv(dump_kv(kv)) == kv);
}

TEST_CASE("kv file loading") {
  const std::string path = "test_kv_tmp.cfg";
  {
    FILE* f = std::fopen(path.c_str(), "w");
    std::fputs("x = 1\n# c\ny = 2\n", f);
    std::fclose(f);
  }
  const KeyValueMap kv = load_kv_file(path);
  CHECK(kv.at("x") == "1");
  CHECK(kv.at("y") == "2");
  std::remove(path.c_str());
}

TEST_CASE("double formatting is shortest and exact") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-2.5) == "-2.5");
  CHECK(format_double(1e300) == "1e+300");

  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    double v = rng.uniform(-1e6, 1e6);
    if (i % 3 == 0) v = std::exp(rng.uniform(-30.0, 30.0));
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}
