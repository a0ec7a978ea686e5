#include <doctest.h>

#include <fstream>
#include <sstream>

#include "tb/words.hpp"

TEST_SUITE("golden") {
  TEST_CASE("random element for seed 42, length 8") {
    std::ifstream in(std::string(TB_GOLDEN_DIR) + "/random_seed42_len8.txt");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    std::string expected = ss.str();
    while (!expected.empty() && expected.back() == '\n') expected.pop_back();
    CHECK(tb::random_element(42, 8).to_string() == expected);
  }
}
