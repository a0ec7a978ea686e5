#include <doctest.h>

#include <fstream>
#include <sstream>

#include "tb/cli.hpp"
#include "tb/words.hpp"

using tb::cli::run;

TEST_SUITE("cli") {
  TEST_CASE("documented examples") {
    auto r = run({"eval", "--word", "d", "--angle", "0"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1/2\n");
    r = run({"recognize", "--pl", "0:1/3"});
    CHECK(r.exit_code == 2);
    CHECK(r.out == "REJECT ArcNotPreserved {1/3,2/3}\n");
    r = run({"reduce", "--element", "[.,.,.,. ; .,.,.,. ; 0]"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "[.,.,.,. ; .,.,.,. ; 0]\n");
  }

  TEST_CASE("verbs") {
    CHECK(run({"word", "--word", "d d"}).out == "[.,.,.,. ; .,.,.,. ; 0]\n");
    CHECK(run({"invert", "--word", "d"}).out == "[.,.,.,. ; .,.,.,. ; 2]\n");
    CHECK(run({"compose", "--element", "[.,.,.,. ; .,.,.,. ; 2]", "--element", "[.,.,.,. ; .,.,.,. ; 2]"}).out ==
          "[.,.,.,. ; .,.,.,. ; 0]\n");
    CHECK(run({"abelianize", "--word", "a"}).out == "1\n");
    CHECK(run({"tau", "--word", "d"}).out == "[.,. ; .,. ; 1]\n");
    CHECK(run({"tau", "--pair", "[.,. ; .,. ; 1]"}).out == "[.,.,.,. ; .,.,.,. ; 2]\n");
    CHECK(run({"tau", "--pair", "[.,(.,.) ; (.,.),. ; 0]", "--factor"}).out == "B\n");
    CHECK(run({"gap", "--word", "a"}).out == "behind {1/6, 5/6}\n");
    CHECK(run({"gap", "--gap", "behind {1/3, 2/3}", "--transport"}).exit_code == 0);
    CHECK(run({"decompose", "--element", "[.,.,.,. ; .,.,.,. ; 0]"}).out == "\n");
    CHECK(run({"random", "--seed", "42", "--length", "8"}).out == tb::random_element(42, 8).to_string() + "\n");
    CHECK(run({"recognize", "--pl", "0:1/2"}).out == "[.,.,.,. ; .,.,.,. ; 2]\n");
  }

  TEST_CASE("standard input") {
    CHECK(run({"reduce"}, "[.,.,.,. ; .,.,.,. ; 2]\n").out == "[.,.,.,. ; .,.,.,. ; 2]\n");
    CHECK(run({"recognize"}, "0:1/2").out == "[.,.,.,. ; .,.,.,. ; 2]\n");
    CHECK(run({"decompose"}, "d").exit_code == 0);
  }

  TEST_CASE("errors") {
    CHECK(run({}).exit_code == 1);
    CHECK(run({"frobnicate"}).exit_code == 1);
    CHECK(run({"reduce", "--element", "[nonsense]"}).exit_code == 1);
    CHECK(run({"reduce", "--element", "[.,.,.,. ; .,.,.,. ; 1]"}).exit_code == 1);
    CHECK(run({"reduce", "--element", "x", "--word", "a"}).exit_code == 1);
    CHECK(run({"compose", "--element", "[.,.,.,. ; .,.,.,. ; 0]"}).exit_code == 1);
    CHECK(run({"eval", "--word", "d", "--angle", "1/5"}).exit_code == 1);
    CHECK(run({"reduce"}, "").exit_code == 1);
    auto r = run({"recognize", "--pl", "0:0,1/4:3/4"});
    CHECK(r.exit_code == 2);
    CHECK(r.out == "REJECT SlopeNotPowerOfTwo 0\n");
    r = run({"tau", "--word", "a"});
    CHECK(r.exit_code == 2);
    CHECK(r.out.rfind("REJECT NotInRist", 0) == 0);
  }

  TEST_CASE("render") {
    auto count = [](const std::string& s, const std::string& what) {
      std::size_t n = 0;
      for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
      return n;
    };
    auto base = run({"render", "--diagram", ".,.,.,."});
    CHECK(base.exit_code == 0);
    CHECK(count(base.out, "<path") == 2);
    CHECK(count(base.out, "<circle") == 1);
    auto alpha = run({"render", "--word", "a"});
    CHECK(count(alpha.out, "<g class=") == 2);
    CHECK(count(alpha.out, "<path") == 6);
    CHECK(count(alpha.out, "class=\"dot\"") == 2);
    CHECK(run({"render", "--word", "a"}).out == alpha.out);
    CHECK(run({"render", "--word", "a", "--style", "fancy"}).exit_code == 1);
  }

  TEST_CASE("output file") {
    const std::string path = "tb_cli_test_output.txt";
    auto r = run({"word", "--word", "d", "--out", path});
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "[.,.,.,. ; .,.,.,. ; 2]\n");
    std::remove(path.c_str());
  }
}
