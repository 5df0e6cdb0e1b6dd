#include <doctest.h>

#include <sstream>

#include "generators.hpp"
#include "golden_util.hpp"
#include "morsecob/expression.hpp"

using namespace morsecob;

namespace {

const auto O = SurfaceComponent::orientable;
const auto N = SurfaceComponent::non_orientable;

std::size_t error_offset(std::string_view text) {
  try {
    parse_surface(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected a parse error for '" << std::string(text) << "'");
  return 0;
}

}  // namespace

TEST_CASE("aliases and atoms") {
  CHECK(parse_surface("RP2 + RP2") == Surface({N(1), N(1)}));
  CHECK(parse_surface("O0") == Surface({O(0)}));
  CHECK(parse_surface("S2") == Surface({O(0)}));
  CHECK(parse_surface("T2") == Surface({O(1)}));
  CHECK(parse_surface("K2") == Surface({N(2)}));
  CHECK(parse_surface("N7") == Surface({N(7)}));
  CHECK(parse_surface("O12") == Surface({O(12)}));
}

TEST_CASE("connected sums fold within a term") {
  // T2 # RP2: chi 0 + 1 - 2 = -1 = 2 - k.
  CHECK(parse_surface("T2 # RP2") == Surface({N(3)}));
  CHECK(parse_surface("T2#T2#S2") == Surface({O(2)}));
  CHECK(parse_surface("RP2 # RP2 + T2") == Surface({O(1), N(2)}));
  CHECK(parse_surface(" K2#O1 ") == Surface({N(4)}));
}

TEST_CASE("result is canonical, identifiers follow print order") {
  const auto s = parse_surface("N3 + O2 + RP2 + S2");
  CHECK(s.components() == std::vector<SurfaceComponent>{O(0), O(2), N(1), N(3)});
  CHECK(s.to_string() == "O0 + O2 + N1 + N3");
}

TEST_CASE("errors carry byte offsets") {
  CHECK(error_offset("") == 0);
  CHECK(error_offset("N0") == 0);
  CHECK(error_offset("S2 + N0") == 5);
  CHECK(error_offset("S2 +") == 4);
  CHECK(error_offset("S2 S2") == 3);
  CHECK(error_offset("X2") == 0);
  CHECK(error_offset("RP3") == 0);
  CHECK(error_offset("O") == 1);
  CHECK(error_offset("O1x") == 2);
  CHECK(error_offset("T2 # ") == 5);
  CHECK(error_offset("O99999999999") == 1);
  try {
    parse_surface("N0");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("non-orientable genus must be >= 1") != std::string::npos);
  }
}

TEST_CASE("print then parse is a fixed point (property)") {
  std::mt19937 rng(41);
  for (int i = 0; i < 2000; ++i) {
    const auto s = testing::random_surface(rng, 1, 5, 12);
    const auto printed = format_surface(s);
    const auto reparsed = parse_surface(printed);
    CHECK(reparsed == s);
    CHECK(format_surface(reparsed) == printed);
  }
}

TEST_CASE("random expressions normalize consistently (property)") {
  std::mt19937 rng(43);
  const char* atoms[] = {"S2", "T2", "RP2", "K2", "O3", "N5", "O0", "N1"};
  for (int i = 0; i < 1000; ++i) {
    std::string text;
    const int terms = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int t = 0; t < terms; ++t) {
      if (t) {
        text += std::uniform_int_distribution<int>(0, 1)(rng) ? " + " : "+";
      }
      const int summands = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int k = 0; k < summands; ++k) {
        if (k) {
          text += " # ";
        }
        text += atoms[std::uniform_int_distribution<int>(0, 7)(rng)];
      }
    }
    const auto once = format_surface(parse_surface(text));
    CHECK(format_surface(parse_surface(once)) == once);
    CHECK(parse_surface(text).size() == static_cast<std::size_t>(terms));
  }
}

TEST_CASE("parser golden file") {
  // Each non-comment line: <input> \t <canonical form>.
  std::istringstream lines(testing::read_golden("parse_roundtrip.tsv"));
  std::string line;
  int checked = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line.front() == ';') {
      continue;
    }
    const auto tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    const auto input = line.substr(0, tab);
    const auto expected = line.substr(tab + 1);
    CHECK_MESSAGE(format_surface(parse_surface(input)) == expected, input);
    CHECK(format_surface(parse_surface(expected)) == expected);
    ++checked;
  }
  CHECK(checked >= 10);
}
