#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "golden_util.hpp"
#include "morsecob/expression.hpp"
#include "morsecob/reeb.hpp"

using namespace morsecob;

namespace {

const auto O = SurfaceComponent::orientable;
const auto N = SurfaceComponent::non_orientable;

}  // namespace

TEST_CASE("sphere to sphere") {
  const auto g = build_reeb(Surface({O(0)}), Surface({O(0)}));
  CHECK(g.vertices.size() == 3);
  REQUIRE(g.edges.size() == 2);
  for (const auto& e : g.edges) {
    CHECK(e.level == O(0));
    CHECK(e.r == 0);
    CHECK(e.r_prime == 0);
    CHECK_FALSE(e.in_a);
    CHECK_FALSE(e.in_b);
  }
}

TEST_CASE("torus below, two projective planes above") {
  const auto g = build_reeb(Surface({O(1)}), Surface({N(1), N(1)}));
  REQUIRE(g.edges.size() == 3);
  CHECK(g.edges[0].side == ReebGraph::Side::Lower);
  CHECK(g.edges[0].to == g.singular);
  CHECK(g.edges[0].r == 1);
  for (int i = 1; i <= 2; ++i) {
    CHECK(g.edges[i].side == ReebGraph::Side::Upper);
    CHECK(g.edges[i].from == g.singular);
    CHECK(g.edges[i].r == -1);
    CHECK(g.edges[i].r_prime == 0);
    CHECK(g.edges[i].in_a);
    CHECK(g.edges[i].in_b);
  }
}

TEST_CASE("A_low marks exactly the odd lower component") {
  const auto g = build_reeb(Surface({N(2), N(3)}), Surface({N(1)}));
  std::vector<SurfaceComponent> marked;
  for (const auto& e : g.edges) {
    if (e.side == ReebGraph::Side::Lower && e.in_a) {
      marked.push_back(e.level);
    }
  }
  CHECK(marked == std::vector<SurfaceComponent>{N(3)});
}

TEST_CASE("empty boundary is rejected") {
  CHECK_THROWS_AS(build_reeb(Surface(), Surface({O(0)})), DomainError);
}

TEST_CASE("graph shape (property)") {
  std::mt19937 rng(37);
  for (int i = 0; i < 500; ++i) {
    const auto fa = testing::random_surface(rng);
    const auto fb = testing::random_surface(rng);
    const auto g = build_reeb(fa, fb);
    CHECK(g.edges.size() == fa.size() + fb.size());
    CHECK(g.vertices.size() == fa.size() + fb.size() + 1);
    std::vector<SurfaceComponent> levels;
    for (const auto& e : g.edges) {
      // Every edge touches the interior vertex, so the graph is connected.
      CHECK((e.from == g.singular) != (e.to == g.singular));
      CHECK((e.side == ReebGraph::Side::Lower) == (e.to == g.singular));
      levels.push_back(e.level);
    }
    auto both = fa.components();
    both.insert(both.end(), fb.components().begin(), fb.components().end());
    std::sort(both.begin(), both.end());
    std::sort(levels.begin(), levels.end());
    CHECK(levels == both);
    CHECK(to_dot(g) == to_dot(build_reeb(fa, fb)));
  }
}

TEST_CASE("DOT golden files") {
  struct Fixture {
    const char* lower;
    const char* upper;
    const char* file;
  };
  const Fixture fixtures[] = {
      {"S2", "S2", "reeb_sphere.dot"},
      {"T2", "RP2 + RP2", "reeb_torus_two_rp2.dot"},
      {"K2", "RP2 + RP2", "reeb_klein_two_rp2.dot"},
  };
  std::set<std::string> seen;
  for (const auto& f : fixtures) {
    const auto dot = to_dot(build_reeb(parse_surface(f.lower), parse_surface(f.upper)));
    CHECK_MESSAGE(dot == testing::read_golden(f.file), f.file);
    seen.insert(dot);
  }
  CHECK(seen.size() == 3);
}
