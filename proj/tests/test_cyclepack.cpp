#include <catch2/catch_amalgamated.hpp>

#include "contactlab/cyclepack.hpp"
#include "contactlab/io.hpp"

using namespace contactlab;

namespace {

PlanarDigraph mutual_triangle() {
  return PlanarDigraph::from_arcs(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}, {0, 2}});
}

}  // namespace

TEST_CASE("cycle enumeration") {
  SECTION("a single 2-cycle") {
    auto g = PlanarDigraph::from_arcs(2, {{0, 1}, {1, 0}});
    auto cycles = enumerate_cycles(g, 10);
    REQUIRE(cycles.size() == 1);
    REQUIRE(cycles[0] == std::vector<int>{0, 1});
  }

  SECTION("directed triangle") {
    auto g = PlanarDigraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
    auto cycles = enumerate_cycles(g, 10);
    REQUIRE(cycles.size() == 1);
    REQUIRE(cycles[0].size() == 3);
  }

  SECTION("three mutual pairs give five cycles") {
    auto cycles = enumerate_cycles(mutual_triangle(), 10);
    REQUIRE(cycles.size() == 5);  // three 2-cycles, two directed triangles
    int twos = 0, threes = 0;
    for (const auto& c : cycles) {
      if (c.size() == 2) ++twos;
      if (c.size() == 3) ++threes;
    }
    REQUIRE(twos == 3);
    REQUIRE(threes == 2);
  }

  SECTION("limit is enforced") {
    REQUIRE_THROWS_AS(enumerate_cycles(mutual_triangle(), 3), LimitError);
  }

  SECTION("deterministic order") {
    auto a = enumerate_cycles(mutual_triangle(), 10);
    auto b = enumerate_cycles(mutual_triangle(), 10);
    REQUIRE(a == b);
  }
}

TEST_CASE("digraph validation") {
  REQUIRE_THROWS_AS(
      validate_digraph(PlanarDigraph::from_arcs(2, {{0, 1}, {0, 1}})),
      std::invalid_argument);
  REQUIRE_THROWS_AS(validate_digraph(PlanarDigraph::from_arcs(2, {{0, 0}})),
                    std::invalid_argument);
  // K5 with all antiparallel pairs: support 10 > 3*5-6
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) arcs.emplace_back(i, j);
  REQUIRE_THROWS_AS(validate_digraph(PlanarDigraph::from_arcs(5, arcs)),
                    std::invalid_argument);

  SECTION("rotation systems are checked against Euler's formula") {
    // triangular bipyramid: equator 0,1,2 and apexes 3,4
    PlanarDigraph g = PlanarDigraph::from_arcs(
        5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4},
            {2, 4}});
    std::vector<std::vector<int>> rot(5);
    rot[0] = {0, 3, 2, 6};
    rot[1] = {1, 4, 0, 7};
    rot[2] = {2, 5, 1, 8};
    rot[3] = {3, 4, 5};
    rot[4] = {6, 8, 7};  // apexes see the equator in opposite orders
    g.rotation = rot;
    REQUIRE_NOTHROW(validate_digraph(g));
    rot[4] = {6, 7, 8};  // same orientation at both apexes: genus 1
    g.rotation = rot;
    REQUIRE_THROWS_AS(validate_digraph(g), std::invalid_argument);
    rot[4] = {6, 8};  // incomplete rotation
    g.rotation = rot;
    REQUIRE_THROWS_AS(validate_digraph(g), std::invalid_argument);
  }
}

TEST_CASE("integral packing") {
  SECTION("two vertex-disjoint triangles") {
    auto g = PlanarDigraph::from_arcs(
        6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    auto cycles = enumerate_cycles(g, 100);
    std::vector<std::vector<int>> witness;
    REQUIRE(nu_exact(g, cycles, &witness) == 2);
    REQUIRE(witness.size() == 2);
  }

  SECTION("mutual triangle packs only one cycle") {
    auto cycles = enumerate_cycles(mutual_triangle(), 100);
    REQUIRE(nu_exact(mutual_triangle(), cycles) == 1);
  }

  SECTION("acyclic digraph packs nothing") {
    auto g = PlanarDigraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto cycles = enumerate_cycles(g, 100);
    REQUIRE(cycles.empty());
    REQUIRE(nu_exact(g, cycles) == 0);
  }
}

TEST_CASE("fractional packing") {
  SECTION("directed triangle has value 1") {
    auto g = PlanarDigraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
    auto pk = pack_cycles(g, 100);
    REQUIRE(pk.nu_star == 1);
    REQUIRE(pk.nu == 1);
  }

  SECTION("mutual triangle reaches 3/2 with weight 1/2 per 2-cycle") {
    auto pk = pack_cycles(mutual_triangle(), 100);
    REQUIRE(pk.nu == 1);
    REQUIRE(pk.nu_star == Rat(3, 2));
    // weights: 1/2 on each 2-cycle is optimal and what the simplex finds
    Rat two_cycle_weight = 0;
    for (std::size_t i = 0; i < pk.cycles.size(); ++i)
      if (pk.cycles[i].size() == 2) two_cycle_weight += pk.weights[i];
    REQUIRE(two_cycle_weight == Rat(3, 2));
    // dual certificate: y >= 0, covers every cycle, sums to nu_star
    Rat dual_sum = 0;
    for (const auto& y : pk.dual) {
      REQUIRE(y >= 0);
      dual_sum += y;
    }
    REQUIRE(dual_sum == Rat(3, 2));
    for (const auto& c : pk.cycles) {
      Rat cover = 0;
      for (int v : c) cover += pk.dual[v];
      REQUIRE(cover >= 1);
    }
    // common-denominator form: 3 cycles, each vertex on at most 2
    REQUIRE(pk.rs_n == 3);
    REQUIRE(pk.rs_k == 2);
    std::vector<BigInt> loads(3, 0);
    BigInt total = 0;
    for (std::size_t i = 0; i < pk.cycles.size(); ++i) {
      total += pk.rs_multiplicity[i];
      for (int v : pk.cycles[i]) loads[v] += pk.rs_multiplicity[i];
    }
    REQUIRE(total == pk.rs_n);
    for (const auto& l : loads) REQUIRE(l <= pk.rs_k);
  }

  SECTION("two triangles sharing a vertex are limited to 1") {
    auto g = PlanarDigraph::from_arcs(
        5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    auto pk = pack_cycles(g, 100);
    REQUIRE(pk.nu == 1);
    REQUIRE(pk.nu_star == 1);
  }

  SECTION("per-vertex load never exceeds 1") {
    auto pk = pack_cycles(mutual_triangle(), 100);
    for (int v = 0; v < 3; ++v) {
      Rat load = 0;
      for (std::size_t i = 0; i < pk.cycles.size(); ++i)
        for (int u : pk.cycles[i])
          if (u == v) load += pk.weights[i];
      REQUIRE(load <= 1);
    }
  }

  SECTION("nu never exceeds nu_star") {
    std::vector<PlanarDigraph> probes{
        mutual_triangle(),
        PlanarDigraph::from_arcs(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 1},
                                     {2, 0}, {0, 3}}),
        PlanarDigraph::from_arcs(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4},
                                     {4, 2}, {1, 0}}),
    };
    for (const auto& g : probes) {
      auto pk = pack_cycles(g, 1000);
      REQUIRE(Rat(pk.nu) <= pk.nu_star);
      // integral witness cycles are vertex-disjoint
      std::vector<int> used(g.n(), 0);
      for (const auto& c : pk.nu_witness)
        for (int v : c) REQUIRE(++used[v] == 1);
    }
  }
}

TEST_CASE("ratio report") {
  SECTION("mutual triangle") {
    auto rep = ratio_report(mutual_triangle(), 100);
    REQUIRE(rep.nu == 1);
    REQUIRE(rep.ratio == Rat(3, 2));
    REQUIRE(rep.within_proved);
    REQUIRE(rep.within_conjectured);
  }

  SECTION("disjoint triangles have ratio 1") {
    auto g = PlanarDigraph::from_arcs(
        6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    auto rep = ratio_report(g, 100);
    REQUIRE(rep.ratio == 1);
  }

  SECTION("acyclic input is rejected") {
    auto g = PlanarDigraph::from_arcs(3, {{0, 1}, {1, 2}});
    REQUIRE_THROWS_AS(ratio_report(g, 100), std::invalid_argument);
  }
}

TEST_CASE("digraph files") {
  SECTION("round trip with rotation") {
    PlanarDigraph g;
    g.labels = {"a", "b", "c"};
    g.arcs = {{0, 1}, {1, 0}, {1, 2}};
    g.rotation = std::vector<std::vector<int>>{{0, 1}, {0, 1, 2}, {2}};
    auto j = digraph_to_json(g);
    auto h = digraph_from_json(j);
    REQUIRE(digraph_to_json(h) == j);
  }

  SECTION("unknown keys and bad references are rejected") {
    auto j = digraph_to_json(mutual_triangle());
    j["extra"] = true;
    REQUIRE_THROWS_AS(digraph_from_json(j), ParseError);
    auto j2 = digraph_to_json(mutual_triangle());
    j2["arcs"].push_back(Json::array({"v0", "ghost"}));
    REQUIRE_THROWS_AS(digraph_from_json(j2), ParseError);
  }
}
