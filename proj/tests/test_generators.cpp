#include <catch2/catch_amalgamated.hpp>

#include "contactlab/coloring.hpp"
#include "contactlab/family.hpp"
#include "contactlab/generators.hpp"
#include "contactlab/io.hpp"
#include "contactlab/region_graph.hpp"

using namespace contactlab;

TEST_CASE("point clique construction") {
  SECTION("parameters are checked") {
    REQUIRE_THROWS_AS(gen_point_clique(1), std::invalid_argument);
  }

  SECTION("k = 3 yields K4 with chromatic number 4") {
    auto f = gen_point_clique(3);
    auto g = intersection_graph(f);
    REQUIRE(g.n == 4);
    REQUIRE(g.m() == 6);
    REQUIRE(exact_chromatic(g) == 4);
  }

  SECTION("center multiplicity equals k") {
    auto f = gen_point_clique(490);
    REQUIRE(f.n() == 491);
    std::size_t maxmult = 0;
    for (const auto& p : f.contacts) maxmult = std::max(maxmult, p.members.size());
    REQUIRE(maxmult == 490);
    REQUIRE(validate_family(f, true).valid());
  }

  SECTION("every slice has exactly k loose neighbors") {
    int k = 9;
    auto f = gen_point_clique(k);
    auto g = build_contact_graph(f);
    for (int i = 0; i < k; ++i)
      REQUIRE(loose_neighbors(g, i).size() == static_cast<std::size_t>(k));
  }
}

TEST_CASE("extremal crossing family") {
  SECTION("parameter bounds") {
    REQUIRE_THROWS_AS(gen_fpb_extremal(100, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_fpb_extremal(3, 3), std::invalid_argument);
  }

  SECTION("minimal instance") {
    auto f = gen_fpb_extremal(4, 3);
    // c + two nests of one curve + two outside curves
    REQUIRE(f.n() == 5);
    REQUIRE(validate_family(f).valid());
    REQUIRE(count_c_crossing_pairs(f, 0) == 2 * 1 * 2);
  }

  SECTION("caption count and convergence toward 2k-4") {
    int k = 10;
    long long prev = -1;
    for (int n : {100, 1000, 10000}) {
      auto f = gen_fpb_extremal(n, k);
      auto cc = count_c_crossing_pairs(f, 0);
      REQUIRE(cc == 2LL * (k - 2) * (n - 2 * k + 4));
      REQUIRE(Rat(cc, n) < 2 * k - 4);
      if (prev >= 0) REQUIRE(Rat(cc, n) > Rat(prev, n / 10));
      prev = cc;
    }
  }

  SECTION("ratio at n = 10000 is exactly 15.9744") {
    auto f = gen_fpb_extremal(10000, 10);
    REQUIRE(Rat(count_c_crossing_pairs(f, 0), 10000) == Rat(159744, 10000));
  }
}

TEST_CASE("random curve families") {
  SECTION("nest-free families have all distances 0") {
    auto f = gen_random_curves(30, 6, 5, 0.0);
    for (auto [a, b] : intersecting_pairs(f)) REQUIRE(distance(f, a, b) == 0);
  }

  SECTION("instances validate across seeds") {
    for (std::uint64_t seed = 0; seed < 20; ++seed)
      REQUIRE(validate_family(gen_random_curves(50, 8, seed, 0.3)).valid());
  }

  SECTION("same seed reproduces byte-for-byte") {
    auto a = family_to_json(gen_random_curves(40, 7, 123, 0.4)).dump();
    auto b = family_to_json(gen_random_curves(40, 7, 123, 0.4)).dump();
    REQUIRE(a == b);
  }

  SECTION("different seeds differ") {
    auto a = family_to_json(gen_random_curves(40, 7, 1, 0.4)).dump();
    auto b = family_to_json(gen_random_curves(40, 7, 2, 0.4)).dump();
    REQUIRE(a != b);
  }
}

TEST_CASE("bad-quad fixture") {
  SECTION("floor on k") {
    REQUIRE_THROWS_AS(gen_bad_quad_fixture(100), std::invalid_argument);
  }

  auto f = gen_bad_quad_fixture(490);

  SECTION("validates as a simple k-touching region family") {
    auto rep = validate_family(f, true);
    REQUIRE(rep.valid());
    REQUIRE(rep.simple);
    std::size_t maxmult = 0;
    for (const auto& p : f.contacts)
      maxmult = std::max(maxmult, p.members.size());
    REQUIRE(maxmult == 490);
  }

  SECTION("carries bad vertices") {
    auto g = build_contact_graph(f);
    auto faces = trace_faces(g);
    auto bad = classify_bad_vertices(g, faces);
    int nbad = 0;
    for (char b : bad) nbad += b;
    REQUIRE(nbad >= 2);  // in fact every disk in the ring is bad
    REQUIRE(nbad == 2 * 490);
  }

  SECTION("every disk has exactly k+1 loose neighbors") {
    auto g = build_contact_graph(f);
    for (int v = 0; v < f.n(); ++v)
      REQUIRE(loose_neighbors(g, v).size() == 491);
  }
}
