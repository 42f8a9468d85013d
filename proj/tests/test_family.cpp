#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <set>

#include "contactlab/family.hpp"
#include "contactlab/generators.hpp"
#include "contactlab/io.hpp"
#include "fixtures.hpp"

using namespace contactlab;

namespace {

// Independent oracle: distance by explicitly collecting the two ancestor
// sets and taking the symmetric difference.
int distance_oracle(const ContactFamily& f, int a, int b) {
  auto anc = [&](int c) {
    std::set<int> s;
    for (int x = f.parent[c]; x >= 0; x = f.parent[x]) s.insert(x);
    return s;
  };
  auto sa = anc(a), sb = anc(b);
  int d = 0;
  for (int x : sa)
    if (!sb.count(x) && x != a && x != b) ++d;
  for (int x : sb)
    if (!sa.count(x) && x != a && x != b) ++d;
  return d;
}

}  // namespace

TEST_CASE("validation flags the named defects") {
  auto f = fixtures::two_regions();
  REQUIRE(validate_family(f).valid());

  SECTION("point with one member") {
    f.contacts.push_back({"lonely", {0}, std::vector<int>{0}});
    f.boundary_order[0].push_back(1);
    auto rep = validate_family(f);
    REQUIRE_FALSE(rep.valid());
    bool found = false;
    for (auto& v : rep.violations) found |= v.code == "point-multiplicity";
    REQUIRE(found);
  }

  SECTION("multiplicity above k") {
    auto g = gen_point_clique(5);
    g.declared_k = 4;
    auto rep = validate_family(g);
    REQUIRE_FALSE(rep.valid());
    REQUIRE(rep.violations.front().code == "point-over-k");
  }

  SECTION("regions sharing two points are flagged only when simplicity is on") {
    ContactFamily g = fixtures::two_regions();
    g.contacts.push_back({"extra", {0, 1}, std::vector<int>{0, 1}});
    g.boundary_order[0].push_back(1);
    g.boundary_order[1].push_back(1);
    auto loose = validate_family(g, false);
    REQUIRE(loose.valid());
    REQUIRE(loose.simplicity_checked);
    REQUIRE_FALSE(loose.simple);
    auto strict = validate_family(g, true);
    REQUIRE_FALSE(strict.valid());
    REQUIRE(strict.violations.front().code == "not-simple");
  }

  SECTION("regions must not nest") {
    ContactFamily g = fixtures::two_regions();
    g.parent[1] = 0;
    auto rep = validate_family(g);
    REQUIRE_FALSE(rep.valid());
    bool found = false;
    for (auto& v : rep.violations) found |= v.code == "regions-nested";
    REQUIRE(found);
  }

  SECTION("parent cycles are caught") {
    ContactFamily g;
    g.kind = FamilyKind::Curves;
    g.declared_k = 3;
    g.curve_ids = {"x", "y"};
    g.parent = {1, 0};
    auto rep = validate_family(g);
    REQUIRE_FALSE(rep.valid());
    REQUIRE(rep.violations.front().code == "parent-cycle");
  }

  SECTION("separation closure") {
    ContactFamily g;
    g.kind = FamilyKind::Curves;
    g.declared_k = 4;
    g.curve_ids = {"outer", "inner", "stranger"};
    g.parent = {-1, 0, -1};
    // inner and stranger touch, but the separating curve `outer` is missing
    // from the point.
    g.contacts.push_back({"bad", {1, 2}, std::nullopt});
    auto rep = validate_family(g);
    REQUIRE_FALSE(rep.valid());
    REQUIRE(rep.violations.front().code == "separation-closure");
    // adding the separator fixes it
    g.contacts[0].members = {1, 2, 0};
    REQUIRE(validate_family(g).valid());
  }
}

TEST_CASE("generated instances validate") {
  REQUIRE(validate_family(gen_point_clique(10), true).valid());
  auto extremal = gen_fpb_extremal(100, 10);
  auto rep = validate_family(extremal);
  REQUIRE(rep.valid());
  REQUIRE(rep.simplicity_checked);
  REQUIRE_FALSE(rep.simple);  // nests meet c and each other at many points
  REQUIRE(validate_family(gen_random_curves(50, 8, 1, 0.3)).valid());
}

TEST_CASE("intersection graph") {
  SECTION("empty family") {
    ContactFamily f;
    f.kind = FamilyKind::Curves;
    f.declared_k = 2;
    auto g = intersection_graph(f);
    REQUIRE(g.n == 0);
    REQUIRE(g.m() == 0);
  }

  SECTION("point clique is complete") {
    auto f = gen_point_clique(3);
    auto g = intersection_graph(f);
    REQUIRE(g.n == 4);
    REQUIRE(g.m() == 6);  // K4
  }

  SECTION("extremal family edge count") {
    int n = 100, k = 10;
    auto f = gen_fpb_extremal(n, k);
    auto g = intersection_graph(f);
    long long outside = n - 2 * k + 4;
    long long expect = 2 * (k - 2) * outside   // inside x outside
                       + outside               // outside x c
                       + 2 * (k - 2)           // nest x c
                       + (k - 2) * (k - 3);    // within the two nests
    REQUIRE(static_cast<long long>(g.m()) == expect);
    // Brute-force pair scan agrees.
    long long brute = 0;
    for (int a = 0; a < f.n(); ++a)
      for (int b = a + 1; b < f.n(); ++b) {
        bool meet = false;
        for (const auto& p : f.contacts) {
          bool ina = false, inb = false;
          for (int c : p.members) {
            ina |= c == a;
            inb |= c == b;
          }
          if (ina && inb) {
            meet = true;
            break;
          }
        }
        if (meet) ++brute;
      }
    REQUIRE(brute == expect);
  }

  SECTION("invalid family is rejected") {
    ContactFamily f;
    f.kind = FamilyKind::Curves;
    f.declared_k = 2;
    f.curve_ids = {"a", "b", "c"};
    f.parent = {-1, -1, -1};
    f.contacts.push_back({"p", {0, 1, 2}, std::nullopt});  // multiplicity 3 > 2
    REQUIRE_THROWS_AS(intersection_graph(f), FamilyError);
  }
}

TEST_CASE("distance") {
  SECTION("regions are always at distance 0") {
    auto f = gen_point_clique(6);
    REQUIRE(distance(f, 0, 3) == 0);
    REQUIRE(distance(f, 2, 6) == 0);
  }

  SECTION("nest depth in the extremal family") {
    int k = 10;
    auto f = gen_fpb_extremal(60, k);
    int innermost = f.curve_index("a" + std::to_string(k - 2));
    int outside = f.curve_index("o0");
    REQUIRE(distance(f, innermost, outside) == k - 2);
    REQUIRE(distance(f, outside, innermost) == k - 2);
  }

  SECTION("parent/child are at distance 0") {
    ContactFamily f;
    f.kind = FamilyKind::Curves;
    f.declared_k = 3;
    f.curve_ids = {"outer", "inner"};
    f.parent = {-1, 0};
    f.contacts.push_back({"p", {0, 1}, std::nullopt});
    REQUIRE(distance(f, 0, 1) == 0);
  }

  SECTION("unknown curves are rejected") {
    auto f = fixtures::two_regions();
    REQUIRE_THROWS_AS(distance(f, 0, 7), std::invalid_argument);
  }

  SECTION("matches the set-based oracle and is symmetric") {
    for (std::uint64_t seed : {3u, 4u, 5u}) {
      auto f = gen_random_curves(40, 9, seed, 0.5);
      for (auto [a, b] : intersecting_pairs(f)) {
        int d = distance(f, a, b);
        REQUIRE(d == distance_oracle(f, a, b));
        REQUIRE(d == distance(f, b, a));
      }
    }
  }
}

TEST_CASE("average distance") {
  SECTION("all-roots family has average 0") {
    auto f = gen_random_curves(30, 6, 11, 0.0);
    REQUIRE(average_distance(f) == 0);
  }

  SECTION("no intersecting pairs is an error") {
    ContactFamily f;
    f.kind = FamilyKind::Curves;
    f.declared_k = 2;
    f.curve_ids = {"a", "b"};
    f.parent = {-1, -1};
    REQUIRE_THROWS_AS(average_distance(f), std::invalid_argument);
  }

  SECTION("matches the pairwise oracle on the extremal family") {
    auto f = gen_fpb_extremal(100, 10);
    auto pairs = intersecting_pairs(f);
    BigInt total = 0;
    for (auto [a, b] : pairs) total += distance_oracle(f, a, b);
    REQUIRE(average_distance(f) == Rat(total, BigInt(pairs.size())));
  }
}

TEST_CASE("c-crossing pairs") {
  SECTION("no nesting under c") {
    auto f = gen_random_curves(20, 5, 2, 0.0);
    REQUIRE(count_c_crossing_pairs(f, 0) == 0);
  }

  SECTION("extremal family caption count") {
    int n = 100, k = 10;
    auto f = gen_fpb_extremal(n, k);
    REQUIRE(count_c_crossing_pairs(f, f.curve_index("c")) ==
            2LL * (k - 2) * (n - 2 * k + 4));
  }

  SECTION("unknown curve is rejected") {
    auto f = fixtures::two_regions();
    REQUIRE_THROWS_AS(count_c_crossing_pairs(f, 9), std::invalid_argument);
  }

  SECTION("crossing bound 2ekn on the subfamily induced by a curve's neighbors") {
    for (std::uint64_t seed = 40; seed < 46; ++seed) {
      auto f = gen_random_curves(40, 8, seed, 0.6);
      auto g = intersection_graph(f);
      for (int c = 0; c < f.n(); ++c) {
        if (g.adj[c].empty()) continue;
        std::vector<char> drop(f.n(), 1);
        drop[c] = 0;
        for (int u : g.adj[c]) drop[u] = 0;
        auto [sub, map] = remove_curves(f, drop);
        int keff = 0;
        for (const auto& p : sub.contacts)
          keff = std::max(keff, static_cast<int>(p.members.size()));
        int cc = -1;
        for (int i = 0; i < sub.n(); ++i)
          if (map[i] == c) cc = i;
        REQUIRE(cc >= 0);
        double cap = 2.0 * std::exp(1.0) * keff * (sub.n() - 1);
        REQUIRE(static_cast<double>(count_c_crossing_pairs(sub, cc)) <= cap);
      }
    }
  }
}

TEST_CASE("replication") {
  SECTION("factor one is the identity") {
    auto f = gen_random_curves(15, 5, 9, 0.4);
    auto r = replicate(f, 1);
    REQUIRE(family_to_json(r) == family_to_json(f));
  }

  SECTION("factor zero is rejected; regions are rejected") {
    auto f = gen_random_curves(5, 4, 1, 0.0);
    REQUIRE_THROWS_AS(replicate(f, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(replicate(fixtures::two_regions(), 2),
                      std::invalid_argument);
  }

  SECTION("single pair doubles to six edges") {
    ContactFamily f;
    f.kind = FamilyKind::Curves;
    f.declared_k = 2;
    f.curve_ids = {"a", "b"};
    f.parent = {-1, -1};
    f.contacts.push_back({"p", {0, 1}, std::nullopt});
    auto r = replicate(f, 2);
    REQUIRE(r.n() == 4);
    REQUIRE(intersection_graph(r).m() == 6);  // C(2,2)*2 + 4*1
  }

  SECTION("edge identity and closure over random corpus, ell in 1..6") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      auto f = gen_random_curves(18, 7, seed, 0.45);
      auto st = family_stats(f);
      for (int ell = 1; ell <= 6; ++ell) {
        auto r = replicate(f, ell);
        REQUIRE(validate_family(r).valid());  // closure survives replication
        auto rst = family_stats(r);
        std::size_t expect = static_cast<std::size_t>(ell) * (ell - 1) / 2 * st.n +
                             static_cast<std::size_t>(ell) * ell * st.m;
        REQUIRE(rst.m == expect);
        REQUIRE(r.declared_k == f.declared_k * ell);
      }
    }
  }
}

TEST_CASE("family stats") {
  SECTION("point clique") {
    int k = 7;
    auto st = family_stats(gen_point_clique(k));
    REQUIRE(st.n == static_cast<std::size_t>(k + 1));
    REQUIRE(st.m == static_cast<std::size_t>(k + 1) * k / 2);
    REQUIRE(st.k_effective == k);
    REQUIRE(*st.alpha == 0);
  }

  SECTION("empty family leaves fields undefined") {
    ContactFamily f;
    f.kind = FamilyKind::Curves;
    f.declared_k = 2;
    auto st = family_stats(f);
    REQUIRE(st.n == 0);
    REQUIRE(st.m == 0);
    REQUIRE_FALSE(st.alpha.has_value());
    REQUIRE(st.max_distance == -1);
  }

  SECTION("extremal family alpha from the oracle") {
    auto f = gen_fpb_extremal(100, 10);
    auto st = family_stats(f);
    REQUIRE(st.k_effective == 10);
    auto pairs = intersecting_pairs(f);
    BigInt total = 0;
    for (auto [a, b] : pairs) total += distance_oracle(f, a, b);
    REQUIRE(*st.alpha == Rat(total, BigInt(10) * pairs.size()));
    REQUIRE(st.max_distance == 8);
  }

  SECTION("max distance stays within k_effective - 2 on the corpus") {
    for (std::uint64_t seed = 20; seed < 30; ++seed) {
      auto f = gen_random_curves(35, 8, seed, 0.5);
      auto st = family_stats(f);
      if (st.m > 0) REQUIRE(st.max_distance <= st.k_effective - 2);
    }
  }
}

TEST_CASE("instance files") {
  SECTION("round trip") {
    auto f = gen_fpb_extremal(24, 5);
    auto j = family_to_json(f);
    auto g = family_from_json(j);
    REQUIRE(family_to_json(g) == j);
  }

  SECTION("region round trip keeps rotations") {
    auto f = gen_point_clique(5);
    auto g = family_from_json(family_to_json(f));
    REQUIRE(family_to_json(g) == family_to_json(f));
    REQUIRE(g.boundary_order == f.boundary_order);
  }

  SECTION("unknown keys are rejected") {
    auto j = family_to_json(fixtures::two_regions());
    j["surprise"] = 1;
    REQUIRE_THROWS_AS(family_from_json(j), ParseError);
    auto j2 = family_to_json(fixtures::two_regions());
    j2["contacts"][0]["color"] = "red";
    REQUIRE_THROWS_AS(family_from_json(j2), ParseError);
  }

  SECTION("dangling references are rejected") {
    auto j = family_to_json(fixtures::two_regions());
    j["contacts"][0]["members"][0] = "ghost";
    REQUIRE_THROWS_AS(family_from_json(j), ParseError);
  }

  SECTION("boundary_order is rejected for curve families") {
    auto j = family_to_json(gen_fpb_extremal(24, 5));
    j["boundary_order"] = Json::object();
    REQUIRE_THROWS_AS(family_from_json(j), ParseError);
  }
}
