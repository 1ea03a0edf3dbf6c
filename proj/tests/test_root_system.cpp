#include <catch2/catch_amalgamated.hpp>

#include "adjres/root_system.hpp"

using namespace adjres;

namespace {

const std::vector<std::string> kCatalog = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4",
                                           "C2", "C3", "C4", "D4", "D5", "G2", "F4", "E6"};

}  // namespace

TEST_CASE("type strings parse case-insensitively") {
  CHECK(parse_lie_type("a3").str() == "A3");
  CHECK(parse_lie_type("E6").rank == 6);
  CHECK_THROWS_AS(parse_lie_type("E9"), RankOutOfRange);
  CHECK_THROWS_AS(parse_lie_type("B1"), RankOutOfRange);
  CHECK_THROWS_AS(parse_lie_type("H3"), RankOutOfRange);
  CHECK_THROWS_AS(parse_lie_type("A"), RankOutOfRange);
}

TEST_CASE("A2 root data") {
  RootSystem rs = build_root_system(parse_lie_type("A2"));
  CHECK(rs.positive_roots.size() == 3);
  CHECK(rs.exponents == std::vector<int>{1, 2});
  CHECK(rs.weyl_order == 6);
  CHECK(rs.num_long_roots == 6);  // simply laced: all roots long
  CHECK(rs.discriminant_degree() == 6);
  CHECK(rs.highest_root().weight_coords == Weight{1, 1});
  CHECK(rs.highest_short_root().weight_coords == Weight{1, 1});
}

TEST_CASE("A1 is sl_2") {
  RootSystem rs = build_root_system(parse_lie_type("A1"));
  CHECK(rs.positive_roots.size() == 1);
  CHECK(rs.exponents == std::vector<int>{1});
  CHECK(rs.weyl_order == 2);
}

TEST_CASE("G2 with the long alpha_1 convention") {
  RootSystem rs = build_root_system(parse_lie_type("G2"));
  CHECK(rs.positive_roots.size() == 6);
  CHECK(rs.exponents == std::vector<int>{1, 5});
  CHECK(rs.num_long_roots == 6);
  CHECK(rs.long_simple_count == 1);
  CHECK(rs.weyl_order == 12);
  // the adjoint representation is V_{varpi_1}, the quasi-minuscule V_{varpi_2}
  CHECK(rs.highest_root().weight_coords == Weight{1, 0});
  CHECK(rs.highest_short_root().weight_coords == Weight{0, 1});
}

TEST_CASE("E6 exponents and Weyl order") {
  RootSystem rs = build_root_system(parse_lie_type("E6"));
  CHECK(rs.positive_roots.size() == 36);
  CHECK(rs.exponents == std::vector<int>{1, 4, 5, 7, 8, 11});
  CHECK(rs.weyl_order == 51840);
}

TEST_CASE("B3 highest roots") {
  RootSystem rs = build_root_system(parse_lie_type("B3"));
  CHECK(rs.highest_root().weight_coords == Weight{0, 1, 0});
  CHECK(rs.highest_short_root().weight_coords == Weight{1, 0, 0});
  CHECK(rs.num_long_roots == 12);
}

TEST_CASE("C2 discriminant degree") {
  RootSystem rs = build_root_system(parse_lie_type("C2"));
  CHECK(rs.positive_roots.size() == 4);
  CHECK(rs.discriminant_degree() == 4);
  CHECK(rs.long_simple_count == 1);
}

TEST_CASE("pairings") {
  RootSystem rs = build_root_system(parse_lie_type("A2"));
  const Root* a1 = nullptr;
  for (const Root& r : rs.positive_roots)
    if (r.simple_coords == std::vector<int>{1, 0}) a1 = &r;
  REQUIRE(a1);
  CHECK(rs.pair(Weight{1, 0}, *a1) == 1);
  CHECK(rs.pair(Weight{0, 1}, *a1) == 0);
  CHECK(rs.pair(rs.rho, rs.highest_root()) == 2);
  CHECK(rs.pair(Weight{0, 0}, rs.highest_root()) == 0);
  CHECK_THROWS_AS(rs.pair(Weight{1}, *a1), DimensionMismatch);
}

TEST_CASE("exponent identities across the catalog") {
  for (const auto& name : kCatalog) {
    RootSystem rs = build_root_system(parse_lie_type(name));
    INFO(name);
    long sum = 0;
    Int prod = 1;
    for (int e : rs.exponents) {
      sum += e;
      prod *= (e + 1);
    }
    CHECK(sum == static_cast<long>(rs.positive_roots.size()));
    CHECK(prod == rs.weyl_order);
    // palindromy e_i + e_{n+1-i} = h constant
    int h = rs.exponents.front() + rs.exponents.back();
    for (size_t i = 0; i < rs.exponents.size(); ++i)
      CHECK(rs.exponents[i] + rs.exponents[rs.exponents.size() - 1 - i] == h);
    if (rs.lie_type.simply_laced())
      CHECK(rs.num_long_roots == 2 * static_cast<int>(rs.positive_roots.size()));
  }
}

TEST_CASE("weyl order matches the rho-orbit size on small types") {
  for (const auto& name : kCatalog) {
    RootSystem rs = build_root_system(parse_lie_type(name));
    if (rs.weyl_order > 60000) continue;  // E6 is the largest we enumerate here
    INFO(name);
    CHECK(Int(weyl_orbit_size(rs, rs.rho)) == rs.weyl_order);
  }
}

TEST_CASE("root closure is idempotent") {
  for (const auto& name : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    RootSystem rs = build_root_system(parse_lie_type(name));
    INFO(name);
    // re-running the string closure from the full set adds nothing
    std::set<std::vector<int>> have;
    for (const Root& r : rs.positive_roots) have.insert(r.simple_coords);
    size_t before = have.size();
    for (const Root& r : rs.positive_roots) {
      for (int i = 0; i < rs.rank; ++i) {
        int p = 0;
        std::vector<int> down(r.simple_coords);
        while (true) {
          down[i] -= 1;
          if (!have.count(down)) break;
          ++p;
        }
        if (p - r.weight_coords[i] >= 1) {
          std::vector<int> up(r.simple_coords);
          up[i] += 1;
          have.insert(up);
        }
      }
    }
    CHECK(have.size() == before);
  }
}

TEST_CASE("E7 and E8 root data stay exact") {
  RootSystem e7 = build_root_system(parse_lie_type("E7"));
  CHECK(e7.positive_roots.size() == 63);
  CHECK(e7.exponents == std::vector<int>{1, 5, 7, 9, 11, 13, 17});
  CHECK(e7.weyl_order == 2903040);
  RootSystem e8 = build_root_system(parse_lie_type("E8"));
  CHECK(e8.positive_roots.size() == 120);
  CHECK(e8.exponents == std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
  CHECK(e8.weyl_order == 696729600);
}
