#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "adjres/bbw.hpp"
#include "adjres/brackets.hpp"

using namespace adjres;

namespace {

// Independent Bott-Borel-Weil oracle for the type A flag F(1,n;n+1), straight
// from the permutation recipe: add [n+1,...,1], fail on repeats, sort
// descending, count inversions.
CohomResult typeA_bbw_oracle(const RootSystem& rs, const std::vector<int>& bracket) {
  const int n = rs.rank;
  std::vector<int> v(bracket);
  for (int i = 0; i <= n; ++i) v[i] += n + 1 - i;
  CohomResult res;
  std::set<int> distinct(v.begin(), v.end());
  if (static_cast<int>(distinct.size()) != n + 1) return res;
  int inv = 0;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] < v[j]) ++inv;
  std::sort(v.rbegin(), v.rend());
  for (int i = 0; i <= n; ++i) v[i] -= n + 1 - i;
  res.add(inv, typeA_bracket_to_weight(v), 1);
  return res;
}

// Independent oracle for OG(2,m) in types B and D: signed-permutation recipe
// on epsilon sequences with rho = [n-1+h,...,h].
CohomResult bd_bbw_oracle(const LieType& t, const std::vector<Rat>& bracket) {
  const int n = t.rank;
  const Rat h = t.series == Series::B ? Rat(1, 2) : Rat(0);
  std::vector<Rat> v(bracket);
  for (int i = 0; i < n; ++i) v[i] += Rat(n - 1 - i) + h;
  CohomResult res;
  for (int i = 0; i < n; ++i) {
    if (t.series == Series::B && v[i] == 0) return res;
    for (int j = i + 1; j < n; ++j)
      if (abs(v[i]) == abs(v[j])) return res;
  }
  int inv = 0;
  int negs = 0;
  for (int i = 0; i < n; ++i) {
    if (t.series == Series::B && v[i] < 0) ++inv;
    if (v[i] < 0) ++negs;
    for (int j = i + 1; j < n; ++j) {
      if (v[i] - v[j] < 0) ++inv;
      if (v[i] + v[j] < 0) ++inv;
    }
  }
  std::vector<Rat> d(n);
  for (int i = 0; i < n; ++i) d[i] = abs(v[i]);
  std::sort(d.rbegin(), d.rend());
  if (t.series == Series::D && negs % 2 == 1) d[n - 1] = -d[n - 1];
  for (int i = 0; i < n; ++i) d[i] -= Rat(n - 1 - i) + h;
  res.add(inv, bd_bracket_to_weight(t, d), 1);
  return res;
}

}  // namespace

TEST_CASE("BBW basics") {
  SECTION("O(-2) on P^1 has H^1 = C") {
    RootSystem rs = build_root_system(parse_lie_type("A1"));
    CohomResult c = bbw_cohomology(rs, {1}, Weight{-2});
    REQUIRE(c.groups.size() == 1);
    CHECK(c.dim_at(rs, 1) == 1);
    CHECK(c.groups.at(1).begin()->first == Weight{0});
  }
  SECTION("the ample generator on the E6 adjoint variety") {
    RootSystem rs = build_root_system(parse_lie_type("E6"));
    Weight theta = rs.highest_root().weight_coords;
    CohomResult c = bbw_cohomology(rs, {2}, theta);
    REQUIRE(c.concentrated());
    CHECK(c.dim_at(rs, 0) == 78);
  }
  SECTION("singular shifted weight is acyclic") {
    RootSystem rs = build_root_system(parse_lie_type("A1"));
    CHECK(bbw_cohomology(rs, {1}, Weight{-1}).empty());
  }
  SECTION("weights failing P-dominance are rejected") {
    RootSystem rs = build_root_system(parse_lie_type("B3"));
    CHECK_THROWS_AS(bbw_cohomology(rs, {2}, Weight{-1, 0, 0}), NotPDominant);
    CHECK_NOTHROW(bbw_cohomology(rs, {2}, Weight{0, -1, 0}));
  }
}

TEST_CASE("concentration and additivity") {
  RootSystem rs = build_root_system(parse_lie_type("C3"));
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> par(-4, 4);
  std::uniform_int_distribution<int> dom(0, 3);
  BundleDescription bundle;
  bundle.parabolic_nodes = {1};
  Int chi_sum = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Weight w{par(rng), dom(rng), dom(rng)};
    CohomResult c = bbw_cohomology(rs, {1}, w);
    CHECK(c.concentrated());
    bundle.summands.push_back({w, 1});
    chi_sum += c.euler_characteristic(rs);
  }
  CohomResult total = bundle_cohomology(rs, bundle);
  CHECK(total.euler_characteristic(rs) == chi_sum);
}

TEST_CASE("dot-action sign rule on the Borel") {
  RootSystem rs = build_root_system(parse_lie_type("B2"));
  std::set<int> borel{1, 2};
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-5, 5);
  std::uniform_int_distribution<int> node(0, rs.rank - 1);
  int done = 0;
  while (done < 30) {
    Weight w{coord(rng), coord(rng)};
    CohomResult c = bbw_cohomology(rs, borel, w);
    if (c.empty()) continue;
    ++done;
    Weight w2 = rs.simple_reflect(w + rs.rho, node(rng)) - rs.rho;
    CohomResult c2 = bbw_cohomology(rs, borel, w2);
    REQUIRE_FALSE(c2.empty());
    CHECK(c.euler_characteristic(rs) == -c2.euler_characteristic(rs));
  }
}

TEST_CASE("engine agrees with the type A permutation recipe") {
  for (int n : {2, 3, 4}) {
    RootSystem rs = build_root_system(lie_type(Series::A, n));
    std::set<int> nodes{1, n};
    INFO("A" << n);
    // catalog bundle summands for every wedge power, both twists
    for (int twist : {0, 1}) {
      int lo = twist == 1 ? 0 : 1;
      int hi = twist == 1 ? 2 * n - 2 : 2 * n - 1;
      for (int p = lo; p <= hi; ++p) {
        for (const Weight& w : typeA_wedge_summands(n, p, twist)) {
          CAPTURE(n, twist, p, w);
          CohomResult engine = bbw_cohomology(rs, nodes, w);
          CohomResult oracle = typeA_bbw_oracle(rs, weight_to_typeA_bracket(w));
          CHECK(engine.groups == oracle.groups);
        }
      }
    }
    // random P-dominant brackets
    std::mt19937 rng(n);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<int> br(n + 1);
      for (int& x : br) x = coord(rng);
      std::sort(br.begin() + 1, br.begin() + n, std::greater<int>());
      Weight w = typeA_bracket_to_weight(br);
      CAPTURE(w);
      CohomResult engine = bbw_cohomology(rs, nodes, w);
      CohomResult oracle = typeA_bbw_oracle(rs, br);
      CHECK(engine.groups == oracle.groups);
    }
  }
}

TEST_CASE("engine agrees with the B/D signed recipe") {
  for (const auto& name : {"B2", "B3", "B4", "D4", "D5"}) {
    LieType t = parse_lie_type(name);
    RootSystem rs = build_root_system(t);
    INFO(name);
    std::mt19937 rng(t.rank * 17);
    std::uniform_int_distribution<int> first(-4, 4);
    std::uniform_int_distribution<int> rest(0, 3);
    for (int trial = 0; trial < 80; ++trial) {
      // random P_2-dominant bracket: l1 >= l2 free, SO part dominant
      std::vector<Rat> br(t.rank);
      int a = first(rng), b = first(rng);
      br[0] = std::max(a, b);
      br[1] = std::min(a, b);
      std::vector<int> so(t.rank - 2);
      for (int& x : so) x = rest(rng);
      std::sort(so.begin(), so.end(), std::greater<int>());
      if (t.series == Series::D && !so.empty() && rng() % 2) so.back() = -so.back();
      for (size_t i = 0; i < so.size(); ++i) br[i + 2] = so[i];
      Weight w = bd_bracket_to_weight(t, br);
      CAPTURE(w);
      CohomResult engine = bbw_cohomology(rs, {2}, w);
      CohomResult oracle = bd_bbw_oracle(t, br);
      CHECK(engine.groups == oracle.groups);
    }
  }
}
