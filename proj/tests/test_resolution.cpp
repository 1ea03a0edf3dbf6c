#include <catch2/catch_amalgamated.hpp>

#include "adjres/json_io.hpp"
#include "adjres/weyman.hpp"

using namespace adjres;

namespace {

AdjointTables tables_for(const std::string& name, int threads = 2) {
  ComputeOptions opt;
  opt.threads = threads;
  return AdjointTables(adjoint_catalog(name), opt);
}

Int entry_mult(const BettiTable& t, int u, int twist, const Weight& rep) {
  for (const auto& [uu, es] : t.terms)
    if (uu == u)
      for (const auto& e : es)
        if (e.twist == twist && e.rep == rep) return e.mult;
  return 0;
}

}  // namespace

TEST_CASE("catalog constants") {
  SECTION("G2") {
    AdjointVariety X = adjoint_catalog("G2");
    CHECK(X.dim_x == 5);
    CHECK(X.index == 3);
    CHECK(X.disc_degree == 6);
    CHECK(X.s == 1);
    CHECK(X.j == 2);
    CHECK(X.qm_weight == Weight{0, 1});
    CHECK(weyl_dim(*X.rs, X.qm_weight) == 7);
    REQUIRE(X.fdual_summands.size() == 1);
    CHECK(X.fdual_summands[0].first == Weight{-2, 3});  // E_{-alpha_1}
  }
  SECTION("E6") {
    AdjointVariety X = adjoint_catalog("E6");
    CHECK(X.dim_x == 21);
    CHECK(X.index == 11);
    CHECK(X.s == 6);
    CHECK(X.epsilon == 1);
    CHECK(X.parabolic_nodes == std::set<int>{2});
  }
  SECTION("C2 is the second Veronese of P^3") {
    AdjointVariety X = adjoint_catalog("C2");
    CHECK(X.dim_x == 3);
    CHECK(X.disc_degree == 4);
    CHECK(X.s == 1);
    CHECK(X.j == 1);
  }
  SECTION("A_n has a rank-two Picard parabolic") {
    AdjointVariety X = adjoint_catalog("A3");
    CHECK(X.parabolic_nodes == std::set<int>{1, 3});
    CHECK(X.fdual_summands.size() == 2);
    CHECK(X.betti.b[1] == 2);
  }
  SECTION("E7 and E8 catalogs build, computation gated") {
    AdjointVariety e8 = adjoint_catalog("E8");
    CHECK(e8.dim_x == 57);
    CHECK(e8.index == 29);
    CHECK(e8.compute_excluded());
    CHECK_THROWS_AS(AdjointTables(e8, ComputeOptions{}), ComputeExcluded);
    AdjointVariety e7 = adjoint_catalog("E7");
    CHECK(e7.dim_x == 33);
    CHECK(e7.index == 17);
    CHECK_THROWS_AS(AdjointTables(e7, ComputeOptions{}), ComputeExcluded);  // needs opt-in
  }
}

TEST_CASE("wedge cohomology rows") {
  SECTION("twist-0 concentration on B3") {
    AdjointTables t = tables_for("B3");
    const RootSystem& rs = t.variety().root_system();
    CohomResult c = wedge_F_cohomology(t, 3, 0);
    REQUIRE(c.concentrated());
    CHECK(c.dim_at(rs, 3) == 2);  // b_3 = 2
  }
  SECTION("G2 quasi-minuscule at H^1 of the second twisted wedge") {
    AdjointTables t = tables_for("G2");
    CohomResult c = wedge_F_cohomology(t, 2, 1);
    REQUIRE(c.groups.count(1));
    CHECK(c.groups.at(1).count(Weight{0, 1}));
  }
  SECTION("p=0 twisted row is the adjoint representation") {
    for (const auto& name : {"A2", "C3", "D4", "F4"}) {
      AdjointTables t = tables_for(name);
      CohomResult c = wedge_F_cohomology(t, 0, 1);
      REQUIRE(c.groups.size() == 1);
      CHECK(c.groups.at(0) ==
            std::map<Weight, Int>{{t.variety().l_weight, 1}});
    }
  }
  SECTION("p out of range") {
    AdjointTables t = tables_for("A2");
    CHECK_THROWS_AS(wedge_F_cohomology(t, -1, 0), POutOfRange);
    CHECK_THROWS_AS(wedge_F_cohomology(t, 3, 0), POutOfRange);
  }
}

TEST_CASE("cohomology pattern reports") {
  struct Expect {
    const char* type;
    int ghat_p;
  };
  // the computed quasi-minuscule location: p = j with j = 1 (C), 2 (G2),
  // 3 (F4), n-1 (B); announced values j=3 for F4 and j=n for B_n are
  // arbitrated by this computation
  for (const Expect& e : {Expect{"A2", -1}, Expect{"A3", -1}, Expect{"C2", 1}, Expect{"C3", 1},
                          Expect{"B3", 2}, Expect{"B4", 3}, Expect{"G2", 2}, Expect{"D4", -1},
                          Expect{"F4", 3}}) {
    AdjointTables t = tables_for(e.type);
    PatternReport rep = verify_cohomology_pattern(t);
    INFO(e.type);
    for (const auto& m : rep.mismatches) UNSCOPED_INFO(m);
    CHECK(rep.ok);
    CHECK(rep.ghat_p == e.ghat_p);
    if (e.ghat_p > 0) CHECK(rep.ghat_q == e.ghat_p - 1);
  }
}

TEST_CASE("assembled resolutions equal the predicted tables") {
  for (const auto& name : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2", "F4"}) {
    AdjointTables t = tables_for(name);
    INFO(name);
    BettiTable jac = assemble_jacobian_resolution(t);
    CHECK(compare_resolutions(jac, predicted_resolution(t.variety(), SheafKind::Jacobian)).empty());
    BettiTable st = assemble_structure_resolution(t);
    CHECK(
        compare_resolutions(st, predicted_resolution(t.variety(), SheafKind::Structure)).empty());
  }
}

TEST_CASE("frozen shapes from the catalog") {
  SECTION("A2 jacobian") {
    AdjointTables t = tables_for("A2");
    BettiTable jac = assemble_jacobian_resolution(t);
    const Weight g{1, 1}, zero{0, 0};
    CHECK(entry_mult(jac, 0, 0, g) == 1);
    CHECK(entry_mult(jac, -1, -1, g) == 1);
    CHECK(entry_mult(jac, -1, -1, zero) == 1);
    CHECK(entry_mult(jac, -1, -2, zero) == 1);
    CHECK(entry_mult(jac, -2, -2, zero) == 1);
    CHECK(entry_mult(jac, -2, -3, zero) == 1);
  }
  SECTION("C2 wedge^2 C^4 at the end") {
    AdjointTables t = tables_for("C2");
    const RootSystem& rs = t.variety().root_system();
    BettiTable jac = assemble_jacobian_resolution(t);
    const Weight zero{0, 0}, ghat{0, 1};
    CHECK(entry_mult(jac, -2, -2, zero) == 1);
    CHECK(entry_mult(jac, -2, -2, ghat) == 1);
    CHECK(weyl_dim(rs, ghat) + 1 == 6);  // dim wedge^2 C^4
    // middle term has total dimension 16 = dim(C^4 (x) C^4)
    Int middle = 0;
    for (const auto& [u, es] : jac.terms)
      if (u == -1)
        for (const auto& e : es) middle += e.mult * weyl_dim(rs, e.rep);
    CHECK(middle == 16);
  }
  SECTION("B3 carries the 7-dimensional quasi-minuscule block") {
    AdjointTables t = tables_for("B3");
    BettiTable jac = assemble_jacobian_resolution(t);
    const Weight ghat{1, 0, 0};
    CHECK(entry_mult(jac, -1, -2, ghat) == 1);
    CHECK(entry_mult(jac, -2, -3, ghat) == 1);
    CHECK(weyl_dim(t.variety().root_system(), ghat) == 7);
    // trivial towers at the first s = 2 exponents {1, 3}
    const Weight zero{0, 0, 0};
    CHECK(entry_mult(jac, -1, -1, zero) == 1);
    CHECK(entry_mult(jac, -1, -3, zero) == 1);
  }
  SECTION("G2 structure sheaf: O(-6) -> O") {
    AdjointTables t = tables_for("G2");
    BettiTable st = assemble_structure_resolution(t);
    const Weight zero{0, 0};
    CHECK(entry_mult(st, 0, 0, zero) == 1);
    CHECK(entry_mult(st, -1, -6, zero) == 1);
    size_t entries = 0;
    for (const auto& [u, es] : st.terms) entries += es.size();
    CHECK(entries == 2);
  }
  SECTION("B3 structure sheaf generators at twists {0,-2}") {
    AdjointTables t = tables_for("B3");
    BettiTable st = assemble_structure_resolution(t);
    const Weight zero{0, 0, 0};
    CHECK(entry_mult(st, 0, 0, zero) == 1);
    CHECK(entry_mult(st, 0, -2, zero) == 1);
    CHECK(entry_mult(st, -1, -6, zero) == 1);
    CHECK(entry_mult(st, -1, -8, zero) == 1);
  }
  SECTION("D4 predicted twists from the exponents (1,3,3,5)") {
    AdjointVariety X = adjoint_catalog("D4");
    BettiTable p = predicted_resolution(X, SheafKind::Jacobian);
    const Weight zero{0, 0, 0, 0};
    CHECK(entry_mult(p, -1, -3, zero) == 2);
    CHECK(entry_mult(p, -1, -5, zero) == 1);
    CHECK(entry_mult(p, -1, -1, X.l_weight) == 1);
  }
  SECTION("F4 quasi-minuscule twists at the announced j = 3") {
    AdjointVariety X = adjoint_catalog("F4");
    BettiTable p = predicted_resolution(X, SheafKind::Jacobian);
    CHECK(entry_mult(p, -1, -3, X.qm_weight) == 1);
    CHECK(entry_mult(p, -2, -4, X.qm_weight) == 1);
    CHECK(weyl_dim(*X.rs, X.qm_weight) == 26);
  }
  SECTION("simply laced predictions have no quasi-minuscule entries") {
    for (const auto& name : {"A4", "D5", "E6", "E7", "E8"}) {
      AdjointVariety X = adjoint_catalog(name);
      BettiTable p = predicted_resolution(X, SheafKind::Jacobian);
      for (const auto& [u, es] : p.terms)
        for (const auto& e : es) CHECK((is_zero(e.rep) || e.rep == X.l_weight));
    }
  }
}

TEST_CASE("table comparison") {
  AdjointVariety b3 = adjoint_catalog("B3");
  BettiTable jac = predicted_resolution(b3, SheafKind::Jacobian);
  CHECK(compare_resolutions(jac, jac).empty());
  BettiTable st = predicted_resolution(b3, SheafKind::Structure);
  CHECK_FALSE(compare_resolutions(jac, st).empty());
}

TEST_CASE("minimality witness for simply laced types") {
  for (const auto& name : {"A2", "A3", "A4", "D4", "D5", "E6"}) {
    AdjointTables t = tables_for(name);
    INFO(name);
    BettiTable jac = assemble_jacobian_resolution(t);
    std::vector<std::string> pairs;
    CHECK(minimality_witness(t.variety(), jac, &pairs));
    // D4 has only odd exponents, so no twist is shared at all; elsewhere the
    // shared twists sit across consecutive exponents, in the protected
    // invariant-vs-image configuration
    if (std::string(name) == "D4") CHECK(pairs.empty());
    if (std::string(name) == "A2") CHECK(pairs.size() == 1);
  }
}

TEST_CASE("Hilbert function identities") {
  for (const auto& name : {"A2", "A3", "B3", "C2", "C3", "G2", "D4", "F4"}) {
    AdjointVariety X = adjoint_catalog(name);
    const RootSystem& rs = *X.rs;
    INFO(name);
    long dim_g = weyl_dim(rs, X.l_weight).convert_to<long>();

    // leading-coefficient identities of the two resolutions, both equal to
    // the discriminant degree d
    long sum = 0;
    for (int i = 0; i < X.s; ++i) sum += X.dim_x + 3 - 2 * rs.exponents[i];
    CHECK(sum == X.disc_degree);
    long jac_lead = dim_g - X.s;
    if (X.epsilon == 0) jac_lead -= weyl_dim(rs, X.qm_weight).convert_to<long>();
    CHECK(jac_lead == X.disc_degree);

    // alternating rank sums
    BettiTable st = predicted_resolution(X, SheafKind::Structure);
    Int st_rank = 0;
    for (const auto& [u, es] : st.terms)
      for (const auto& e : es) st_rank += (u % 2 == 0 ? e.mult : -e.mult);
    CHECK(st_rank == 0);

    // the structure resolution dominates the hypersurface Hilbert function
    // degreewise (sections of the normalization), with equality iff s = 1
    bool all_equal = true;
    for (long t = 0; t <= 10; ++t) {
      Int h = hilbert_euler(X, st, t);
      Int hyp = monomial_count(dim_g, t) - monomial_count(dim_g, t - X.disc_degree);
      CHECK(h >= hyp);
      if (h != hyp) all_equal = false;
    }
    CHECK(all_equal == (X.s == 1));
  }
}

TEST_CASE("resolution JSON schema") {
  AdjointTables t = tables_for("B3");
  BettiTable jac = assemble_jacobian_resolution(t);
  nlohmann::json j = betti_to_json(t.variety(), jac, "jacobian");
  CHECK(j["schema"] == "1");
  CHECK(j["type"] == "B3");
  CHECK(j["sheaf"] == "jacobian");
  REQUIRE(j["terms"].size() == 3);
  CHECK(j["terms"][0]["u"] == 0);
  bool found_trivial = false;
  for (const auto& term : j["terms"])
    for (const auto& e : term["entries"])
      if (e["rep"] == "trivial") found_trivial = true;
  CHECK(found_trivial);
}
