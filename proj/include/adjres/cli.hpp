#pragma once

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adjres/brackets.hpp"
#include "adjres/json_io.hpp"
#include "adjres/lie_matrix.hpp"
#include "adjres/saito.hpp"

namespace adjres {

namespace cli_detail {

struct Options {
  std::string verb;
  std::string type;
  std::vector<int> parabolic;
  std::vector<int> weight;
  int wedge = 0;
  int twist_l = 0;
  std::string sheaf = "jacobian";
  int max_degree = 3;
  std::string format = "table";
  int threads = 0;
  bool allow_e7 = false;
};

inline void print_cohom(std::ostream& out, const RootSystem& rs, const CohomResult& c,
                        const std::string& format) {
  if (format == "json") {
    out << cohom_to_json(rs, c).dump(2) << "\n";
    return;
  }
  if (c.groups.empty()) {
    out << "all cohomology groups vanish\n";
    return;
  }
  for (const auto& [q, reps] : c.groups) {
    out << "H^" << q << " =";
    for (const auto& [w, m] : reps) {
      out << " V" << weight_str(w) << "^" << m.str() << " (dim " << weyl_dim(rs, w).str() << ")";
    }
    out << "\n";
  }
}

inline int cmd_roots(const Options& opt, std::ostream& out) {
  RootSystem rs = build_root_system(parse_lie_type(opt.type));
  if (opt.format == "json") {
    nlohmann::json j;
    j["schema"] = "1";
    j["type"] = rs.lie_type.str();
    j["rank"] = rs.rank;
    j["positive_roots"] = rs.positive_roots.size();
    j["long_roots"] = rs.num_long_roots;
    j["long_simple_count"] = rs.long_simple_count;
    j["exponents"] = rs.exponents;
    j["weyl_order"] = rs.weyl_order.str();
    j["highest_root"] = rs.highest_root().weight_coords;
    j["highest_short_root"] = rs.highest_short_root().weight_coords;
    j["discriminant_degree"] = rs.discriminant_degree();
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "type: " << rs.lie_type.str() << "\n";
  out << "rank: " << rs.rank << "\n";
  out << "positive_roots: " << rs.positive_roots.size() << "\n";
  out << "exponents:";
  std::string sep = " ";
  for (int e : rs.exponents) out << sep << e, sep = " ";
  out << "\n";
  out << "weyl_order: " << rs.weyl_order.str() << "\n";
  out << "long_roots: " << rs.num_long_roots << "\n";
  out << "long_simple_count: " << rs.long_simple_count << "\n";
  out << "highest_root: " << weight_str(rs.highest_root().weight_coords) << "\n";
  out << "highest_short_root: " << weight_str(rs.highest_short_root().weight_coords) << "\n";
  out << "discriminant_degree: " << rs.discriminant_degree() << "\n";
  return 0;
}

inline int cmd_bbw(const Options& opt, std::ostream& out) {
  RootSystem rs = build_root_system(parse_lie_type(opt.type));
  if (opt.parabolic.empty()) throw Error("bbw needs --parabolic");
  if (static_cast<int>(opt.weight.size()) != rs.rank)
    throw DimensionMismatch("--weight must have rank entries");
  std::set<int> nodes(opt.parabolic.begin(), opt.parabolic.end());
  CohomResult c = bbw_cohomology(rs, nodes, opt.weight);
  print_cohom(out, rs, c, opt.format);
  return 0;
}

inline AdjointTables make_tables(const Options& opt) {
  AdjointVariety X = adjoint_catalog(parse_lie_type(opt.type));
  ComputeOptions copt;
  copt.threads = opt.threads > 0 ? opt.threads : default_threads();
  copt.allow_e7 = opt.allow_e7;
  return AdjointTables(std::move(X), copt);
}

inline int cmd_cohom(const Options& opt, std::ostream& out) {
  AdjointTables tables = make_tables(opt);
  CohomResult c = wedge_F_cohomology(tables, opt.wedge, opt.twist_l);
  print_cohom(out, tables.variety().root_system(), c, opt.format);
  return 0;
}

inline int cmd_resolve(const Options& opt, std::ostream& out, std::ostream& err) {
  AdjointTables tables = make_tables(opt);
  const AdjointVariety& X = tables.variety();
  SheafKind kind = opt.sheaf == "structure" ? SheafKind::Structure : SheafKind::Jacobian;
  BettiTable assembled = kind == SheafKind::Jacobian ? assemble_jacobian_resolution(tables)
                                                     : assemble_structure_resolution(tables);
  BettiTable predicted = predicted_resolution(X, kind);
  if (opt.format == "json")
    out << betti_to_json(X, assembled, opt.sheaf).dump(2) << "\n";
  else
    out << render_text(X, assembled);
  TableDiff diff = compare_resolutions(assembled, predicted);
  if (diff.empty()) return 0;
  err << "assembled table differs from the predicted one:\n";
  for (const auto& line : diff.lines)
    err << "  u=" << line.u << " twist=" << line.twist << " rep=" << rep_name(X, line.rep)
        << ": assembled " << line.in_a.str() << ", predicted " << line.in_b.str() << "\n";
  return 1;
}

inline int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  AdjointTables tables = make_tables(opt);
  const AdjointVariety& X = tables.variety();
  bool ok = true;

  PatternReport rep = verify_cohomology_pattern(tables);
  out << "cohomology pattern: " << (rep.ok ? "ok" : "MISMATCH") << "\n";
  for (const auto& m : rep.mismatches) err << "  " << m << "\n";
  ok = ok && rep.ok;
  if (X.epsilon == 0 && rep.ghat_p >= 0) {
    out << "quasi-minuscule entry at (p,q) = (" << rep.ghat_p << "," << rep.ghat_q << ")"
        << "; announced j = " << X.j_intro
        << (rep.ghat_p == X.j_intro ? " (agrees)" : " (disagrees)") << "\n";
  }

  for (SheafKind kind : {SheafKind::Jacobian, SheafKind::Structure}) {
    std::string name = kind == SheafKind::Jacobian ? "jacobian" : "structure";
    BettiTable assembled = kind == SheafKind::Jacobian ? assemble_jacobian_resolution(tables)
                                                       : assemble_structure_resolution(tables);
    int j_arg = (kind == SheafKind::Jacobian && rep.ghat_p >= 0) ? rep.ghat_p : -1;
    TableDiff diff = compare_resolutions(assembled, predicted_resolution(X, kind, j_arg));
    out << name << " resolution: " << (diff.empty() ? "matches prediction" : "MISMATCH") << "\n";
    if (!diff.empty()) {
      ok = false;
      for (const auto& line : diff.lines)
        err << "  u=" << line.u << " twist=" << line.twist << " rep=" << rep_name(X, line.rep)
            << ": assembled " << line.in_a.str() << ", predicted " << line.in_b.str() << "\n";
    }
  }
  if (X.epsilon == 1) {
    BettiTable assembled = assemble_jacobian_resolution(tables);
    bool minimal = minimality_witness(X, assembled);
    out << "minimality witness: " << (minimal ? "ok" : "FAILED") << "\n";
    ok = ok && minimal;
  }
  return ok ? 0 : 1;
}

inline int cmd_kernel_check(const Options& opt, std::ostream& out, std::ostream& err) {
  LieType t = parse_lie_type(opt.type);
  AlgebraKind kind;
  int size;
  switch (t.series) {
    case Series::A: kind = AlgebraKind::sl; size = t.rank + 1; break;
    case Series::B: kind = AlgebraKind::so; size = 2 * t.rank + 1; break;
    case Series::C: kind = AlgebraKind::sp; size = 2 * t.rank; break;
    case Series::D: kind = AlgebraKind::so; size = 2 * t.rank; break;
    default: throw SizeOutOfRange("kernel-check supports classical types only");
  }
  MatrixLieAlgebra alg = build_algebra(kind, size);
  out << "algebra: " << alg.name() << " (dim " << alg.dim << ")\n";
  bool ok = jacobi_identity_holds(alg);
  out << "jacobi identity: " << (ok ? "ok" : "FAILED") << "\n";

  std::vector<Poly> inv = basic_invariants(alg);
  bool nu = check_nu_in_kernel(alg, inv);
  out << "invariant gradients in ker(ad): " << (nu ? "ok" : "FAILED") << "\n";
  ok = ok && nu;

  int threads = opt.threads > 0 ? opt.threads : default_threads();
  std::vector<long> dims = graded_kernel_dims(alg, opt.max_degree, threads);
  for (int deg = 0; deg <= opt.max_degree; ++deg) {
    Int want = predicted_kernel_dim(alg, deg);
    bool match = Int(dims[deg]) == want;
    out << "ker(ad) dim at t=" << deg << ": " << dims[deg] << " (predicted " << want.str() << ")"
        << (match ? "" : " MISMATCH") << "\n";
    ok = ok && match;
  }
  if (!ok) err << "kernel check failed for " << alg.name() << "\n";
  return ok ? 0 : 1;
}

inline int cmd_saito(const Options& opt, std::ostream& out, std::ostream& err) {
  SaitoReport rep = saito_determinant_check(parse_lie_type(opt.type));
  out << "saito determinant degree: " << rep.det_degree << "\n";
  if (rep.ok)
    out << "factors exactly into the positive root forms, scalar " << rat_str(rep.scalar) << "\n";
  else
    err << "saito determinant does not factor as predicted\n";
  return rep.ok ? 0 : 1;
}

}  // namespace cli_detail

// Batch command-line surface; exit 0 on success and empty diff, 1 on theorem
// mismatch, 2 on usage errors. Output is deterministic for fixed inputs.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using cli_detail::Options;
  Options opt;

  CLI::App app{"adjres: equivariant resolutions of adjoint discriminants"};
  app.require_subcommand(1);
  std::vector<CLI::App*> subs;
  for (const char* verb :
       {"roots", "bbw", "cohom", "resolve", "verify", "kernel-check", "saito"}) {
    CLI::App* sub = app.add_subcommand(verb);
    sub->add_option("type", opt.type, "Lie type, e.g. B3 or e6")->required();
    sub->add_option("--parabolic", opt.parabolic, "parabolic nodes, e.g. 1,3")->delimiter(',');
    sub->add_option("--weight", opt.weight, "weight coordinates a,b,...")->delimiter(',');
    sub->add_option("--wedge", opt.wedge, "wedge power p");
    sub->add_option("--twist-L", opt.twist_l, "tensor by L (0 or 1)")->check(CLI::Range(0, 1));
    sub->add_option("--sheaf", opt.sheaf, "jacobian|structure")
        ->check(CLI::IsMember({"jacobian", "structure"}));
    sub->add_option("--max-degree", opt.max_degree, "degree bound t");
    sub->add_option("--format", opt.format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--threads", opt.threads, "worker pool bound");
    sub->add_flag("--allow-e7", opt.allow_e7, "opt in to the E7 computation");
    subs.push_back(sub);
  }

  std::vector<const char*> argv;
  argv.push_back("adjres");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    for (CLI::App* sub : subs) {
      if (!sub->parsed()) continue;
      opt.verb = sub->get_name();
      if (opt.verb == "roots") return cli_detail::cmd_roots(opt, out);
      if (opt.verb == "bbw") return cli_detail::cmd_bbw(opt, out);
      if (opt.verb == "cohom") return cli_detail::cmd_cohom(opt, out);
      if (opt.verb == "resolve") return cli_detail::cmd_resolve(opt, out, err);
      if (opt.verb == "verify") return cli_detail::cmd_verify(opt, out, err);
      if (opt.verb == "kernel-check") return cli_detail::cmd_kernel_check(opt, out, err);
      if (opt.verb == "saito") return cli_detail::cmd_saito(opt, out, err);
    }
    err << "usage error: unknown verb\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace adjres
