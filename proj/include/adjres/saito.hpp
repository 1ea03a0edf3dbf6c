#pragma once

#include <vector>

#include "adjres/poly.hpp"
#include "adjres/root_system.hpp"

namespace adjres {

// Epsilon-coordinate realization of the simple roots of the classical types,
// restricted to Cartan coordinates: A_n lives on the traceless diagonal
// (n+1 coordinates with the last eliminated), B_n/C_n/D_n on (t_1..t_n).
inline std::vector<std::vector<Rat>> epsilon_simple_roots(const LieType& t) {
  const int n = t.rank;
  std::vector<std::vector<Rat>> a;
  auto eps = [&](int i, int len) {
    std::vector<Rat> v(len, 0);
    v[i] = 1;
    return v;
  };
  switch (t.series) {
    case Series::A: {
      // coordinates y_1..y_n, with y_{n+1} = -(y_1+...+y_n) eliminated
      for (int i = 0; i + 1 < n; ++i) {
        auto v = eps(i, n);
        v[i + 1] = -1;
        a.push_back(v);
      }
      std::vector<Rat> last(n, 1);  // e_n - e_{n+1} = y_n + sum y
      last[n - 1] = 2;
      a.push_back(last);
      break;
    }
    case Series::B:
    case Series::C: {
      for (int i = 0; i + 1 < n; ++i) {
        auto v = eps(i, n);
        v[i + 1] = -1;
        a.push_back(v);
      }
      auto v = eps(n - 1, n);
      if (t.series == Series::C) v[n - 1] = 2;
      a.push_back(v);
      break;
    }
    case Series::D: {
      for (int i = 0; i + 1 < n; ++i) {
        auto v = eps(i, n);
        v[i + 1] = -1;
        a.push_back(v);
      }
      auto v = eps(n - 2, n);
      v[n - 1] = 1;
      a.push_back(v);
      break;
    }
    default:
      throw RankOutOfRange("epsilon coordinates only for classical types");
  }
  return a;
}

// Restricted basic invariants on the Cartan coordinates: power sums of the
// eigenvalues, of degrees e_i + 1.
inline std::vector<Poly> restricted_invariants(const LieType& t) {
  const int n = t.rank;
  std::vector<Poly> inv;
  if (t.series == Series::A) {
    // eigenvalues y_1..y_n and y_{n+1} = -(y_1+...+y_n); power sums p_2..p_{n+1}
    for (int k = 2; k <= n + 1; ++k) {
      Poly f(n);
      for (int i = 0; i < n; ++i) {
        Poly::Monomial m(n, 0);
        m[i] = k;
        f.add_term(m, 1);
      }
      Poly s(n);
      for (int i = 0; i < n; ++i) s += Poly::variable(n, i);
      Poly acc = Poly::constant(n, 1);
      for (int q = 0; q < k; ++q) acc = acc * s;
      if (k % 2 == 0)
        f += acc;
      else
        f -= acc;
      inv.push_back(std::move(f));
    }
  } else if (t.series == Series::B || t.series == Series::C || t.series == Series::D) {
    // even power sums; in type D the last one is replaced by the Pfaffian
    // t_1...t_n, which is out of scope here (desk ranks use B/C only)
    if (t.series == Series::D) throw RankOutOfRange("type D Saito check out of scope");
    for (int k = 1; k <= n; ++k) {
      Poly f(n);
      for (int i = 0; i < n; ++i) {
        Poly::Monomial m(n, 0);
        m[i] = 2 * k;
        f.add_term(m, 1);
      }
      inv.push_back(std::move(f));
    }
  } else {
    throw RankOutOfRange("restricted invariants only for classical types");
  }
  return inv;
}

struct SaitoReport {
  bool ok = false;
  int det_degree = -1;
  Rat scalar;  // det / product of root forms
};

// Determinant of the Saito matrix (the Jacobian of the restricted basic
// invariants) must equal a nonzero scalar times the product of the positive
// root linear forms; both the degree count and the exact division are
// verified. Symbolic determinant growth restricts this to rank <= 3.
inline SaitoReport saito_determinant_check(const LieType& t) {
  if (t.rank > 3) throw RankOutOfRange("saito check restricted to rank <= 3");
  const int n = t.rank;
  RootSystem rs = build_root_system(t);

  std::vector<Poly> inv = restricted_invariants(t);
  std::vector<std::vector<Poly>> jac(n, std::vector<Poly>(n, Poly(n)));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) jac[k][i] = inv[k].derivative(i);
  Poly det = det_poly(jac);

  SaitoReport rep;
  rep.det_degree = det.degree();
  int expected = 0;
  for (int e : rs.exponents) expected += e;
  if (rep.det_degree != expected) return rep;

  std::vector<std::vector<Rat>> simple = epsilon_simple_roots(t);
  Poly quotient = det;
  for (const Root& r : rs.positive_roots) {
    Poly form(n);
    for (int j = 0; j < n; ++j) {
      if (r.simple_coords[j] == 0) continue;
      for (int i = 0; i < n; ++i) {
        if (simple[j][i] == 0) continue;
        Poly::Monomial m(n, 0);
        m[i] = 1;
        form.add_term(m, Rat(r.simple_coords[j]) * simple[j][i]);
      }
    }
    auto q = quotient.divide_exact(form);
    if (!q) return rep;
    quotient = std::move(*q);
  }
  if (quotient.degree() != 0 || quotient.zero()) return rep;
  rep.scalar = quotient.terms().begin()->second;
  rep.ok = rep.scalar != 0;
  return rep;
}

}  // namespace adjres
