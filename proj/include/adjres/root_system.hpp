#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "adjres/errors.hpp"
#include "adjres/lie_type.hpp"
#include "adjres/numeric.hpp"

namespace adjres {

struct Root {
  std::vector<int> simple_coords;   // expansion in simple roots
  Weight weight_coords;             // expansion in fundamental weights (= Cartan * simple_coords)
  std::vector<int> coroot_coords;   // expansion of the coroot in simple coroots
  int half_norm = 1;                // (alpha,alpha)/2, normalised so short roots have 1
  int height = 0;
  bool is_long = false;
};

// Cartan matrix convention: cartan[i][j] = <alpha_j, alpha_i^vee>, so the j-th
// column holds the fundamental-weight coordinates of alpha_j. Node labels follow
// Bourbaki, with one catalog-wide choice in G2: alpha_1 is the long simple root,
// so the adjoint representation has highest weight varpi_1.
inline std::vector<std::vector<int>> cartan_matrix(const LieType& t) {
  const int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };  // 0-based
  switch (t.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Series::D:
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Series::E:
      // chain 1-3-4-5-...-n plus node 2 attached to node 4
      link(0, 2);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      link(1, 3);
      break;
    case Series::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;  // alpha_3 short
      break;
    case Series::G:
      a[0][1] = -1;
      a[1][0] = -3;  // alpha_1 long, alpha_2 short
      break;
  }
  return a;
}

// Symmetrizers d_i = (alpha_i, alpha_i)/2 with short roots normalised to 1.
inline std::vector<int> symmetrizers(const LieType& t) {
  const int n = t.rank;
  std::vector<int> d(n, 1);
  switch (t.series) {
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case Series::C:
      d[n - 1] = 2;
      break;
    case Series::F:
      d[0] = d[1] = 2;
      break;
    case Series::G:
      d[0] = 3;
      break;
    default:
      break;
  }
  return d;
}

namespace detail {

// |W| for a generalized Cartan matrix of finite type, by orbit-stabilizer:
// |W| = |W-orbit of varpi_leaf| * |W of the diagram minus that leaf|.
// Orbits are enumerated by BFS with simple reflections in fundamental-weight
// coordinates; every orbit used here is small (a few thousand elements).
Int weyl_order_of_gcm(const std::vector<std::vector<int>>& a);

inline std::vector<std::vector<int>> submatrix(const std::vector<std::vector<int>>& a,
                                               const std::vector<int>& keep) {
  std::vector<std::vector<int>> s(keep.size(), std::vector<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j) s[i][j] = a[keep[i]][keep[j]];
  return s;
}

inline size_t orbit_of_weight(const std::vector<std::vector<int>>& a, Weight start) {
  const int n = static_cast<int>(a.size());
  std::set<Weight> seen;
  std::vector<Weight> frontier{start};
  seen.insert(start);
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& w : frontier) {
      for (int j = 0; j < n; ++j) {
        if (w[j] == 0) continue;
        Weight r(w);
        for (int k = 0; k < n; ++k) r[k] -= w[j] * a[k][j];
        if (seen.insert(r).second) next.push_back(r);
      }
    }
    frontier.swap(next);
  }
  return seen.size();
}

inline Int weyl_order_of_gcm(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  // split off one connected component
  std::vector<int> comp{0};
  std::vector<bool> in_comp(n, false);
  in_comp[0] = true;
  for (size_t q = 0; q < comp.size(); ++q)
    for (int j = 0; j < n; ++j)
      if (!in_comp[j] && a[comp[q]][j] != 0) {
        in_comp[j] = true;
        comp.push_back(j);
      }
  if (static_cast<int>(comp.size()) < n) {
    std::vector<int> rest;
    for (int j = 0; j < n; ++j)
      if (!in_comp[j]) rest.push_back(j);
    std::sort(comp.begin(), comp.end());
    return weyl_order_of_gcm(submatrix(a, comp)) * weyl_order_of_gcm(submatrix(a, rest));
  }
  // connected: peel the highest-index leaf (Dynkin diagrams are trees)
  int leaf = -1;
  for (int i = n - 1; i >= 0; --i) {
    int deg = 0;
    for (int j = 0; j < n; ++j)
      if (j != i && a[i][j] != 0) ++deg;
    if (deg <= 1) {
      leaf = i;
      break;
    }
  }
  Weight w(n, 0);
  w[leaf] = 1;
  size_t orbit = orbit_of_weight(a, w);
  std::vector<int> keep;
  for (int j = 0; j < n; ++j)
    if (j != leaf) keep.push_back(j);
  return Int(orbit) * weyl_order_of_gcm(submatrix(a, keep));
}

}  // namespace detail

struct RootSystem {
  LieType lie_type;
  int rank;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<int> sym_d;                // (alpha_i,alpha_i)/2
  std::vector<Root> positive_roots;
  Weight rho;                            // all-ones vector
  std::vector<int> exponents;            // ascending
  Int weyl_order;                        // orbit-stabilizer product of varpi-orbit sizes
  int num_long_roots = 0;
  int long_simple_count = 0;             // s

  // <lambda, alpha^vee> for a positive root alpha
  long pair(const Weight& lambda, const Root& alpha) const {
    if (lambda.size() != alpha.coroot_coords.size())
      throw DimensionMismatch("pair: weight length " + std::to_string(lambda.size()));
    long s = 0;
    for (int j = 0; j < rank; ++j) s += static_cast<long>(lambda[j]) * alpha.coroot_coords[j];
    return s;
  }

  // <lambda, alpha_i^vee> is just the i-th coordinate; simple reflection in
  // fundamental-weight coordinates subtracts that multiple of column i.
  Weight simple_reflect(const Weight& w, int i) const {
    Weight r(w);
    for (int k = 0; k < rank; ++k) r[k] -= w[i] * cartan[k][i];
    return r;
  }

  const Root& highest_root() const {
    for (const Root& r : positive_roots)
      if (r.is_long && dominant(r.weight_coords)) return r;
    throw Error("no dominant long root");
  }

  const Root& highest_short_root() const {
    if (num_long_roots == 2 * static_cast<int>(positive_roots.size())) return highest_root();
    for (const Root& r : positive_roots)
      if (!r.is_long && dominant(r.weight_coords)) return r;
    throw Error("no dominant short root");
  }

  int discriminant_degree() const { return num_long_roots; }

  bool dominant(const Weight& w) const {
    for (int c : w)
      if (c < 0) return false;
    return true;
  }

  Weight zero_weight() const { return Weight(rank, 0); }

  Weight fundamental_weight(int i) const {  // 1-based, Bourbaki
    if (i < 1 || i > rank) throw IndexOutOfRange("fundamental weight index " + std::to_string(i));
    Weight w(rank, 0);
    w[i - 1] = 1;
    return w;
  }
};

inline RootSystem build_root_system(const LieType& t) {
  check_rank_bounds(t.series, t.rank);
  RootSystem rs;
  rs.lie_type = t;
  rs.rank = t.rank;
  rs.cartan = cartan_matrix(t);
  rs.sym_d = symmetrizers(t);
  const int n = rs.rank;

  // positive roots by closure over root strings, height by height
  std::map<std::vector<int>, int> index;
  auto add_root = [&](std::vector<int> sc, int half_norm) {
    Root r;
    r.simple_coords = std::move(sc);
    r.half_norm = half_norm;
    r.height = std::accumulate(r.simple_coords.begin(), r.simple_coords.end(), 0);
    r.weight_coords.assign(n, 0);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) r.weight_coords[k] += rs.cartan[k][j] * r.simple_coords[j];
    r.coroot_coords.assign(n, 0);
    for (int j = 0; j < n; ++j) {
      int num = r.simple_coords[j] * rs.sym_d[j];
      if (num % r.half_norm != 0) throw Error("coroot coordinates not integral");
      r.coroot_coords[j] = num / r.half_norm;
    }
    index[r.simple_coords] = static_cast<int>(rs.positive_roots.size());
    rs.positive_roots.push_back(std::move(r));
  };

  for (int i = 0; i < n; ++i) {
    std::vector<int> sc(n, 0);
    sc[i] = 1;
    add_root(std::move(sc), rs.sym_d[i]);
  }
  for (size_t q = 0; q < rs.positive_roots.size(); ++q) {
    for (int i = 0; i < n; ++i) {
      // alpha_i-string through alpha: beta = alpha + alpha_i is a root iff
      // q_str = p_str - <alpha, alpha_i^vee> >= 1, p_str = depth of the down-string.
      const Root alpha = rs.positive_roots[q];
      int p_str = 0;
      std::vector<int> down(alpha.simple_coords);
      while (true) {
        down[i] -= 1;
        if (!index.count(down)) break;
        ++p_str;
      }
      long pairing = alpha.weight_coords[i];
      if (p_str - pairing >= 1) {
        std::vector<int> up(alpha.simple_coords);
        up[i] += 1;
        if (!index.count(up)) {
          int hn = alpha.half_norm + static_cast<int>(pairing) * rs.sym_d[i] + rs.sym_d[i];
          add_root(std::move(up), hn);
        }
      }
    }
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const Root& a, const Root& b) {
              if (a.height != b.height) return a.height < b.height;
              return a.simple_coords < b.simple_coords;
            });

  int max_norm = 0;
  for (const Root& r : rs.positive_roots) max_norm = std::max(max_norm, r.half_norm);
  for (Root& r : rs.positive_roots) r.is_long = (r.half_norm == max_norm);
  for (const Root& r : rs.positive_roots)
    if (r.is_long) rs.num_long_roots += 2;
  for (int i = 0; i < n; ++i)
    if (rs.sym_d[i] == max_norm) ++rs.long_simple_count;

  rs.rho.assign(n, 1);

  // exponents = conjugate of the height partition of Phi^+
  int max_h = 0;
  for (const Root& r : rs.positive_roots) max_h = std::max(max_h, r.height);
  std::vector<int> by_height(max_h + 1, 0);
  for (const Root& r : rs.positive_roots) by_height[r.height] += 1;
  for (int j = 1; j <= by_height[1]; ++j) {
    int m = 0;
    for (int k = 1; k <= max_h; ++k)
      if (by_height[k] >= j) ++m;
    rs.exponents.push_back(m);
  }
  std::sort(rs.exponents.begin(), rs.exponents.end());

  rs.weyl_order = detail::weyl_order_of_gcm(rs.cartan);
  return rs;
}

// Orbit size of an arbitrary weight under W; used as an independent oracle for
// weyl_order on small types (the rho orbit is free, so its size is |W|).
inline size_t weyl_orbit_size(const RootSystem& rs, const Weight& w) {
  return detail::orbit_of_weight(rs.cartan, w);
}

}  // namespace adjres
