#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "adjres/parallel.hpp"
#include "adjres/poly.hpp"

namespace adjres {

enum class AlgebraKind { sl, sp, so };

// Explicit matrix models of the classical Lie algebras with a diagonal Cartan
// subalgebra, so every basis element is a torus weight vector. sl_n uses the
// E_ij / H_k basis; sp_2n the split symplectic form [[0,I],[-I,0]]; so_m the
// split symmetric form with ones on the antidiagonal.
struct MatrixLieAlgebra {
  AlgebraKind kind;
  int size = 0;  // matrices are size x size
  int dim = 0;
  int torus_rank = 0;
  std::vector<std::vector<std::vector<long>>> basis;
  std::vector<std::vector<int>> basis_weight;             // torus weight of each basis element
  std::vector<std::vector<std::vector<std::pair<int, long>>>> bracket;  // [a][b] -> sparse coords
  std::vector<std::vector<Int>> killing_gram;             // tr(ad_a ad_b)
  std::vector<int> exponents;

  std::string name() const {
    switch (kind) {
      case AlgebraKind::sl: return "sl_" + std::to_string(size);
      case AlgebraKind::sp: return "sp_" + std::to_string(size);
      case AlgebraKind::so: return "so_" + std::to_string(size);
    }
    return "?";
  }
};

namespace detail {

using Mat = std::vector<std::vector<long>>;

inline Mat zero_mat(int n) { return Mat(n, std::vector<long>(n, 0)); }

inline Mat commutator(const Mat& a, const Mat& b) {
  const int n = static_cast<int>(a.size());
  Mat c = zero_mat(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0 && b[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    }
  return c;
}

// Expresses matrices in the span of the basis via a precomputed rational RREF
// of the flattened basis matrix.
class BasisSolver {
 public:
  explicit BasisSolver(const std::vector<Mat>& basis) {
    const int n2 = static_cast<int>(basis[0].size() * basis[0].size());
    const int d = static_cast<int>(basis.size());
    rows_.assign(n2, std::vector<Rat>(d + n2, 0));
    for (int c = 0; c < d; ++c) {
      int r = 0;
      for (const auto& row : basis[c])
        for (long v : row) rows_[r++][c] = v;
    }
    for (int r = 0; r < n2; ++r) rows_[r][d + r] = 1;  // track the transform
    dim_ = d;
    int rank = 0;
    for (int c = 0; c < d && rank < n2; ++c) {
      int piv = -1;
      for (int r = rank; r < n2; ++r)
        if (rows_[r][c] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(rows_[rank], rows_[piv]);
      Rat lead = rows_[rank][c];
      for (auto& x : rows_[rank]) x /= lead;
      for (int r = 0; r < n2; ++r) {
        if (r == rank || rows_[r][c] == 0) continue;
        Rat f = rows_[r][c];
        for (int k = 0; k < d + n2; ++k) rows_[r][k] -= f * rows_[rank][k];
      }
      pivot_col_.push_back(c);
      ++rank;
    }
  }

  // coefficients c with sum_i c_i basis_i = m; throws if m is not in the span
  std::vector<Rat> solve(const Mat& m) const {
    const int n2 = static_cast<int>(m.size() * m.size());
    std::vector<Rat> v(n2);
    int r = 0;
    for (const auto& row : m)
      for (long x : row) v[r++] = x;
    std::vector<Rat> rhs(n2, 0);
    for (int i = 0; i < n2; ++i)
      for (int k = 0; k < n2; ++k)
        if (v[k] != 0) rhs[i] += rows_[i][dim_ + k] * v[k];
    std::vector<Rat> c(dim_, 0);
    for (size_t p = 0; p < pivot_col_.size(); ++p) c[pivot_col_[p]] = rhs[p];
    for (size_t p = pivot_col_.size(); p < static_cast<size_t>(n2); ++p)
      if (rhs[p] != 0) throw Error("matrix not in the span of the basis");
    return c;
  }

 private:
  std::vector<std::vector<Rat>> rows_;
  std::vector<int> pivot_col_;
  int dim_ = 0;
};

}  // namespace detail

inline MatrixLieAlgebra build_algebra(AlgebraKind kind, int size) {
  MatrixLieAlgebra alg;
  alg.kind = kind;
  alg.size = size;
  using detail::Mat;
  auto E = [&](int i, int j) {
    Mat m = detail::zero_mat(size);
    m[i][j] = 1;
    return m;
  };

  if (kind == AlgebraKind::sl) {
    if (size < 2 || size > 5) throw SizeOutOfRange("sl size must be 2..5");
    alg.torus_rank = size;
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) {
        if (i == j) continue;
        alg.basis.push_back(E(i, j));
        std::vector<int> w(size, 0);
        w[i] = 1;
        w[j] = -1;
        alg.basis_weight.push_back(std::move(w));
      }
    for (int k = 0; k + 1 < size; ++k) {
      Mat m = detail::zero_mat(size);
      m[k][k] = 1;
      m[k + 1][k + 1] = -1;
      alg.basis.push_back(m);
      alg.basis_weight.push_back(std::vector<int>(size, 0));
    }
    alg.exponents.resize(size - 1);
    std::iota(alg.exponents.begin(), alg.exponents.end(), 1);
  } else if (kind == AlgebraKind::sp) {
    if (size < 4 || size > 6 || size % 2) throw SizeOutOfRange("sp size must be 4 or 6");
    const int n = size / 2;
    alg.torus_rank = n;
    auto wt = [&](int slot) {  // torus weight of the standard basis vector
      std::vector<int> w(n, 0);
      if (slot < n)
        w[slot] = 1;
      else
        w[slot - n] = -1;
      return w;
    };
    auto add = [&](Mat m, int i, int j) {  // weight eps_i - eps_j of slots
      std::vector<int> w(n, 0);
      auto wi = wt(i), wj = wt(j);
      for (int k = 0; k < n; ++k) w[k] = wi[k] - wj[k];
      alg.basis.push_back(std::move(m));
      alg.basis_weight.push_back(std::move(w));
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Mat m = detail::zero_mat(size);  // [[A,0],[0,-A^T]]
        m[i][j] = 1;
        m[n + j][n + i] = -1;
        add(std::move(m), i, j);  // eps_i - eps_j
      }
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Mat b = detail::zero_mat(size);  // symmetric top-right block
        b[i][n + j] = 1;
        b[j][n + i] = 1;
        add(std::move(b), i, n + j);  // eps_i + eps_j
        Mat c = detail::zero_mat(size);
        c[n + i][j] = 1;
        c[n + j][i] = 1;
        add(std::move(c), n + i, j);  // -eps_i - eps_j
      }
    for (int i = 1; i <= n; ++i) alg.exponents.push_back(2 * i - 1);
  } else {
    if (size < 5 || size > 7) throw SizeOutOfRange("so size must be 5..7");
    alg.torus_rank = size / 2;
    const int n = alg.torus_rank;
    auto slot_wt = [&](int s) {
      std::vector<int> w(n, 0);
      if (s < n)
        w[s] = 1;
      else if (s >= size - n)
        w[size - 1 - s] = -1;
      return w;
    };
    std::set<std::pair<int, int>> used;
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) {
        if (i == j && i >= size - 1 - i) continue;
        int pi = size - 1 - j, pj = size - 1 - i;  // F_ij = -F_{pi,pj}
        if (std::make_pair(pi, pj) < std::make_pair(i, j)) continue;
        if (i == pi && j == pj) continue;  // F is identically zero
        if (!used.insert({i, j}).second) continue;
        Mat m = detail::zero_mat(size);
        m[i][j] += 1;
        m[pi][pj] -= 1;
        alg.basis.push_back(std::move(m));
        auto wi = slot_wt(i), wj = slot_wt(j);
        std::vector<int> w(n, 0);
        for (int k = 0; k < n; ++k) w[k] = wi[k] - wj[k];
        alg.basis_weight.push_back(std::move(w));
      }
    if (size % 2)
      for (int i = 1; i <= n; ++i) alg.exponents.push_back(2 * i - 1);
    else {
      for (int i = 1; i + 1 <= n; ++i) alg.exponents.push_back(2 * i - 1);
      alg.exponents.push_back(n - 1);  // D_n
      std::sort(alg.exponents.begin(), alg.exponents.end());
    }
  }
  alg.dim = static_cast<int>(alg.basis.size());
  int expected = kind == AlgebraKind::sl  ? size * size - 1
                 : kind == AlgebraKind::sp ? size * (size + 1) / 2
                                           : size * (size - 1) / 2;
  if (alg.dim != expected) throw Error("basis dimension mismatch in " + alg.name());

  detail::BasisSolver solver(alg.basis);
  alg.bracket.assign(alg.dim, std::vector<std::vector<std::pair<int, long>>>(alg.dim));
  for (int a = 0; a < alg.dim; ++a)
    for (int b = 0; b < alg.dim; ++b) {
      std::vector<Rat> c = solver.solve(detail::commutator(alg.basis[a], alg.basis[b]));
      for (int k = 0; k < alg.dim; ++k) {
        if (c[k] == 0) continue;
        if (denominator(c[k]) != 1) throw Error("non-integer structure constant");
        alg.bracket[a][b].push_back({k, static_cast<long>(numerator(c[k]).convert_to<long>())});
      }
    }

  alg.killing_gram.assign(alg.dim, std::vector<Int>(alg.dim, 0));
  for (int a = 0; a < alg.dim; ++a)
    for (int b = a; b < alg.dim; ++b) {
      // tr(ad_a ad_b) = sum_{c,d} C^d_{ac} C^c_{bd}
      Int tr = 0;
      for (int c = 0; c < alg.dim; ++c)
        for (auto [d, cad] : alg.bracket[a][c])
          for (auto [e, cbd] : alg.bracket[b][d])
            if (e == c) tr += Int(cad) * cbd;
      alg.killing_gram[a][b] = tr;
      alg.killing_gram[b][a] = tr;
    }
  return alg;
}

inline bool jacobi_identity_holds(const MatrixLieAlgebra& alg) {
  std::map<int, long> acc;
  for (int a = 0; a < alg.dim; ++a)
    for (int b = a + 1; b < alg.dim; ++b)
      for (int c = b + 1; c < alg.dim; ++c) {
        acc.clear();
        auto add3 = [&](int x, int y, int z) {
          for (auto [k, v] : alg.bracket[x][y])
            for (auto [l, w] : alg.bracket[k][z]) acc[l] += v * w;
        };
        add3(a, b, c);
        add3(b, c, a);
        add3(c, a, b);
        for (auto [k, v] : acc)
          if (v != 0) return false;
      }
  return true;
}

// The dim x dim matrix of linear forms with M(x) v = coordinates of [x, v].
struct AdMatrix {
  std::vector<std::vector<Poly>> m;
};

inline AdMatrix ad_matrix(const MatrixLieAlgebra& alg) {
  AdMatrix M;
  M.m.assign(alg.dim, std::vector<Poly>(alg.dim, Poly(alg.dim)));
  for (int a = 0; a < alg.dim; ++a)
    for (int b = 0; b < alg.dim; ++b)
      for (auto [c, coef] : alg.bracket[a][b]) {
        Poly::Monomial mono(alg.dim, 0);
        mono[a] = 1;
        M.m[c][b].add_term(mono, coef);
      }
  return M;
}

// Gram-skewness G M(x) + M(x)^T G = 0 as a polynomial identity.
inline bool gram_skew_holds(const MatrixLieAlgebra& alg, const AdMatrix& M) {
  for (int i = 0; i < alg.dim; ++i)
    for (int j = 0; j < alg.dim; ++j) {
      Poly s(alg.dim);
      for (int k = 0; k < alg.dim; ++k) {
        if (alg.killing_gram[i][k] != 0) s += M.m[k][j] * Rat(alg.killing_gram[i][k]);
        if (alg.killing_gram[k][j] != 0) s += M.m[k][i] * Rat(alg.killing_gram[k][j]);
      }
      if (!s.zero()) return false;
    }
  return true;
}

// Basic invariants as trace powers of the generic matrix: degrees e_i + 1.
inline std::vector<Poly> basic_invariants(const MatrixLieAlgebra& alg) {
  const int nv = alg.dim;
  std::vector<std::vector<Poly>> x(alg.size, std::vector<Poly>(alg.size, Poly(nv)));
  for (int a = 0; a < alg.dim; ++a) {
    Poly::Monomial mono(nv, 0);
    mono[a] = 1;
    for (int i = 0; i < alg.size; ++i)
      for (int j = 0; j < alg.size; ++j)
        if (alg.basis[a][i][j] != 0) x[i][j].add_term(mono, alg.basis[a][i][j]);
  }
  auto matmul = [&](const std::vector<std::vector<Poly>>& a,
                    const std::vector<std::vector<Poly>>& b) {
    std::vector<std::vector<Poly>> c(alg.size, std::vector<Poly>(alg.size, Poly(nv)));
    for (int i = 0; i < alg.size; ++i)
      for (int k = 0; k < alg.size; ++k) {
        if (a[i][k].zero()) continue;
        for (int j = 0; j < alg.size; ++j) {
          if (b[k][j].zero()) continue;
          c[i][j] += a[i][k] * b[k][j];
        }
      }
    return c;
  };
  std::vector<Poly> inv;
  std::vector<std::vector<Poly>> pw = x;
  int have = 1;
  for (int e : alg.exponents) {
    int want = e + 1;
    while (have < want) {
      pw = matmul(pw, x);
      ++have;
    }
    Poly tr(nv);
    for (int i = 0; i < alg.size; ++i) tr += pw[i][i];
    inv.push_back(std::move(tr));
  }
  return inv;
}

// Verifies that the Killing-dual gradient of every basic invariant is killed
// by ad, i.e. M(x) G^{-1} grad F(x) = 0 identically. The basis is orthogonal
// only up to the Gram matrix, which is inverted exactly.
inline bool check_nu_in_kernel(const MatrixLieAlgebra& alg,
                               const std::vector<Poly>& invariants) {
  const int d = alg.dim;
  // exact inverse of the Gram matrix
  std::vector<std::vector<Rat>> g(d, std::vector<Rat>(2 * d, 0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g[i][j] = Rat(alg.killing_gram[i][j]);
    g[i][d + i] = 1;
  }
  for (int c = 0; c < d; ++c) {
    int piv = -1;
    for (int r = c; r < d; ++r)
      if (g[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;  // degenerate Gram
    std::swap(g[c], g[piv]);
    Rat lead = g[c][c];
    for (auto& v : g[c]) v /= lead;
    for (int r = 0; r < d; ++r) {
      if (r == c || g[r][c] == 0) continue;
      Rat f = g[r][c];
      for (int k = 0; k < 2 * d; ++k) g[r][k] -= f * g[c][k];
    }
  }

  for (const Poly& F : invariants) {
    std::vector<Poly> grad(d, Poly(d));
    for (int i = 0; i < d; ++i) grad[i] = F.derivative(i);
    std::vector<Poly> nu(d, Poly(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (g[i][d + j] != 0) nu[i] += grad[j] * g[i][d + j];
    // [x, nu(x)] = sum_{a,b} x_a nu_b [e_a, e_b]
    std::vector<Poly> img(d, Poly(d));
    for (int a = 0; a < alg.dim; ++a) {
      Poly xa = Poly::variable(d, a);
      for (int b = 0; b < alg.dim; ++b) {
        if (nu[b].zero()) continue;
        Poly prod = xa * nu[b];
        for (auto [c, coef] : alg.bracket[a][b]) img[c] += prod * Rat(coef);
      }
    }
    for (int c = 0; c < d; ++c)
      if (!img[c].zero()) return false;
  }
  return true;
}

namespace detail {

// Rank of an integer matrix by fraction-free elimination with row content
// stripped after every step; deterministic and exact.
inline int integer_rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  auto strip = [](std::vector<Int>& row) {
    Int g = 0;
    for (const Int& v : row) g = boost::multiprecision::gcd(g, v);
    if (g > 1)
      for (Int& v : row) v /= g;
  };
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Int f = m[r][c], p = m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] = m[r][k] * p - m[rank][k] * f;
      strip(m[r]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

// Kernel dimensions of ad: g (x) U_{t-1} -> g (x) U_t for t = 0..t_max. The
// map preserves the torus weight, so it splits into blocks indexed by the
// weight of (basis element, monomial); each block is handled by exact
// integer elimination.
inline std::vector<long> graded_kernel_dims(const MatrixLieAlgebra& alg, int t_max,
                                            int threads = 1) {
  if (t_max > 8) throw DegreeBoundExceeded("t_max > 8");
  std::vector<long> out(t_max + 1, 0);

  using Mono = std::vector<int>;
  std::vector<Mono> prev{Mono(alg.dim, 0)};  // degree t-1 monomials
  for (int t = 1; t <= t_max; ++t) {
    // monomials of degree t-1, generated in canonical order
    if (t > 1) {
      std::set<Mono> next;
      for (const Mono& m : prev)
        for (int v = 0; v < alg.dim; ++v) {
          Mono m2(m);
          m2[v] += 1;
          next.insert(std::move(m2));
        }
      prev.assign(next.begin(), next.end());
    }
    // columns (a, m) grouped by weight wt(a) - wt(m)
    std::map<Mono, int> mono_id;
    for (size_t i = 0; i < prev.size(); ++i) mono_id[prev[i]] = static_cast<int>(i);
    auto mono_weight = [&](const Mono& m) {
      std::vector<int> w(alg.torus_rank, 0);
      for (int v = 0; v < alg.dim; ++v)
        if (m[v])
          for (int k = 0; k < alg.torus_rank; ++k) w[k] += m[v] * alg.basis_weight[v][k];
      return w;
    };
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> blocks;
    for (int a = 0; a < alg.dim; ++a)
      for (size_t mi = 0; mi < prev.size(); ++mi) {
        std::vector<int> w = mono_weight(prev[mi]);
        for (int k = 0; k < alg.torus_rank; ++k) w[k] = alg.basis_weight[a][k] - w[k];
        blocks[w].push_back({a, static_cast<int>(mi)});
      }

    std::vector<const std::vector<std::pair<int, int>>*> block_list;
    for (const auto& [w, cols] : blocks) block_list.push_back(&cols);
    std::vector<long> ranks(block_list.size(), 0);
    parallel_for_index(block_list.size(), threads, [&](size_t bi) {
      const auto& cols = *block_list[bi];
      // rows (c, m * x_b) indexed on demand
      std::map<std::pair<int, Mono>, int> row_id;
      std::vector<std::map<int, long>> cells;
      for (size_t ci = 0; ci < cols.size(); ++ci) {
        auto [a, mi] = cols[ci];
        for (int b = 0; b < alg.dim; ++b) {
          if (alg.bracket[a][b].empty()) continue;
          Mono mu(prev[mi]);
          mu[b] += 1;
          for (auto [c, coef] : alg.bracket[a][b]) {
            auto key = std::make_pair(c, mu);
            auto it = row_id.find(key);
            int r;
            if (it == row_id.end()) {
              r = static_cast<int>(row_id.size());
              row_id.emplace(std::move(key), r);
              cells.emplace_back();
            } else {
              r = it->second;
            }
            cells[r][static_cast<int>(ci)] += coef;
          }
        }
      }
      std::vector<std::vector<Int>> mat(cells.size(), std::vector<Int>(cols.size(), 0));
      for (size_t r = 0; r < cells.size(); ++r)
        for (auto [ci, v] : cells[r]) mat[r][ci] = v;
      ranks[bi] = static_cast<long>(cols.size()) - detail::integer_rank(std::move(mat));
    });
    long ker = 0;
    for (long k : ranks) ker += k;
    out[t] = ker;
  }
  return out;
}

// Predicted kernel Hilbert function sum_i dim U_{t-1-e_i}.
inline Int predicted_kernel_dim(const MatrixLieAlgebra& alg, int t) {
  Int s = 0;
  for (int e : alg.exponents) s += monomial_count(alg.dim, t - 1 - e);
  return s;
}

}  // namespace adjres
