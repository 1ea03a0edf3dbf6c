#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "adjres/root_system.hpp"

namespace adjres {

// weight -> exact positive count
using WeightMultiset = std::map<Weight, Int>;

inline Int multiset_total(const WeightMultiset& ms) {
  Int t = 0;
  for (const auto& [w, c] : ms) t += c;
  return t;
}

inline WeightMultiset shifted(const WeightMultiset& ms, const Weight& by) {
  WeightMultiset r;
  for (const auto& [w, c] : ms) r.emplace(w + by, c);
  return r;
}

// Node masks select the semisimple subsystem spanned by a subset of simple
// roots (the Levi of a parabolic). Bit i set = alpha_{i+1} belongs.
using NodeMask = uint64_t;

inline NodeMask full_mask(const RootSystem& rs) { return (NodeMask(1) << rs.rank) - 1; }

inline NodeMask levi_mask(const RootSystem& rs, const std::set<int>& parabolic_nodes) {
  NodeMask m = full_mask(rs);
  for (int i : parabolic_nodes) {
    if (i < 1 || i > rs.rank) throw IndexOutOfRange("node " + std::to_string(i));
    m &= ~(NodeMask(1) << (i - 1));
  }
  return m;
}

inline bool dominant_on(const Weight& w, NodeMask mask) {
  for (size_t i = 0; i < w.size(); ++i)
    if ((mask >> i & 1) && w[i] < 0) return false;
  return true;
}

// positive roots supported on the mask
inline std::vector<int> mask_roots(const RootSystem& rs, NodeMask mask) {
  std::vector<int> out;
  for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
    const Root& a = rs.positive_roots[r];
    bool ok = true;
    for (int j = 0; j < rs.rank; ++j)
      if (a.simple_coords[j] != 0 && !(mask >> j & 1)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(static_cast<int>(r));
  }
  return out;
}

inline Weight mask_rho(const RootSystem& rs, NodeMask mask) {
  // Pairs with roots in the mask subsystem exactly like the true Levi rho.
  Weight r(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i)
    if (mask >> i & 1) r[i] = 1;
  return r;
}

// Weyl dimension formula on the subsystem selected by mask (the d_alpha factors
// cancel, so only coroot pairings appear). Exact division throughout.
inline Int dim_on_mask(const RootSystem& rs, NodeMask mask, const Weight& mu) {
  if (!dominant_on(mu, mask)) throw NotDominant("dim_on_mask: " + weight_str(mu));
  Weight rho = mask_rho(rs, mask);
  Weight shifted_mu = mu + rho;
  Int num = 1, den = 1;
  for (int r : mask_roots(rs, mask)) {
    num *= rs.pair(shifted_mu, rs.positive_roots[r]);
    den *= rs.pair(rho, rs.positive_roots[r]);
  }
  Int q = num / den;
  if (q * den != num) throw Error("weyl dimension not integral");
  return q;
}

inline Int weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (!rs.dominant(lambda)) throw NotDominant("weyl_dim: " + weight_str(lambda));
  return dim_on_mask(rs, full_mask(rs), lambda);
}

// Freudenthal recursion on the mask subsystem, carried in full G-coordinates.
// Weights are tracked by their simple-root subtraction vectors, which keeps
// every inner product an exact integer.
inline WeightMultiset freudenthal_on_mask(const RootSystem& rs, NodeMask mask,
                                          const Weight& lambda) {
  if (!dominant_on(lambda, mask)) throw NotDominant("freudenthal: " + weight_str(lambda));
  const Weight rho = mask_rho(rs, mask);
  const std::vector<int> roots = mask_roots(rs, mask);

  using KVec = std::vector<int>;
  struct KVecHash {
    size_t operator()(const KVec& k) const {
      size_t h = 1469598103934665603ull;
      for (int v : k) {
        h ^= static_cast<size_t>(v);
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  struct Entry {
    Weight coords;
    Int mult;
  };
  std::unordered_map<KVec, Entry, KVecHash> table;
  KVec k0(rs.rank, 0);
  table[k0] = Entry{lambda, 1};

  auto coords_of = [&](const KVec& k) {
    Weight w(lambda);
    for (int j = 0; j < rs.rank; ++j)
      if (k[j] != 0)
        for (int t = 0; t < rs.rank; ++t) w[t] -= k[j] * rs.cartan[t][j];
    return w;
  };

  std::vector<KVec> level{k0};
  KVec up(rs.rank, 0);
  while (!level.empty()) {
    std::set<KVec> cand;
    for (const KVec& k : level)
      for (int j = 0; j < rs.rank; ++j)
        if (mask >> j & 1) {
          KVec k2(k);
          k2[j] += 1;
          cand.insert(std::move(k2));
        }
    std::vector<KVec> next;
    for (const KVec& k : cand) {
      Weight nu = coords_of(k);
      // rhs = 2 sum_{alpha} sum_{t>=1} (nu + t alpha, alpha) m(nu + t alpha)
      Int rhs = 0;
      for (int ri : roots) {
        const Root& a = rs.positive_roots[ri];
        long base = rs.pair(nu, a);  // <nu, alpha^vee>
        up = k;
        for (int t = 1;; ++t) {
          bool feasible = true;
          for (int j = 0; j < rs.rank; ++j) {
            up[j] -= a.simple_coords[j];
            if (up[j] < 0) feasible = false;
          }
          if (!feasible) break;
          auto it = table.find(up);
          if (it == table.end()) continue;
          rhs += Int(a.half_norm) * (base + 2L * t) * it->second.mult;
        }
      }
      if (rhs == 0) continue;
      rhs *= 2;
      // denominator (lambda+rho)^2 - (nu+rho)^2 = (lambda-nu, lambda+nu+2rho)
      Weight y = lambda + nu;
      for (int j = 0; j < rs.rank; ++j) y[j] += 2 * rho[j];
      Int den = 0;
      for (int j = 0; j < rs.rank; ++j)
        if (k[j] != 0) den += Int(k[j]) * rs.sym_d[j] * y[j];
      if (den <= 0) throw Error("freudenthal: nonpositive denominator");
      Int m = rhs / den;
      if (m * den != rhs) throw Error("freudenthal: non-integral multiplicity");
      table[k] = Entry{std::move(nu), std::move(m)};
      next.push_back(k);
    }
    level.swap(next);
  }

  WeightMultiset out;
  for (auto& [k, e] : table) out[e.coords] += e.mult;
  return out;
}

inline WeightMultiset freudenthal(const RootSystem& rs, const Weight& lambda) {
  return freudenthal_on_mask(rs, full_mask(rs), lambda);
}

// Full weight multiset of the irreducible P-representation with P-dominant
// highest weight mu, restricted to the semisimple Levi and lifted back to full
// coordinates. Results are cached; the same summands recur across wedge powers.
inline const WeightMultiset& levi_irrep_weights_cached(const RootSystem& rs, NodeMask mask,
                                                       const Weight& mu) {
  struct Key {
    std::string type;
    NodeMask mask;
    Weight mu;
    bool operator<(const Key& o) const {
      if (type != o.type) return type < o.type;
      if (mask != o.mask) return mask < o.mask;
      return mu < o.mu;
    }
  };
  static std::map<Key, WeightMultiset> cache;
  static std::shared_mutex mtx;
  Key key{rs.lie_type.str(), mask, mu};
  {
    std::shared_lock lk(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  WeightMultiset ms = freudenthal_on_mask(rs, mask, mu);
  std::unique_lock lk(mtx);
  return cache.emplace(std::move(key), std::move(ms)).first->second;
}

inline WeightMultiset levi_irrep_weights(const RootSystem& rs, const std::set<int>& parabolic_nodes,
                                         const Weight& mu) {
  NodeMask mask = levi_mask(rs, parabolic_nodes);
  if (!dominant_on(mu, mask)) throw NotPDominant(weight_str(mu));
  return levi_irrep_weights_cached(rs, mask, mu);
}

// Exterior powers of a weight multiset: a weight w of count m contributes
// binomial(m,k) copies of k*w; convolution over distinct weights. Computes the
// whole family 0..pmax in one pass.
inline std::vector<WeightMultiset> exterior_family(const WeightMultiset& ms, int pmax,
                                                   int rank_hint = -1) {
  if (pmax < 0) throw POutOfRange("p = " + std::to_string(pmax));
  std::vector<WeightMultiset> dp(pmax + 1);
  if (ms.empty()) {
    if (rank_hint < 0) throw POutOfRange("exterior power of an empty multiset needs a rank");
    dp[0][Weight(rank_hint, 0)] = 1;
    return dp;
  }
  const int rank = static_cast<int>(ms.begin()->first.size());
  dp[0][Weight(rank, 0)] = 1;
  for (const auto& [w, m] : ms) {
    long mm = m.convert_to<long>();
    for (int p = pmax; p >= 1; --p) {
      for (int k = 1; k <= std::min<long>(mm, p); ++k) {
        Int binom = binomial(mm, k);
        Weight kw(rank, 0);
        for (int j = 0; j < rank; ++j) kw[j] = k * w[j];
        for (const auto& [v, c] : dp[p - k]) dp[p][v + kw] += binom * c;
      }
    }
  }
  return dp;
}

inline WeightMultiset exterior_power(const WeightMultiset& ms, int p) {
  Int total = multiset_total(ms);
  if (p < 0 || Int(p) > total)
    throw POutOfRange("p = " + std::to_string(p) + " of total " + total.str());
  return exterior_family(ms, p)[p];
}

struct LeviDecomposition {
  // (P-dominant highest weight, multiplicity), canonically ordered: the order
  // of peeling, i.e. descending Levi coroot height then descending weight.
  std::vector<std::pair<Weight, Int>> summands;
};

// Decompose a Levi representation, given by its weight multiset, into
// irreducibles. Repeatedly peel a maximal Levi-dominant weight; maximality is
// by total Levi coroot pairing (strictly monotone along positive Levi roots),
// ties broken by lexicographically larger weight.
inline LeviDecomposition peel_levi(const RootSystem& rs, const std::set<int>& parabolic_nodes,
                                   WeightMultiset ms) {
  NodeMask mask = levi_mask(rs, parabolic_nodes);
  const std::vector<int> roots = mask_roots(rs, mask);
  auto levi_height = [&](const Weight& w) {
    long h = 0;
    for (int ri : roots) h += rs.pair(w, rs.positive_roots[ri]);
    return h;
  };

  LeviDecomposition dec;
  while (!ms.empty()) {
    const Weight* best = nullptr;
    long best_h = 0;
    for (const auto& [w, c] : ms) {
      if (!dominant_on(w, mask)) continue;
      long h = levi_height(w);
      if (!best || h > best_h || (h == best_h && w > *best)) {
        best = &w;
        best_h = h;
      }
    }
    if (!best) throw NegativeMultiplicity("no Levi-dominant weight among remainder");
    Weight mu = *best;
    Int mult = ms.at(mu);
    const WeightMultiset& irrep = levi_irrep_weights_cached(rs, mask, mu);
    for (const auto& [w, c] : irrep) {
      auto it = ms.find(w);
      Int have = (it == ms.end()) ? Int(0) : it->second;
      Int need = mult * c;
      if (have < need)
        throw NegativeMultiplicity("at " + weight_str(w) + " need " + need.str() + " have " +
                                   have.str());
      if (have == need) {
        if (it != ms.end()) ms.erase(it);
      } else {
        it->second = have - need;
      }
    }
    dec.summands.emplace_back(std::move(mu), std::move(mult));
  }
  return dec;
}

}  // namespace adjres
