#pragma once

#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include "adjres/rep_calc.hpp"
#include "adjres/weyl.hpp"

namespace adjres {

// Formal sum of irreducible homogeneous bundles on G/P.
struct BundleDescription {
  std::set<int> parabolic_nodes;                 // 1-based
  std::vector<std::pair<Weight, Int>> summands;  // P-dominant weights
};

// Graded cohomology as G-representations: degree q -> (dominant weight -> mult).
struct CohomResult {
  std::map<int, std::map<Weight, Int>> groups;

  bool empty() const { return groups.empty(); }

  void add(int q, const Weight& w, const Int& mult) {
    auto& slot = groups[q][w];
    slot += mult;
    if (slot == 0) {
      groups[q].erase(w);
      if (groups[q].empty()) groups.erase(q);
    }
  }

  void add_all(const CohomResult& other, const Int& mult = 1) {
    for (const auto& [q, reps] : other.groups)
      for (const auto& [w, m] : reps) add(q, w, m * mult);
  }

  Int dim_at(const RootSystem& rs, int q) const {
    auto it = groups.find(q);
    if (it == groups.end()) return 0;
    Int d = 0;
    for (const auto& [w, m] : it->second) d += m * weyl_dim(rs, w);
    return d;
  }

  Int euler_characteristic(const RootSystem& rs) const {
    Int chi = 0;
    for (const auto& [q, reps] : groups) {
      Int d = 0;
      for (const auto& [w, m] : reps) d += m * weyl_dim(rs, w);
      chi += (q % 2 == 0) ? d : -d;
    }
    return chi;
  }

  // a single irreducible summand contributes to at most one degree
  bool concentrated() const { return groups.size() <= 1; }
};

// Bott-Borel-Weil for one irreducible bundle E_lambda on G/P: singular shifted
// weight is acyclic, otherwise a single group V_{w(lambda+rho)-rho} in degree
// l(w). Applied uniformly with the full rho and full inversion count.
inline CohomResult bbw_cohomology(const RootSystem& rs, const std::set<int>& parabolic_nodes,
                                  const Weight& lambda) {
  if (!dominant_on(lambda, levi_mask(rs, parabolic_nodes)))
    throw NotPDominant("bbw: " + weight_str(lambda));

  struct Key {
    std::string type;
    NodeMask mask;
    Weight lambda;
    bool operator<(const Key& o) const {
      if (type != o.type) return type < o.type;
      if (mask != o.mask) return mask < o.mask;
      return lambda < o.lambda;
    }
  };
  static std::map<Key, CohomResult> cache;
  static std::shared_mutex mtx;
  Key key{rs.lie_type.str(), levi_mask(rs, parabolic_nodes), lambda};
  {
    std::shared_lock lk(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  CohomResult res;
  DotResult dot = dot_normalize(rs, lambda);
  if (!dot.singular) res.add(dot.length, dot.dominant_weight, 1);

  std::unique_lock lk(mtx);
  cache.emplace(std::move(key), res);
  return res;
}

inline CohomResult bundle_cohomology(const RootSystem& rs, const BundleDescription& bundle) {
  CohomResult res;
  for (const auto& [w, m] : bundle.summands) res.add_all(bbw_cohomology(rs, bundle.parabolic_nodes, w), m);
  return res;
}

}  // namespace adjres
