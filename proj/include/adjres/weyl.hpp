#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "adjres/root_system.hpp"

namespace adjres {

struct DotResult {
  bool singular = false;
  Weight dominant_weight;  // w(lambda+rho)-rho when regular
  int length = 0;          // l(w) = #{alpha>0 : <lambda+rho, alpha^vee> < 0}
};

// Dominant representative of lambda under the rho-shifted (dot) action.
// Singular iff lambda+rho lies on some wall; no tolerance exists or is needed.
inline DotResult dot_normalize(const RootSystem& rs, const Weight& lambda) {
  Weight v = lambda + rs.rho;
  DotResult res;
  for (const Root& a : rs.positive_roots) {
    long p = rs.pair(v, a);
    if (p == 0) {
      res.singular = true;
      return res;
    }
    if (p < 0) ++res.length;
  }
  // inversion count is fixed; now sort v into the dominant chamber
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank; ++i) {
      if (v[i] < 0) {
        v = rs.simple_reflect(v, i);
        moved = true;
      }
    }
  }
  res.dominant_weight = v - rs.rho;
  return res;
}

struct BettiSequence {
  std::vector<Int> b;  // b[p] = dim H^p(Omega^p_X) = #{w in W^P : l(w)=p}

  Int sum() const {
    Int s = 0;
    for (const Int& x : b) s += x;
    return s;
  }
  bool palindromic() const {
    for (size_t p = 0; p < b.size(); ++p)
      if (b[p] != b[b.size() - 1 - p]) return false;
    return true;
  }
};

// Betti numbers of G/P via minimal coset representatives: BFS over the W-orbit
// of a weight supported exactly on the parabolic nodes; each orbit element
// contributes at its inversion count. parabolic_nodes uses 1-based labels.
inline BettiSequence coset_betti(const RootSystem& rs, const std::set<int>& parabolic_nodes) {
  if (parabolic_nodes.empty()) throw EmptyParabolic("coset_betti needs at least one node");
  for (int i : parabolic_nodes)
    if (i < 1 || i > rs.rank) throw IndexOutOfRange("parabolic node " + std::to_string(i));

  Weight chi(rs.rank, 0);
  for (int i : parabolic_nodes) chi[i - 1] = 1;

  std::map<int, Int> counts;
  std::set<Weight> seen;
  std::vector<Weight> frontier{chi};
  seen.insert(chi);
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& w : frontier) {
      int inv = 0;
      for (const Root& a : rs.positive_roots)
        if (rs.pair(w, a) < 0) ++inv;
      counts[inv] += 1;
      for (int j = 0; j < rs.rank; ++j) {
        if (w[j] == 0) continue;
        Weight r = rs.simple_reflect(w, j);
        if (seen.insert(r).second) next.push_back(r);
      }
    }
    frontier.swap(next);
  }
  BettiSequence seq;
  int max_p = counts.rbegin()->first;
  seq.b.assign(max_p + 1, 0);
  for (const auto& [p, c] : counts) seq.b[p] = c;
  return seq;
}

}  // namespace adjres
