#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "adjres/adjoint_variety.hpp"

namespace adjres {

// One free summand rep(twist)^mult of a term of an equivariant graded free
// resolution. The zero weight denotes the trivial representation.
struct BettiEntry {
  int twist = 0;
  Weight rep;
  Int mult = 0;
};

struct BettiTable {
  // ordered by homological position u = 0, -1, -2, ...
  std::vector<std::pair<int, std::vector<BettiEntry>>> terms;

  std::vector<BettiEntry>& at(int u) {
    for (auto& [uu, es] : terms)
      if (uu == u) return es;
    terms.emplace_back(u, std::vector<BettiEntry>{});
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return at(u);
  }

  void add(int u, int twist, const Weight& rep, const Int& mult) {
    if (mult == 0) return;
    auto& es = at(u);
    for (auto& e : es)
      if (e.twist == twist && e.rep == rep) {
        e.mult += mult;
        return;
      }
    es.push_back(BettiEntry{twist, rep, mult});
  }

  void canonicalize() {
    for (auto& [u, es] : terms) {
      es.erase(std::remove_if(es.begin(), es.end(), [](const BettiEntry& e) { return e.mult == 0; }),
               es.end());
      std::sort(es.begin(), es.end(), [](const BettiEntry& a, const BettiEntry& b) {
        if (a.twist != b.twist) return a.twist > b.twist;
        return a.rep < b.rep;
      });
    }
    terms.erase(std::remove_if(terms.begin(), terms.end(),
                               [](const auto& t) { return t.second.empty(); }),
                terms.end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
  }
};

struct TableDiff {
  struct Line {
    int u;
    int twist;
    Weight rep;
    Int in_a;
    Int in_b;
  };
  std::vector<Line> lines;
  bool empty() const { return lines.empty(); }
};

inline TableDiff compare_resolutions(const BettiTable& a, const BettiTable& b) {
  std::map<std::tuple<int, int, Weight>, std::pair<Int, Int>> merged;
  for (const auto& [u, es] : a.terms)
    for (const auto& e : es) merged[{u, e.twist, e.rep}].first += e.mult;
  for (const auto& [u, es] : b.terms)
    for (const auto& e : es) merged[{u, e.twist, e.rep}].second += e.mult;
  TableDiff d;
  for (const auto& [key, counts] : merged)
    if (counts.first != counts.second)
      d.lines.push_back(
          {std::get<0>(key), std::get<1>(key), std::get<2>(key), counts.first, counts.second});
  std::sort(d.lines.begin(), d.lines.end(), [](const TableDiff::Line& x, const TableDiff::Line& y) {
    if (x.u != y.u) return x.u > y.u;
    if (x.twist != y.twist) return x.twist > y.twist;
    return x.rep < y.rep;
  });
  return d;
}

// Resolution shape predicted from catalog constants alone: exponents, s, j,
// the quasi-minuscule weight and the simply-laced flag. No cohomology is
// computed here.
enum class SheafKind { Jacobian, Structure };

inline BettiTable predicted_resolution(const AdjointVariety& X, SheafKind which,
                                       int j_override = -1) {
  const RootSystem& rs = *X.rs;
  const Weight zero = rs.zero_weight();
  const int j = j_override >= 0 ? j_override : X.j;
  BettiTable t;
  if (which == SheafKind::Jacobian) {
    t.add(0, 0, X.l_weight, 1);
    t.add(-1, -1, X.l_weight, 1);
    for (int i = 0; i < X.s; ++i) {
      int ei = rs.exponents[i];
      t.add(-1, -ei, zero, 1);
      t.add(-2, -ei - 1, zero, 1);
    }
    if (X.epsilon == 0) {
      t.add(-1, -j, X.qm_weight, 1);
      t.add(-2, -j - 1, X.qm_weight, 1);
    }
  } else {
    for (int i = 0; i < X.s; ++i) {
      int ei = rs.exponents[i];
      t.add(0, -ei + 1, zero, 1);
      t.add(-1, -X.dim_x + ei - 2, zero, 1);
    }
  }
  t.canonicalize();
  return t;
}

inline std::string rep_name(const AdjointVariety& X, const Weight& w) {
  if (is_zero(w)) return "O";
  if (w == X.l_weight) return "g";
  if (w == X.qm_weight) return "ghat";
  return "V" + weight_str(w);
}

inline std::string render_text(const AdjointVariety& X, const BettiTable& t) {
  std::string out;
  for (const auto& [u, es] : t.terms) {
    out += "u=" + std::to_string(u) + ": ";
    bool first = true;
    for (const auto& e : es) {
      if (!first) out += " + ";
      first = false;
      std::string base = rep_name(X, e.rep);
      if (base == "O") {
        out += "O(" + std::to_string(e.twist) + ")";
      } else {
        out += base + "(x)O(" + std::to_string(e.twist) + ")";
      }
      if (e.mult != 1) out += "^" + e.mult.str();
    }
    out += "\n";
  }
  return out;
}

// h_t of the alternating sum of the table's free terms over U = k[g], i.e. the
// Hilbert function of the resolved module when the table is a resolution.
inline Int hilbert_euler(const AdjointVariety& X, const BettiTable& t, long deg) {
  const RootSystem& rs = *X.rs;
  long nvars = 0;
  {
    Int dg = weyl_dim(rs, X.l_weight);
    nvars = dg.convert_to<long>();
  }
  Int h = 0;
  for (const auto& [u, es] : t.terms) {
    int sign = (u % 2 == 0) ? 1 : -1;
    for (const auto& e : es)
      h += sign * e.mult * weyl_dim(rs, e.rep) * monomial_count(nvars, deg + e.twist);
  }
  return h;
}

}  // namespace adjres
