#pragma once

#include <cctype>
#include <string>

#include "adjres/errors.hpp"

namespace adjres {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
  Series series;
  int rank;

  bool simply_laced() const {
    return series == Series::A || series == Series::D || series == Series::E;
  }

  std::string str() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }

  friend bool operator==(const LieType& a, const LieType& b) {
    return a.series == b.series && a.rank == b.rank;
  }
};

inline void check_rank_bounds(Series s, int n) {
  bool ok = false;
  switch (s) {
    case Series::A: ok = n >= 1; break;
    case Series::B: ok = n >= 2; break;
    case Series::C: ok = n >= 2; break;
    case Series::D: ok = n >= 3; break;
    case Series::E: ok = n >= 6 && n <= 8; break;
    case Series::F: ok = n == 4; break;
    case Series::G: ok = n == 2; break;
  }
  if (!ok)
    throw RankOutOfRange(std::string(1, static_cast<char>(s)) + std::to_string(n));
}

inline LieType lie_type(Series s, int n) {
  check_rank_bounds(s, n);
  return LieType{s, n};
}

// Parses e.g. "A3", "e6" (case-insensitive letter + decimal rank).
inline LieType parse_lie_type(const std::string& text) {
  if (text.size() < 2) throw RankOutOfRange("cannot parse type string '" + text + "'");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (c < 'A' || c > 'G') throw RankOutOfRange("unknown series in '" + text + "'");
  int n = 0;
  for (size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw RankOutOfRange("bad rank in '" + text + "'");
    n = n * 10 + (text[i] - '0');
    if (n > 64) throw RankOutOfRange("rank too large in '" + text + "'");
  }
  return lie_type(static_cast<Series>(c), n);
}

}  // namespace adjres
