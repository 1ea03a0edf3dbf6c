#pragma once

#include <string>
#include <vector>

#include "adjres/lie_type.hpp"
#include "adjres/numeric.hpp"

namespace adjres {

// Weight notation used for homogeneous bundles on the classical adjoint
// varieties: type A uses sequences [l1; l2,...,ln; l_{n+1}] with weight
// coordinates l_i - l_{i+1} (defined up to a common shift), types B/D use
// epsilon-coordinate sequences [l1,l2; l3,...,ln] of integers or
// half-integers. Conversions are total with exact inverses on valid input.

inline Weight typeA_bracket_to_weight(const std::vector<int>& seq) {
  if (seq.size() < 2) throw UnsupportedShape("type A bracket needs n+1 entries");
  Weight w(seq.size() - 1);
  for (size_t i = 0; i + 1 < seq.size(); ++i) w[i] = seq[i] - seq[i + 1];
  return w;
}

inline std::vector<int> weight_to_typeA_bracket(const Weight& w) {
  std::vector<int> seq(w.size() + 1, 0);  // normalised so the last entry is 0
  for (size_t i = w.size(); i-- > 0;) seq[i] = seq[i + 1] + w[i];
  return seq;
}

inline Weight bd_bracket_to_weight(const LieType& t, const std::vector<Rat>& seq) {
  if (t.series != Series::B && t.series != Series::D)
    throw UnsupportedShape("epsilon brackets are for types B and D");
  const int n = t.rank;
  if (static_cast<int>(seq.size()) != n) throw UnsupportedShape("bracket needs rank entries");
  std::vector<Rat> m(n);
  if (t.series == Series::B) {
    for (int i = 0; i + 1 < n; ++i) m[i] = seq[i] - seq[i + 1];
    m[n - 1] = 2 * seq[n - 1];
  } else {
    for (int i = 0; i + 1 < n - 1; ++i) m[i] = seq[i] - seq[i + 1];
    m[n - 2] = seq[n - 2] - seq[n - 1];
    m[n - 1] = seq[n - 2] + seq[n - 1];
  }
  Weight w(n);
  for (int i = 0; i < n; ++i) {
    if (denominator(m[i]) != 1) throw UnsupportedShape("bracket is not an integral weight");
    w[i] = static_cast<int>(numerator(m[i]).convert_to<long>());
  }
  return w;
}

inline std::vector<Rat> weight_to_bd_bracket(const LieType& t, const Weight& w) {
  const int n = t.rank;
  if (static_cast<int>(w.size()) != n) throw DimensionMismatch("weight length");
  std::vector<Rat> seq(n);
  if (t.series == Series::B) {
    seq[n - 1] = Rat(w[n - 1], 2);
    for (int i = n - 1; i-- > 0;) seq[i] = seq[i + 1] + w[i];
  } else if (t.series == Series::D) {
    seq[n - 1] = Rat(w[n - 1] - w[n - 2], 2);
    seq[n - 2] = Rat(w[n - 1] + w[n - 2], 2);
    for (int i = n - 2; i-- > 0;) seq[i] = seq[i + 1] + w[i];
  } else {
    throw UnsupportedShape("epsilon brackets are for types B and D");
  }
  return seq;
}

inline std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline std::string bd_bracket_str(const std::vector<Rat>& seq) {
  std::string s = "[" + rat_str(seq[0]) + "," + rat_str(seq[1]) + "; ";
  for (size_t i = 2; i < seq.size(); ++i) {
    if (i > 2) s += ",";
    s += rat_str(seq[i]);
  }
  return s + "]";
}

inline std::string typeA_bracket_str(const std::vector<int>& seq) {
  std::string s = "[" + std::to_string(seq.front()) + "; ";
  for (size_t i = 1; i + 1 < seq.size(); ++i) {
    if (i > 1) s += ",";
    s += std::to_string(seq[i]);
  }
  return s + "; " + std::to_string(seq.back()) + "]";
}

// Parses "[a; b,...,c; d]" or "[a,b; c,...,d]" into the flat entry sequence;
// entries are integers or fractions like 3/2. Group sizes are validated by
// the weight converters.
inline std::vector<Rat> parse_bracket_str(const std::string& text) {
  std::string body(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw UnsupportedShape("bracket must be enclosed in [ ]");
  body = body.substr(1, body.size() - 2);
  std::vector<Rat> out;
  std::string token;
  auto flush = [&] {
    size_t a = token.find_first_not_of(' ');
    if (a == std::string::npos) throw UnsupportedShape("empty bracket entry");
    size_t b = token.find_last_not_of(' ');
    std::string item = token.substr(a, b - a + 1);
    size_t slash = item.find('/');
    try {
      if (slash == std::string::npos)
        out.push_back(Rat(Int(item)));
      else
        out.push_back(Rat(Int(item.substr(0, slash)), Int(item.substr(slash + 1))));
    } catch (const std::exception&) {
      throw UnsupportedShape("bad bracket entry '" + item + "'");
    }
    token.clear();
  };
  for (char ch : body) {
    if (ch == ',' || ch == ';')
      flush();
    else
      token += ch;
  }
  flush();
  return out;
}

inline Weight parse_typeA_bracket(const std::string& text) {
  std::vector<Rat> seq = parse_bracket_str(text);
  std::vector<int> ints;
  for (const Rat& r : seq) {
    if (denominator(r) != 1) throw UnsupportedShape("type A brackets are integral");
    ints.push_back(static_cast<int>(numerator(r).convert_to<long>()));
  }
  return typeA_bracket_to_weight(ints);
}

inline Weight parse_bd_bracket(const LieType& t, const std::string& text) {
  return bd_bracket_to_weight(t, parse_bracket_str(text));
}

// Closed-form summand list for the wedge powers of the contact bundle on the
// type A adjoint variety: the double-indexed union over (a, b, j) with
// a+b = p and max(0, b-a) <= j <= min(b, n-a-1). With twist = 1 the list
// describes wedge^p F^vee (x) L, with twist = 0 it describes wedge^{p-1} F^vee.
inline std::vector<Weight> typeA_wedge_summands(int n, int p, int twist) {
  if (n < 2) throw IndexOutOfRange("type A fast path needs rank >= 2");
  if (twist != 0 && twist != 1) throw IndexOutOfRange("twist must be 0 or 1");
  if (twist == 1 && (p < 0 || p > 2 * n - 2))
    throw IndexOutOfRange("p out of range for the twisted list");
  if (twist == 0 && (p < 1 || p > 2 * n - 1))
    throw IndexOutOfRange("p out of range for the untwisted list");

  const int total = twist == 1 ? p : p - 1;
  std::vector<Weight> out;
  for (int a = 0; a <= std::min(total, n - 1); ++a) {
    int b = total - a;
    if (b > n - 1) continue;
    for (int j = std::max(0, b - a); j <= std::min(b, n - a - 1); ++j) {
      int zeros = n - a + b - 2 * j - 1;
      int minus = a - b + j;
      if (zeros < 0 || minus < 0) continue;
      std::vector<int> seq;
      seq.reserve(n + 1);
      seq.push_back(-b + twist);
      for (int k = 0; k < j; ++k) seq.push_back(1);
      for (int k = 0; k < zeros; ++k) seq.push_back(0);
      for (int k = 0; k < minus; ++k) seq.push_back(-1);
      seq.push_back(a - twist);
      out.push_back(typeA_bracket_to_weight(seq));
    }
  }
  return out;
}

// Partition shapes for the GL -> O -> SO branching chain.
struct PartitionShape {
  std::vector<int> parts;  // weakly decreasing, nonnegative

  PartitionShape() = default;
  explicit PartitionShape(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i + 1 < parts.size(); ++i)
      if (parts[i] < parts[i + 1]) throw UnsupportedShape("parts not weakly decreasing");
    for (int x : parts)
      if (x < 0) throw UnsupportedShape("negative part");
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
  }

  bool two_column() const {
    for (int x : parts)
      if (x > 2) return false;
    return true;
  }
  int twos() const {
    int c = 0;
    for (int x : parts)
      if (x == 2) ++c;
    return c;
  }
  int ones() const {
    int c = 0;
    for (int x : parts)
      if (x == 1) ++c;
    return c;
  }
  int size() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
  }
  friend bool operator==(const PartitionShape& a, const PartitionShape& b) {
    return a.parts == b.parts;
  }
  friend bool operator<(const PartitionShape& a, const PartitionShape& b) {
    return a.parts < b.parts;
  }
};

// Restriction of the two-column plethysm S_{2^i,1^{j-i}} of the standard
// GL(m-4)-representation to O(m-4): one trace removal per delta with
// 0 <= delta <= i and p - delta <= m - 4, p = i + j.
inline std::vector<PartitionShape> gl_to_o_branching(const PartitionShape& shape, int m) {
  if (m < 5) throw UnsupportedShape("need m >= 5");
  if (!shape.two_column()) throw UnsupportedShape("shape must be of the form (2^i, 1^{j-i})");
  const int i = shape.twos();
  const int j = i + shape.ones();
  const int p = i + j;
  std::vector<PartitionShape> out;
  for (int delta = 0; delta <= i; ++delta) {
    if (p - delta > m - 4) continue;
    std::vector<int> parts;
    for (int k = 0; k < i - delta; ++k) parts.push_back(2);
    for (int k = 0; k < j - i; ++k) parts.push_back(1);
    out.push_back(PartitionShape(std::move(parts)));
  }
  return out;
}

// Branching from O(m-4) to SO(m-4) of a two-column label, the four cases
// discriminating 2*(first column) against m-4; the split into a +/- pair
// happens only when m is even and the label fills half the rank.
inline std::vector<std::vector<int>> o_to_so_branching(const PartitionShape& mu, int m) {
  if (m < 5) throw UnsupportedShape("need m >= 5");
  if (!mu.two_column()) throw UnsupportedShape("label must be of the form (2^a, 1^b)");
  const int a = mu.twos();
  const int b = mu.ones();
  const int cols = m - 4;
  const int rank = cols / 2;  // rank of SO(m-4)
  if (2 * a + b > cols) throw UnsupportedShape("not a valid O(m-4) label");

  auto filled = [&](int twos, int ones, int last) {
    std::vector<int> v;
    for (int k = 0; k < twos; ++k) v.push_back(2);
    for (int k = 0; k < ones; ++k) v.push_back(1);
    while (static_cast<int>(v.size()) < rank - (last != 0 ? 1 : 0)) v.push_back(0);
    if (last != 0) v.push_back(last);
    if (static_cast<int>(v.size()) != rank) throw UnsupportedShape("rank mismatch in SO label");
    return v;
  };

  std::vector<std::vector<int>> out;
  if (2 * (a + b) < cols) {
    out.push_back(filled(a, b, 0));
  } else if (2 * (a + b) > cols) {
    int ones = cols - 2 * a - b;  // associated label
    out.push_back(filled(a, ones, 0));
  } else if (b > 0) {  // m even, i < j
    out.push_back(filled(a, b, 0));
    out.push_back(filled(a, b - 1, -1));
  } else {  // m even, i = j
    out.push_back(filled(a, 0, 0));
    out.push_back(filled(a - 1, 0, -2));
  }
  return out;
}

// Closed-form summand list in types B and D: Cauchy decomposition of
// wedge^p(U (x) U^perp/U) followed by the GL -> O -> SO chain.
inline std::vector<Weight> bd_wedge_summands(const LieType& t, int p, int twist) {
  if (t.series != Series::B && t.series != Series::D)
    throw UnsupportedShape("B/D fast path");
  const int n = t.rank;
  const int m = t.series == Series::B ? 2 * n + 1 : 2 * n;
  if (twist != 0 && twist != 1) throw IndexOutOfRange("twist must be 0 or 1");
  if (p < 0 || p > 2 * (m - 4)) throw IndexOutOfRange("p out of range");

  std::vector<Weight> out;
  for (int i = 0; 2 * i <= p; ++i) {
    int j = p - i;
    if (j > m - 4) continue;
    std::vector<int> parts;
    for (int k = 0; k < i; ++k) parts.push_back(2);
    for (int k = 0; k < j - i; ++k) parts.push_back(1);
    PartitionShape gl_shape{std::move(parts)};
    for (const PartitionShape& o_label : gl_to_o_branching(gl_shape, m)) {
      for (const std::vector<int>& so : o_to_so_branching(o_label, m)) {
        std::vector<Rat> seq;
        seq.reserve(n);
        seq.push_back(-i + twist);
        seq.push_back(-j + twist);
        for (int v : so) seq.push_back(v);
        out.push_back(bd_bracket_to_weight(t, seq));
      }
    }
  }
  return out;
}

}  // namespace adjres
