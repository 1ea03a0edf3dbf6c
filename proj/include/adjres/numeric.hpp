#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace adjres {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exact integer weight in the basis of fundamental weights (Bourbaki numbering).
// Length always equals the rank of the ambient root system.
using Weight = std::vector<int>;

inline Weight operator+(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Weight operator-(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Weight negated(const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline bool is_zero(const Weight& a) {
  for (int c : a)
    if (c != 0) return false;
  return true;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

// Monomials of degree d in nvars variables.
inline Int monomial_count(long nvars, long d) {
  if (d < 0) return 0;
  return binomial(d + nvars - 1, nvars - 1);
}

inline uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  s += ")";
  return s;
}

}  // namespace adjres
