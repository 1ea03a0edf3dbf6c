#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adjres/errors.hpp"
#include "adjres/numeric.hpp"

namespace adjres {

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed list of variables x_1..x_N. Terms are kept in lexicographic monomial
// order (the map order on exponent vectors) with no zero coefficients stored.
class Poly {
 public:
  using Monomial = std::vector<int>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rat& c) {
    Poly p(nvars);
    if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
    return p;
  }

  static Poly variable(int nvars, int i) {
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.terms_[m] = 1;
    return p;
  }

  int nvars() const { return nvars_; }
  bool zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      int s = 0;
      for (int e : m) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  void add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(ma);
        for (int i = 0; i < r.nvars_; ++i) m[i] += mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }

  Poly& operator*=(const Rat& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, co] : terms_) co *= c;
    return *this;
  }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly derivative(int i) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      Monomial d(m);
      d[i] -= 1;
      r.add_term(d, c * m[i]);
    }
    return r;
  }

  Rat eval(const std::vector<Rat>& point) const {
    Rat s = 0;
    for (const auto& [m, c] : terms_) {
      Rat t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < m[i]; ++k) t *= point[i];
      s += t;
    }
    return s;
  }

  // Exact division: returns the quotient iff divisor divides exactly. Uses
  // long division against the lexicographically leading term; any reduction
  // failure lands in the remainder, which never cancels afterwards.
  std::optional<Poly> divide_exact(const Poly& d) const {
    if (d.zero()) throw Error("division by zero polynomial");
    const auto& [dlead, dcoef] = *d.terms_.rbegin();
    Poly q(nvars_);
    Poly rem(*this);
    while (!rem.zero()) {
      const auto& [rlead, rcoef] = *rem.terms_.rbegin();
      Monomial quot(nvars_);
      bool divisible = true;
      for (int i = 0; i < nvars_; ++i) {
        quot[i] = rlead[i] - dlead[i];
        if (quot[i] < 0) divisible = false;
      }
      if (!divisible) return std::nullopt;
      Rat c = rcoef / dcoef;
      q.add_term(quot, c);
      Poly t(nvars_);
      t.add_term(quot, c);
      rem -= t * d;
    }
    return q;
  }

  std::string str(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      std::string mono;
      for (int i = 0; i < nvars_; ++i) {
        if (it->first[i] == 0) continue;
        std::string v = i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i + 1);
        mono += (mono.empty() ? "" : "*") + v;
        if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
      }
      std::string c = numerator(it->second).str();
      if (denominator(it->second) != 1) c += "/" + denominator(it->second).str();
      if (mono.empty())
        out += c;
      else if (it->second == 1)
        out += mono;
      else if (it->second == -1)
        out += "-" + mono;
      else
        out += c + "*" + mono;
    }
    return out;
  }

 private:
  int nvars_;
  std::map<Monomial, Rat> terms_;
};

inline Poly det_poly(const std::vector<std::vector<Poly>>& m) {
  const size_t n = m.size();
  if (n == 0) return Poly::constant(0, 1);
  if (n == 1) return m[0][0];
  Poly d(m[0][0].nvars());
  for (size_t k = 0; k < n; ++k) {
    std::vector<std::vector<Poly>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (size_t c = 0; c < n; ++c)
        if (c != k) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][k] * det_poly(minor);
    if (k % 2) term *= Rat(-1);
    d += term;
  }
  return d;
}

}  // namespace adjres
