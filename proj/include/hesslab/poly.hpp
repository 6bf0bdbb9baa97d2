// Sparse multivariate polynomials over Q in graded reverse lexicographic
// order, matrices over them, unipotent inversion, and nilpotent exponentials.

#pragma once

#include "matrix.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hesslab {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// true iff a < b in grevlex: smaller total degree, or (equal degree and the
// rightmost nonzero entry of a-b is positive).
inline bool grevlex_less(const Exponents& a, const Exponents& b) {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (int t = static_cast<int>(a.size()) - 1; t >= 0; --t) {
    const int diff = a[t] - b[t];
    if (diff != 0) return diff > 0;
  }
  return false;
}

inline bool divides(const Exponents& a, const Exponents& b) {  // a | b
  for (size_t t = 0; t < a.size(); ++t)
    if (a[t] > b[t]) return false;
  return true;
}

inline Exponents exp_mul(const Exponents& a, const Exponents& b) {
  Exponents c(a.size());
  for (size_t t = 0; t < a.size(); ++t) c[t] = a[t] + b[t];
  return c;
}

inline Exponents exp_div(const Exponents& a, const Exponents& b) {  // a / b
  Exponents c(a.size());
  for (size_t t = 0; t < a.size(); ++t) c[t] = a[t] - b[t];
  return c;
}

inline Exponents exp_lcm(const Exponents& a, const Exponents& b) {
  Exponents c(a.size());
  for (size_t t = 0; t < a.size(); ++t) c[t] = std::max(a[t], b[t]);
  return c;
}

// Terms are kept sorted descending in grevlex; no zero coefficients stored.
class MultiPoly {
public:
  using Term = std::pair<Exponents, Rational>;

  explicit MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("MultiPoly: negative variable count");
  }

  static MultiPoly zero(int nvars) { return MultiPoly(nvars); }

  static MultiPoly constant(int nvars, Rational c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.push_back({Exponents(nvars, 0), std::move(c)});
    return p;
  }

  static MultiPoly variable(int nvars, int idx, Rational c = Rational(1)) {
    if (idx < 0 || idx >= nvars) throw std::invalid_argument("MultiPoly::variable: bad index");
    MultiPoly p(nvars);
    if (!c.is_zero()) {
      Exponents e(nvars, 0);
      e[idx] = 1;
      p.terms_.push_back({std::move(e), std::move(c)});
    }
    return p;
  }

  static MultiPoly from_terms(int nvars, std::vector<Term> terms) {
    MultiPoly p(nvars);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grevlex_less(b.first, a.first); });
    for (auto& t : terms) {
      if (t.second.is_zero()) continue;
      if (!p.terms_.empty() && p.terms_.back().first == t.first)
        p.terms_.back().second += t.second;
      else
        p.terms_.push_back(std::move(t));
    }
    p.strip_zeros();
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && degree() == 0); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.front().first); }
  const Exponents& leading_monomial() const { return terms_.front().first; }
  const Rational& leading_coefficient() const { return terms_.front().second; }

  Rational constant_term() const {
    if (terms_.empty()) return Rational(0);
    const Term& last = terms_.back();
    return total_degree(last.first) == 0 ? last.second : Rational(0);
  }

  MultiPoly operator-() const {
    MultiPoly p(nvars_);
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({t.first, -t.second});
    return p;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return merge(o, Rational(1)); }
  MultiPoly& operator-=(const MultiPoly& o) { return merge(o, Rational(-1)); }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    std::vector<Term> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& ta : a.terms_)
      for (const Term& tb : b.terms_) acc.push_back({exp_mul(ta.first, tb.first), ta.second * tb.second});
    return from_terms(a.nvars_, std::move(acc));
  }

  friend MultiPoly operator*(const Rational& c, const MultiPoly& a) {
    MultiPoly p(a.nvars_);
    if (c.is_zero()) return p;
    p.terms_.reserve(a.terms_.size());
    for (const Term& t : a.terms_) p.terms_.push_back({t.first, c * t.second});
    return p;
  }

  // p * c * x^e
  MultiPoly times_term(const Rational& c, const Exponents& e) const {
    MultiPoly p(nvars_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({exp_mul(t.first, e), c * t.second});
    return p;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw std::invalid_argument("MultiPoly::evaluate: wrong point size");
    Rational sum(0);
    for (const Term& t : terms_) {
      Rational m = t.second;
      for (int v = 0; v < nvars_; ++v)
        for (int rep = 0; rep < t.first[v]; ++rep) m *= point[v];
      sum += m;
    }
    return sum;
  }

  // Deterministic normal form, grevlex-descending.
  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t t = 0; t < terms_.size(); ++t) {
      const Rational& c = terms_[t].second;
      std::string mono;
      for (int v = 0; v < nvars_; ++v) {
        if (terms_[t].first[v] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[v];
        if (terms_[t].first[v] > 1) mono += "^" + std::to_string(terms_[t].first[v]);
      }
      std::string coef = c.abs().str();
      std::string piece;
      if (mono.empty())
        piece = coef;
      else if (coef == "1")
        piece = mono;
      else
        piece = coef + "*" + mono;
      if (t == 0)
        s += (c.sign() < 0 ? "-" : "") + piece;
      else
        s += (c.sign() < 0 ? " - " : " + ") + piece;
    }
    return s;
  }

private:
  void check(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  }

  void strip_zeros() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const Term& t) { return t.second.is_zero(); }),
                 terms_.end());
  }

  MultiPoly& merge(const MultiPoly& o, const Rational& scale) {
    check(o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t a = 0, b = 0;
    while (a < terms_.size() && b < o.terms_.size()) {
      if (terms_[a].first == o.terms_[b].first) {
        Rational c = terms_[a].second + scale * o.terms_[b].second;
        if (!c.is_zero()) out.push_back({terms_[a].first, std::move(c)});
        ++a;
        ++b;
      } else if (grevlex_less(o.terms_[b].first, terms_[a].first)) {
        out.push_back(terms_[a]);
        ++a;
      } else {
        out.push_back({o.terms_[b].first, scale * o.terms_[b].second});
        ++b;
      }
    }
    for (; a < terms_.size(); ++a) out.push_back(terms_[a]);
    for (; b < o.terms_.size(); ++b) out.push_back({o.terms_[b].first, scale * o.terms_[b].second});
    terms_ = std::move(out);
    return *this;
  }

  int nvars_;
  std::vector<Term> terms_;
};

// --- matrices over MultiPoly ---

class PolyMatrix {
public:
  PolyMatrix(int n, int nvars) : n_(n), nvars_(nvars) {
    if (n < 1) throw std::invalid_argument("PolyMatrix: rank >= 1 required");
  }

  static PolyMatrix identity(int n, int nvars) {
    PolyMatrix m(n, nvars);
    for (int i = 1; i <= n; ++i) m.set(i, i, MultiPoly::constant(nvars, Rational(1)));
    return m;
  }

  static PolyMatrix from_rational(const RationalMatrix& x, int nvars) {
    PolyMatrix m(x.rank(), nvars);
    for (const auto& [ij, v] : x.entries())
      m.set(ij.first, ij.second, MultiPoly::constant(nvars, v));
    return m;
  }

  int rank() const { return n_; }
  int nvars() const { return nvars_; }

  MultiPoly get(int i, int j) const {
    auto it = e_.find({i, j});
    return it == e_.end() ? MultiPoly::zero(nvars_) : it->second;
  }

  void set(int i, int j, MultiPoly p) {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("PolyMatrix: bad index");
    if (p.is_zero())
      e_.erase({i, j});
    else
      e_.insert_or_assign({i, j}, std::move(p));
  }

  void add_to(int i, int j, const MultiPoly& p) {
    MultiPoly cur = get(i, j);
    cur += p;
    set(i, j, std::move(cur));
  }

  const std::map<std::pair<int, int>, MultiPoly>& entries() const { return e_; }
  bool is_zero() const { return e_.empty(); }

  PolyMatrix& operator+=(const PolyMatrix& o) {
    check(o);
    for (const auto& [ij, p] : o.e_) add_to(ij.first, ij.second, p);
    return *this;
  }
  PolyMatrix& operator-=(const PolyMatrix& o) {
    check(o);
    for (const auto& [ij, p] : o.e_) add_to(ij.first, ij.second, -p);
    return *this;
  }
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    a.check(b);
    PolyMatrix m(a.n_, a.nvars_);
    std::map<int, std::vector<std::pair<int, const MultiPoly*>>> rows_of_b;
    for (const auto& [ij, p] : b.e_) rows_of_b[ij.first].push_back({ij.second, &p});
    for (const auto& [ij, pa] : a.e_) {
      auto it = rows_of_b.find(ij.second);
      if (it == rows_of_b.end()) continue;
      for (const auto& [col, pb] : it->second) m.add_to(ij.first, col, pa * (*pb));
    }
    return m;
  }

  friend PolyMatrix operator*(const Rational& c, const PolyMatrix& a) {
    PolyMatrix m(a.n_, a.nvars_);
    for (const auto& [ij, p] : a.e_) m.set(ij.first, ij.second, c * p);
    return m;
  }

  RationalMatrix evaluate(const std::vector<Rational>& point) const {
    RationalMatrix m(n_);
    for (const auto& [ij, p] : e_) m.set(ij.first, ij.second, p.evaluate(point));
    return m;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.n_ == b.n_ && a.nvars_ == b.nvars_ && a.e_ == b.e_;
  }
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

private:
  void check(const PolyMatrix& o) const {
    if (n_ != o.n_ || nvars_ != o.nvars_)
      throw std::invalid_argument("PolyMatrix: shape or variable mismatch");
  }

  int n_;
  int nvars_;
  std::map<std::pair<int, int>, MultiPoly> e_;
};

// N strictly upper triangular?
inline bool strictly_upper(const PolyMatrix& m) {
  for (const auto& [ij, p] : m.entries())
    if (ij.first >= ij.second && !p.is_zero()) return false;
  return true;
}

// (I + N)^{-1} = I - N + N^2 - ... for strictly upper N; the product with the
// input is the identity, identically in the parameters.
inline PolyMatrix unipotent_inverse(const PolyMatrix& U) {
  PolyMatrix N = U - PolyMatrix::identity(U.rank(), U.nvars());
  if (!strictly_upper(N)) throw std::invalid_argument("unipotent_inverse: U - I not strictly upper");
  PolyMatrix inv = PolyMatrix::identity(U.rank(), U.nvars());
  PolyMatrix pw = N;
  Rational sign(-1);
  for (int k = 1; k < U.rank() && !pw.is_zero(); ++k) {
    inv += sign * pw;
    pw = pw * N;
    sign = -sign;
  }
  return inv;
}

// exp(Y) for nilpotent Y, a finite sum with exact 1/m! coefficients.
inline PolyMatrix exp_nilpotent(const PolyMatrix& Y) {
  PolyMatrix out = PolyMatrix::identity(Y.rank(), Y.nvars());
  PolyMatrix pw = Y;
  Rational fact(1);
  for (int m = 1; m <= Y.rank() && !pw.is_zero(); ++m) {
    fact *= Rational(1, m);  // 1/m!
    out += fact * pw;
    pw = pw * Y;
  }
  return out;
}

}  // namespace hesslab
