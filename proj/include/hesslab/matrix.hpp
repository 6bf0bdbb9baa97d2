// Exact matrices over Q: adjoint action, Lie brackets, span membership with
// coordinates, Weyl-group representative matrices, and the type C involution
// sigma(x) = E x^tr E with E = [[0, J], [-J, 0]].

#pragma once

#include "permutation.hpp"
#include "rational.hpp"
#include "roots.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hesslab {

// Sparse square matrix over Q, 1-based indices. Entries absent from the map
// are zero; no explicit zeros are stored.
class RationalMatrix {
public:
  explicit RationalMatrix(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("RationalMatrix: rank >= 1 required");
  }

  static RationalMatrix zero(int n) { return RationalMatrix(n); }

  static RationalMatrix identity(int n) {
    RationalMatrix m(n);
    for (int i = 1; i <= n; ++i) m.set(i, i, Rational(1));
    return m;
  }

  static RationalMatrix elementary(int n, int i, int j, Rational c = Rational(1)) {
    RationalMatrix m(n);
    m.set(i, j, std::move(c));
    return m;
  }

  static RationalMatrix diagonal(const std::vector<Rational>& d) {
    RationalMatrix m(static_cast<int>(d.size()));
    for (int i = 1; i <= m.n_; ++i) m.set(i, i, d[i - 1]);
    return m;
  }

  int rank() const { return n_; }

  Rational get(int i, int j) const {
    auto it = e_.find({i, j});
    return it == e_.end() ? Rational(0) : it->second;
  }

  void set(int i, int j, Rational v) {
    check_index(i, j);
    if (v.is_zero())
      e_.erase({i, j});
    else
      e_[{i, j}] = std::move(v);
  }

  void add_to(int i, int j, const Rational& v) { set(i, j, get(i, j) + v); }

  const std::map<std::pair<int, int>, Rational>& entries() const { return e_; }

  bool is_zero() const { return e_.empty(); }

  Rational trace() const {
    Rational t(0);
    for (int i = 1; i <= n_; ++i) t += get(i, i);
    return t;
  }

  std::vector<Rational> diagonal_vector() const {
    std::vector<Rational> d(n_);
    for (int i = 1; i <= n_; ++i) d[i - 1] = get(i, i);
    return d;
  }

  RationalMatrix transpose() const {
    RationalMatrix m(n_);
    for (const auto& [ij, v] : e_) m.set(ij.second, ij.first, v);
    return m;
  }

  RationalMatrix operator-() const {
    RationalMatrix m(n_);
    for (const auto& [ij, v] : e_) m.set(ij.first, ij.second, -v);
    return m;
  }

  RationalMatrix& operator+=(const RationalMatrix& o) {
    check_rank(o);
    for (const auto& [ij, v] : o.e_) add_to(ij.first, ij.second, v);
    return *this;
  }

  RationalMatrix& operator-=(const RationalMatrix& o) {
    check_rank(o);
    for (const auto& [ij, v] : o.e_) add_to(ij.first, ij.second, -v);
    return *this;
  }

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    a.check_rank(b);
    RationalMatrix m(a.n_);
    // row index of b entries for sparse product
    std::map<int, std::vector<std::pair<int, const Rational*>>> rows_of_b;
    for (const auto& [ij, v] : b.e_) rows_of_b[ij.first].push_back({ij.second, &v});
    for (const auto& [ij, va] : a.e_) {
      auto it = rows_of_b.find(ij.second);
      if (it == rows_of_b.end()) continue;
      for (const auto& [col, vb] : it->second) m.add_to(ij.first, col, va * (*vb));
    }
    return m;
  }

  friend RationalMatrix operator*(const Rational& c, const RationalMatrix& a) {
    RationalMatrix m(a.n_);
    if (c.is_zero()) return m;
    for (const auto& [ij, v] : a.e_) m.set(ij.first, ij.second, c * v);
    return m;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

  // Exact inverse by Gaussian elimination; throws on singular input.
  RationalMatrix inverse() const {
    std::vector<std::vector<Rational>> aug(n_, std::vector<Rational>(2 * n_, Rational(0)));
    for (const auto& [ij, v] : e_) aug[ij.first - 1][ij.second - 1] = v;
    for (int i = 0; i < n_; ++i) aug[i][n_ + i] = Rational(1);
    for (int col = 0; col < n_; ++col) {
      int pivot = -1;
      for (int r = col; r < n_; ++r)
        if (!aug[r][col].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) throw std::invalid_argument("RationalMatrix::inverse: singular matrix");
      std::swap(aug[col], aug[pivot]);
      const Rational inv = aug[col][col].inverse();
      for (int c = col; c < 2 * n_; ++c) aug[col][c] *= inv;
      for (int r = 0; r < n_; ++r) {
        if (r == col || aug[r][col].is_zero()) continue;
        const Rational f = aug[r][col];
        for (int c = col; c < 2 * n_; ++c) aug[r][c] -= f * aug[col][c];
      }
    }
    RationalMatrix m(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (!aug[i][n_ + j].is_zero()) m.set(i + 1, j + 1, aug[i][n_ + j]);
    return m;
  }

private:
  void check_index(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_)
      throw std::out_of_range("RationalMatrix: index out of range");
  }
  void check_rank(const RationalMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("RationalMatrix: rank mismatch");
  }

  int n_;
  std::map<std::pair<int, int>, Rational> e_;
};

// [x, y] = xy - yx.
inline RationalMatrix bracket(const RationalMatrix& x, const RationalMatrix& y) {
  return x * y - y * x;
}

// Ad(g)(x) = g x g^{-1}.
inline RationalMatrix adjoint(const RationalMatrix& g, const RationalMatrix& x) {
  return g * x * g.inverse();
}

// --- span membership over Q ---

// Echelonized basis for repeated exact membership queries. Matrices are
// flattened to vectors of length rank^2; coordinates are reported in terms of
// the original basis order.
class SpanChecker {
public:
  explicit SpanChecker(std::vector<RationalMatrix> basis) : basis_(std::move(basis)) {
    if (!basis_.empty()) n_ = basis_[0].rank();
    for (const auto& m : basis_)
      if (m.rank() != n_) throw std::invalid_argument("SpanChecker: mixed ranks");
    for (size_t k = 0; k < basis_.size(); ++k) {
      std::map<int, Rational> row = flatten(basis_[k]);
      std::vector<Rational> combo(basis_.size(), Rational(0));
      combo[k] = Rational(1);
      reduce(row, &combo);
      if (!row.empty()) {
        rows_.push_back(std::move(row));
        combos_.push_back(std::move(combo));
      }
    }
  }

  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<RationalMatrix>& basis() const { return basis_; }

  bool contains(const RationalMatrix& x) const {
    if (basis_.empty()) return x.is_zero();
    std::map<int, Rational> row = flatten(x);
    reduce(row, nullptr);
    return row.empty();
  }

  // Coordinates of x in terms of the original basis, or nullopt.
  std::optional<std::vector<Rational>> coords(const RationalMatrix& x) const {
    if (basis_.empty()) {
      if (x.is_zero()) return std::vector<Rational>{};
      return std::nullopt;
    }
    std::map<int, Rational> row = flatten(x);
    std::vector<Rational> combo(basis_.size(), Rational(0));
    if (!reduce_tracking(row, combo)) return std::nullopt;
    return combo;
  }

private:
  std::map<int, Rational> flatten(const RationalMatrix& m) const {
    if (m.rank() != n_) throw std::invalid_argument("SpanChecker: rank mismatch");
    std::map<int, Rational> row;
    for (const auto& [ij, v] : m.entries()) row[(ij.first - 1) * n_ + (ij.second - 1)] = v;
    return row;
  }

  // Reduce `row` against the echelon rows; when combo is non-null, track the
  // expression of the subtracted part in the original basis.
  void reduce(std::map<int, Rational>& row, std::vector<Rational>* combo) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (row.empty()) return;
      const int lead = rows_[r].begin()->first;
      auto it = row.find(lead);
      if (it == row.end()) continue;
      const Rational f = it->second / rows_[r].begin()->second;
      for (const auto& [col, v] : rows_[r]) {
        auto jt = row.find(col);
        Rational nv = (jt == row.end() ? Rational(0) : jt->second) - f * v;
        if (nv.is_zero())
          row.erase(col);
        else
          row[col] = std::move(nv);
      }
      if (combo)
        for (size_t k = 0; k < combos_[r].size(); ++k) (*combo)[k] += f * combos_[r][k];
    }
  }

  bool reduce_tracking(std::map<int, Rational>& row, std::vector<Rational>& combo) const {
    reduce(row, &combo);
    return row.empty();
  }

  int n_ = 1;
  std::vector<RationalMatrix> basis_;
  std::vector<std::map<int, Rational>> rows_;    // echelon rows, leading col first
  std::vector<std::vector<Rational>> combos_;    // echelon row = combo over basis_
};

struct SpanSolveResult {
  bool in_span;
  std::vector<Rational> coordinates;  // valid when in_span
};

inline SpanSolveResult in_span(const RationalMatrix& x, const std::vector<RationalMatrix>& basis) {
  if (basis.empty()) return {x.is_zero(), {}};
  SpanChecker checker(basis);
  auto c = checker.coords(x);
  if (!c) return {false, {}};
  return {true, *c};
}

// --- Weyl representatives and the type C involution ---

struct WeylRep {
  Permutation w;
  RationalMatrix matrix;
};

inline int sign_split(int idx, int two_n) { return idx <= two_n / 2 ? 1 : -1; }

// E = [[0, J], [-J, 0]]: E e_j = -s_j e_{j'} with s_j = sign_split(j).
inline RationalMatrix matrix_E(int two_n) {
  if (two_n % 2 != 0) throw std::invalid_argument("matrix_E: even rank required");
  RationalMatrix m(two_n);
  for (int j = 1; j <= two_n; ++j) m.set(primed(j, two_n), j, Rational(-sign_split(j, two_n)));
  return m;
}

// sigma(x) = E x^tr E; an involution of sl_2n with fixed algebra sp_2n.
inline RationalMatrix sigma_matrix(const RationalMatrix& x) {
  if (x.rank() % 2 != 0) throw std::invalid_argument("sigma_matrix: even rank required");
  const RationalMatrix E = matrix_E(x.rank());
  return E * x.transpose() * E;
}

inline RationalMatrix sigma_bar(const RationalMatrix& x) { return x + sigma_matrix(x); }

inline bool is_sigma_fixed(const RationalMatrix& x) { return sigma_matrix(x) == x; }

// Signed permutation matrix with determinant 1. Type A: negate the last
// column when the permutation is odd. Type C: the unique sign pattern (up to
// pair choices) making the matrix sigma-fixed; column signs satisfy
// c_j * c_{j'} = s_j * s_{w(j)}.
inline WeylRep rep_matrix(const Permutation& w, System type) {
  const int n = w.size();
  RationalMatrix m(n);
  if (type == System::A) {
    for (int j = 1; j <= n; ++j) m.set(w(j), j, Rational(1));
    if (w.sign() < 0) m.set(w(n), n, Rational(-1));
  } else {
    if (n % 2 != 0 || !is_signed(w))
      throw std::invalid_argument("rep_matrix: type C requires a signed permutation");
    for (int j = 1; j <= n / 2; ++j) {
      const int jp = primed(j, n);
      m.set(w(j), j, Rational(1));
      m.set(w(jp), jp, Rational(sign_split(w(j), n)));
    }
  }
  return WeylRep{w, std::move(m)};
}

}  // namespace hesslab
