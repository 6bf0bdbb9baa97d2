// Hessenberg spaces of sl_n and sp_2n: construction from root ideals and
// Cartan data, exact validation of [b, H] <= H, Hessenberg vectors, the
// distinguished small-codimension spaces, Demazure spaces, enumeration, and
// the type C -> type A lift.

#pragma once

#include "matrix.hpp"
#include "permutation.hpp"
#include "rational.hpp"
#include "roots.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hesslab {

inline int matrix_size(System sys, int rank) { return sys == System::A ? rank : 2 * rank; }

// Root vector inside the ambient matrix algebra: E_ij for type A, the
// symmetrization sigma_bar(E_ij) of the canonical representative for type C.
inline RationalMatrix root_vector(const Root& r) {
  const int m = matrix_size(r.system, r.rank);
  if (r.system == System::A) return RationalMatrix::elementary(m, r.i, r.j);
  return sigma_bar(RationalMatrix::elementary(m, r.i, r.j));
}

// Full Cartan subalgebra as diagonal vectors: trace-zero h_i = e_i - e_{i+1}
// for sl_n, and e_i - e_{i'} (i <= n) for the sigma-fixed Cartan of sp_2n.
inline std::vector<std::vector<Rational>> full_cartan(System sys, int rank) {
  std::vector<std::vector<Rational>> out;
  if (sys == System::A) {
    for (int i = 1; i < rank; ++i) {
      std::vector<Rational> d(rank, Rational(0));
      d[i - 1] = Rational(1);
      d[i] = Rational(-1);
      out.push_back(std::move(d));
    }
  } else {
    const int m = 2 * rank;
    for (int i = 1; i <= rank; ++i) {
      std::vector<Rational> d(m, Rational(0));
      d[i - 1] = Rational(1);
      d[primed(i, m) - 1] = Rational(-1);
      out.push_back(std::move(d));
    }
  }
  return out;
}

enum class CartanPolicy { Full, Generated, ExplicitList };

struct HessenbergSpace {
  System system;
  int rank;
  RootIdeal roots;
  std::vector<std::vector<Rational>> cartan;  // diagonal vectors, length matrix_size

  int ambient_size() const { return matrix_size(system, rank); }

  std::vector<RationalMatrix> basis() const {
    std::vector<RationalMatrix> out;
    for (const auto& d : cartan) out.push_back(RationalMatrix::diagonal(d));
    for (const Root& r : roots.roots) out.push_back(root_vector(r));
    return out;
  }

  int dim() const { return SpanChecker(basis()).dim(); }
};

// Generators of the Borel subalgebra: a Cartan basis plus the simple root
// vectors (type C includes the long simple root E_{n, n+1} class).
inline std::vector<RationalMatrix> borel_generators(System sys, int rank) {
  std::vector<RationalMatrix> gens;
  for (const auto& d : full_cartan(sys, rank)) gens.push_back(RationalMatrix::diagonal(d));
  if (sys == System::A) {
    for (int i = 1; i < rank; ++i) gens.push_back(root_vector(root_a(rank, i, i + 1)));
  } else {
    for (int i = 1; i < rank; ++i) gens.push_back(root_vector(root_c(rank, i, i + 1)));
    gens.push_back(root_vector(root_c(rank, rank, rank + 1)));  // long simple class
  }
  return gens;
}

struct ValidationWitness {
  RationalMatrix generator;
  RationalMatrix vector;
  RationalMatrix bracket;
};

struct ValidationResult {
  bool ok;
  std::optional<ValidationWitness> witness;
  std::string message;
};

// Checks [g, v] in span(H) for every Borel generator g and basis vector v of
// H; invariance under Lie-algebra generators of b implies b-invariance. Also
// enforces the ambient constraints on Cartan vectors (trace zero for sl_n,
// d_i = -d_{i'} for the sigma-fixed Cartan).
inline ValidationResult validate(const HessenbergSpace& H) {
  const int m = H.ambient_size();
  for (const auto& d : H.cartan) {
    if (static_cast<int>(d.size()) != m)
      return {false, std::nullopt, "cartan vector has wrong length"};
    if (H.system == System::A) {
      Rational t(0);
      for (const auto& v : d) t += v;
      if (!t.is_zero()) return {false, std::nullopt, "cartan vector has nonzero trace"};
    } else {
      for (int i = 1; i <= m; ++i)
        if (d[i - 1] != -d[primed(i, m) - 1])
          return {false, std::nullopt, "cartan vector not in the sigma-fixed Cartan"};
    }
  }
  for (const Root& r : H.roots.roots)
    if (r.system != H.system || r.rank != H.rank)
      return {false, std::nullopt, "root ideal from a different system"};

  const auto basis = H.basis();
  SpanChecker span(basis);
  for (const RationalMatrix& g : borel_generators(H.system, H.rank))
    for (const RationalMatrix& v : basis) {
      RationalMatrix br = bracket(g, v);
      if (!br.is_zero() && !span.contains(br))
        return {false, ValidationWitness{g, v, br}, "bracket escapes the space"};
    }
  return {true, std::nullopt, ""};
}

// --- Hessenberg vectors (spaces containing b) ---

struct HessenbergVector {
  std::vector<int> h;  // weakly increasing, h_j >= j, h_n = n
};

inline void check_vector(const std::vector<int>& h) {
  const int n = static_cast<int>(h.size());
  if (n == 0) throw std::invalid_argument("HessenbergVector: empty");
  for (int j = 1; j <= n; ++j) {
    if (h[j - 1] < j || h[j - 1] > n)
      throw std::invalid_argument("HessenbergVector: need j <= h_j <= n");
    if (j > 1 && h[j - 1] < h[j - 2])
      throw std::invalid_argument("HessenbergVector: not weakly increasing");
  }
}

inline HessenbergSpace from_vector(const std::vector<int>& h, int n) {
  if (static_cast<int>(h.size()) != n) throw std::invalid_argument("from_vector: length mismatch");
  check_vector(h);
  RootIdeal ideal{System::A, n, {}};
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= h[j - 1]; ++i)
      if (i != j) ideal.roots.insert(root_a(n, i, j));
  return HessenbergSpace{System::A, n, std::move(ideal), full_cartan(System::A, n)};
}

// Defined for spaces containing b; h_j is the largest i with E_ij in H.
inline std::vector<int> to_vector(const HessenbergSpace& H) {
  if (H.system != System::A) throw std::invalid_argument("to_vector: type A only");
  const int n = H.rank;
  for (int i = 1; i < n; ++i)
    if (!H.roots.contains(root_a(n, i, i + 1)))
      throw std::invalid_argument("to_vector: space does not contain b");
  std::vector<int> h(n);
  for (int j = 1; j <= n; ++j) {
    int best = j;
    for (int i = j + 1; i <= n; ++i)
      if (H.roots.contains(root_a(n, i, j))) best = i;
    h[j - 1] = best;
  }
  return h;
}

inline std::vector<std::vector<int>> all_hessenberg_vectors(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> h(n);
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      if (h[n - 1] == n) out.push_back(h);
      return;
    }
    const int lo = std::max(j + 1, j == 0 ? 1 : h[j - 1]);
    for (int v = lo; v <= n; ++v) {
      h[j] = v;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

// --- distinguished small-codimension spaces ---

enum class SpecialKind { MinusTheta, Beta1, Beta2 };

// H(-theta-bar) omits the lowest root space; H(beta_i-bar) additionally omits
// beta_1 = e_{n-1} - e_1 or beta_2 = e_n - e_2. All carry the full Cartan.
inline HessenbergSpace special_space(SpecialKind kind, int n) {
  if (n < 2 || (kind != SpecialKind::MinusTheta && n < 3))
    throw std::invalid_argument("special_space: rank too small");
  RootIdeal ideal{System::A, n, {}};
  const Root minus_theta = root_a(n, n, 1);
  Root beta = minus_theta;
  if (kind == SpecialKind::Beta1) beta = root_a(n, n - 1, 1);
  if (kind == SpecialKind::Beta2) beta = root_a(n, n, 2);
  for (const Root& r : all_roots(System::A, n)) {
    if (r == minus_theta) continue;
    if (kind != SpecialKind::MinusTheta && r == beta) continue;
    ideal.roots.insert(r);
  }
  return HessenbergSpace{System::A, n, std::move(ideal), full_cartan(System::A, n)};
}

// --- generated Cartan parts and Demazure spaces ---

// Cartan part of the b-module generated by the ideal's root vectors: the
// brackets [E_{-g}, E_g] over negative roots g in the ideal, reduced to an
// independent set of diagonal vectors.
inline std::vector<std::vector<Rational>> generated_cartan(System sys, int rank,
                                                           const RootIdeal& ideal) {
  const int m = matrix_size(sys, rank);
  std::vector<std::vector<Rational>> out;
  std::vector<std::map<int, Rational>> echelon;
  auto try_add = [&](const std::vector<Rational>& d) {
    std::map<int, Rational> row;
    for (int t = 0; t < m; ++t)
      if (!d[t].is_zero()) row[t] = d[t];
    for (const auto& er : echelon) {
      if (row.empty()) break;
      auto it = row.find(er.begin()->first);
      if (it == row.end()) continue;
      const Rational f = it->second / er.begin()->second;
      for (const auto& [col, v] : er) {
        Rational nv = (row.count(col) ? row[col] : Rational(0)) - f * v;
        if (nv.is_zero())
          row.erase(col);
        else
          row[col] = nv;
      }
    }
    if (!row.empty()) {
      echelon.push_back(std::move(row));
      out.push_back(d);
    }
  };
  for (const Root& g : ideal.roots) {
    if (is_positive(g)) continue;
    const RationalMatrix h = bracket(root_vector(negate(g)), root_vector(g));
    try_add(h.diagonal_vector());
  }
  return out;
}

// The B-submodule of sl_n generated by E_gamma: root spaces of the Demazure
// up-set plus h_pq for p < q with e_q - e_p in the up-set.
inline HessenbergSpace demazure_space(const Root& gamma) {
  if (gamma.system != System::A) throw std::invalid_argument("demazure_space: type A only");
  RootIdeal ideal = demazure_upset(gamma);
  auto cartan = generated_cartan(System::A, gamma.rank, ideal);
  return HessenbergSpace{System::A, gamma.rank, std::move(ideal), std::move(cartan)};
}

// --- enumeration of root upper-ideals and spaces ---

// All upper ideals of (Phi, <=) whose complement size lies in [lo, hi]
// (hi < 0 means unbounded). DFS over a maximal-first linear extension.
inline std::vector<RootIdeal> upper_ideals(System sys, int rank, int lo = 0, int hi = -1) {
  const auto roots = all_roots(sys, rank);
  const int k = static_cast<int>(roots.size());
  // linear extension: sort descending by number of elements above
  std::vector<int> above(k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && leq_demazure(roots[a], roots[b])) ++above[a];
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return above[a] < above[b]; });

  std::vector<RootIdeal> out;
  std::vector<char> in(k, 0);
  std::function<void(int, int)> rec = [&](int t, int missing) {
    if (hi >= 0 && missing > hi) return;
    if (t == k) {
      if (missing >= lo) {
        RootIdeal ideal{sys, rank, {}};
        for (int a = 0; a < k; ++a)
          if (in[a]) ideal.roots.insert(roots[a]);
        out.push_back(std::move(ideal));
      }
      return;
    }
    const int cur = order[t];
    // include: allowed only if everything above cur is already included
    bool can_include = true;
    for (int s = 0; s < t && can_include; ++s) {
      const int prev = order[s];
      if (!in[prev] && leq_demazure(roots[cur], roots[prev])) can_include = false;
    }
    if (can_include) {
      in[cur] = 1;
      rec(t + 1, missing);
      in[cur] = 0;
    }
    rec(t + 1, missing + 1);
  };
  rec(0, 0);
  return out;
}

// Emits every Hessenberg space whose root ideal has complement size in
// [codim_lo, codim_hi], paired with Cartan parts per policy. Every emitted
// space validates: the generated policy always produces a b-module, while a
// full (or explicit) Cartan is only compatible with ideals large enough to
// absorb its brackets (a full Cartan forces b <= H), so incompatible pairs
// are skipped.
template <typename Fn>
void enumerate_spaces(System sys, int rank, int codim_lo, int codim_hi, CartanPolicy policy,
                      Fn&& fn,
                      const std::vector<std::vector<Rational>>* explicit_cartan = nullptr) {
  for (RootIdeal& ideal : upper_ideals(sys, rank, codim_lo, codim_hi)) {
    std::vector<std::vector<Rational>> cartan;
    switch (policy) {
      case CartanPolicy::Full:
        cartan = full_cartan(sys, rank);
        break;
      case CartanPolicy::Generated:
        cartan = generated_cartan(sys, rank, ideal);
        break;
      case CartanPolicy::ExplicitList:
        if (!explicit_cartan)
          throw std::invalid_argument("enumerate_spaces: explicit cartan list required");
        cartan = *explicit_cartan;
        break;
    }
    HessenbergSpace H{sys, rank, std::move(ideal), std::move(cartan)};
    auto res = validate(H);
    if (!res.ok) {
      if (policy == CartanPolicy::Generated)
        throw std::logic_error("enumerate_spaces: generated space fails validation: " +
                               res.message);
      continue;
    }
    fn(H);
  }
}

inline std::vector<HessenbergSpace> enumerate_spaces_list(System sys, int rank, int codim_lo,
                                                          int codim_hi, CartanPolicy policy) {
  std::vector<HessenbergSpace> out;
  enumerate_spaces(sys, rank, codim_lo, codim_hi, policy,
                   [&](const HessenbergSpace& H) { out.push_back(H); });
  return out;
}

// --- the type C -> type A lift ---

// Phi_H is the union of fold fibers over the type C ideal; the Cartan part is
// spanned by H_C's Cartan vectors together with h_ij for pairs with both
// +/-(e_i - e_j) in Phi_H.
inline HessenbergSpace lift_C_to_A(const HessenbergSpace& HC) {
  if (HC.system != System::C) throw std::invalid_argument("lift_C_to_A: type C space required");
  auto vr = validate(HC);
  if (!vr.ok) throw std::invalid_argument("lift_C_to_A: input space is invalid: " + vr.message);
  const int n = HC.rank, m = 2 * n;
  RootIdeal ideal{System::A, m, {}};
  for (const Root& c : HC.roots.roots)
    for (const Root& a : fiber(c)) ideal.roots.insert(a);

  std::vector<std::vector<Rational>> cartan = HC.cartan;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (ideal.contains(root_a(m, i, j)) && ideal.contains(root_a(m, j, i))) {
        std::vector<Rational> d(m, Rational(0));
        d[i - 1] = Rational(1);
        d[j - 1] = Rational(-1);
        cartan.push_back(std::move(d));
      }
  HessenbergSpace H{System::A, m, std::move(ideal), std::move(cartan)};
  return H;
}

// --- sigma-fixed part of a sigma-stable type A space ---

inline bool is_sigma_stable(const HessenbergSpace& H) {
  if (H.system != System::A || H.rank % 2 != 0) return false;
  SpanChecker span(H.basis());
  for (const RationalMatrix& v : H.basis())
    if (!span.contains(sigma_matrix(v))) return false;
  return true;
}

// Basis of H^sigma computed as independent vectors among sigma_bar(basis).
inline std::vector<RationalMatrix> sigma_fixed_subspace(const HessenbergSpace& H) {
  if (!is_sigma_stable(H))
    throw std::invalid_argument("sigma_fixed_subspace: space is not sigma-stable");
  std::vector<RationalMatrix> out;
  std::vector<RationalMatrix> kept;
  for (const RationalMatrix& v : H.basis()) {
    RationalMatrix s = sigma_bar(v);
    if (s.is_zero()) continue;
    kept.push_back(s);
    SpanChecker span(kept);
    if (span.dim() == static_cast<int>(kept.size()))
      out.push_back(std::move(s));
    else
      kept.pop_back();
  }
  return out;
}

// Exact subspace containment: every basis vector of inner lies in span(outer).
inline bool space_contains(const HessenbergSpace& outer, const HessenbergSpace& inner) {
  SpanChecker span(outer.basis());
  for (const RationalMatrix& v : inner.basis())
    if (!span.contains(v)) return false;
  return true;
}

}  // namespace hesslab
