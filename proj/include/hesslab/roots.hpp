// Roots of types A_{n-1} and C_n, the two partial orders on them, Demazure
// up-sets, Weyl actions, the folding map, and highest-root stabilizer data.
//
// Type A roots are index pairs (i,j) ~ e_i - e_j in [n]. Type C roots are
// folded classes {(i,j), (j',i')} of type A pairs in [2n], stored by their
// lexicographically least representative; the class of (i,j) realizes
// (1/2)(ebar_i - ebar_j) on the sigma-fixed Cartan.

#pragma once

#include "permutation.hpp"

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hesslab {

enum class System { A, C };

inline std::string system_name(System s) { return s == System::A ? "A" : "C"; }

// For system A the indices live in [rank] (rank = n of S_n / sl_n).
// For system C `rank` is n and the indices live in [2n].
struct Root {
  System system;
  int rank;
  int i, j;

  friend bool operator==(const Root& a, const Root& b) {
    return a.system == b.system && a.rank == b.rank && a.i == b.i && a.j == b.j;
  }
  friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
  friend bool operator<(const Root& a, const Root& b) {
    if (a.system != b.system) return a.system < b.system;
    if (a.rank != b.rank) return a.rank < b.rank;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  std::string str() const {
    return system_name(system) + std::to_string(rank) + "(" + std::to_string(i) + "," +
           std::to_string(j) + ")";
  }
};

inline Root root_a(int n, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw std::invalid_argument("root_a: need distinct i, j in [n]");
  return Root{System::A, n, i, j};
}

// Canonical class representative: lexicographically least of {(i,j),(j',i')}.
inline Root root_c(int n, int i, int j) {
  const int m = 2 * n;
  if (i == j || i < 1 || j < 1 || i > m || j > m)
    throw std::invalid_argument("root_c: need distinct i, j in [2n]");
  const int pi = primed(j, m), pj = primed(i, m);
  if (pi < i || (pi == i && pj < j)) return Root{System::C, n, pi, pj};
  return Root{System::C, n, i, j};
}

// phi(e_i - e_j) for a type A root in S_2n indexing.
inline Root fold(const Root& a) {
  if (a.system != System::A || a.rank % 2 != 0)
    throw std::invalid_argument("fold: expects a type A root of even rank");
  return root_c(a.rank / 2, a.i, a.j);
}

// The sigma-orbit of type A roots over a class.
inline std::vector<Root> fiber(const Root& c) {
  if (c.system != System::C) throw std::invalid_argument("fiber: expects a type C root");
  const int m = 2 * c.rank;
  std::vector<Root> out{Root{System::A, m, c.i, c.j}};
  const int pi = primed(c.j, m), pj = primed(c.i, m);
  if (pi != c.i || pj != c.j) out.push_back(Root{System::A, m, pi, pj});
  return out;
}

inline bool is_long(const Root& c) {
  return c.system == System::C && c.j == primed(c.i, 2 * c.rank);
}

inline bool is_positive(const Root& r) { return r.i < r.j; }

inline Root negate(const Root& r) {
  if (r.system == System::A) return Root{System::A, r.rank, r.j, r.i};
  return root_c(r.rank, r.j, r.i);
}

inline std::vector<Root> all_roots(System sys, int rank) {
  std::vector<Root> out;
  if (sys == System::A) {
    for (int i = 1; i <= rank; ++i)
      for (int j = 1; j <= rank; ++j)
        if (i != j) out.push_back(Root{System::A, rank, i, j});
  } else {
    std::set<Root> classes;
    const int m = 2 * rank;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j)
        if (i != j) classes.insert(root_c(rank, i, j));
    out.assign(classes.begin(), classes.end());
  }
  return out;
}

inline std::vector<Root> positive_roots(System sys, int rank) {
  std::vector<Root> out;
  for (const Root& r : all_roots(sys, rank))
    if (is_positive(r)) out.push_back(r);
  return out;
}

inline Root highest_root(System sys, int rank) {
  if (sys == System::A) {
    if (rank < 2) throw std::invalid_argument("highest_root: rank >= 2 required in type A");
    return root_a(rank, 1, rank);
  }
  if (rank < 1) throw std::invalid_argument("highest_root: rank >= 1 required");
  return root_c(rank, 1, 2 * rank);  // the long class of (1, 1')
}

// Coordinates in an exact integer basis: type A in the epsilon basis of Z^n,
// type C in the f-basis of Z^n (f_a = restriction of epsilon_a, a <= n).
inline std::vector<long long> root_coords(const Root& r) {
  if (r.system == System::A) {
    std::vector<long long> c(r.rank, 0);
    c[r.i - 1] += 1;
    c[r.j - 1] -= 1;
    return c;
  }
  const int n = r.rank, m = 2 * n;
  std::vector<long long> c(n, 0);
  auto add = [&](int idx, long long s) {
    if (idx <= n)
      c[idx - 1] += s;
    else
      c[primed(idx, m) - 1] -= s;
  };
  add(r.i, 1);
  add(r.j, -1);
  return c;
}

namespace detail {

inline void check_same_system(const Root& g, const Root& b, const char* who) {
  if (g.system != b.system || g.rank != b.rank)
    throw std::invalid_argument(std::string(who) + ": roots from different systems");
}

}  // namespace detail

// beta - gamma is a nonnegative integer combination of simple roots.
inline bool preceq(const Root& g, const Root& b) {
  detail::check_same_system(g, b, "preceq");
  const auto cg = root_coords(g), cb = root_coords(b);
  const int n = static_cast<int>(cg.size());
  std::vector<long long> d(n);
  for (int a = 0; a < n; ++a) d[a] = cb[a] - cg[a];
  if (g.system == System::A) {
    long long partial = 0;
    for (int a = 0; a < n - 1; ++a) {
      partial += d[a];
      if (partial < 0) return false;
    }
    partial += d[n - 1];
    return partial == 0;
  }
  // C_n: simple basis f_a - f_{a+1} (a < n), 2 f_n.
  long long partial = 0;
  for (int a = 0; a < n - 1; ++a) {
    partial += d[a];
    if (partial < 0) return false;
  }
  partial += d[n - 1];
  return partial >= 0 && partial % 2 == 0;
}

namespace detail {

// Reachability closure of the one-step relation gamma -> gamma + n*delta
// (delta positive, n >= 1, target a root) over a finite root list.
struct DemazureClosure {
  std::vector<Root> roots;            // sorted
  std::map<Root, int> index;
  std::vector<std::vector<char>> leq;  // leq[a][b] : roots[a] <= roots[b]
};

inline const DemazureClosure& demazure_closure(System sys, int rank) {
  static std::map<std::pair<int, int>, DemazureClosure> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(sys == System::A ? 0 : 1, rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  DemazureClosure cl;
  cl.roots = all_roots(sys, rank);
  std::map<std::vector<long long>, int> by_coords;
  for (int a = 0; a < static_cast<int>(cl.roots.size()); ++a) {
    cl.index[cl.roots[a]] = a;
    by_coords[root_coords(cl.roots[a])] = a;
  }
  const int nr = static_cast<int>(cl.roots.size());
  std::vector<std::vector<int>> succ(nr);
  for (int a = 0; a < nr; ++a) {
    const auto ca = root_coords(cl.roots[a]);
    for (const Root& delta : cl.roots) {
      if (!is_positive(delta)) continue;
      auto cd = root_coords(delta);
      auto cur = ca;
      for (int mult = 1; mult <= 4; ++mult) {
        for (size_t t = 0; t < cur.size(); ++t) cur[t] += cd[t];
        auto hit = by_coords.find(cur);
        if (hit != by_coords.end()) succ[a].push_back(hit->second);
      }
    }
  }
  cl.leq.assign(nr, std::vector<char>(nr, 0));
  for (int a = 0; a < nr; ++a) {
    // BFS from a
    std::vector<int> stack{a};
    cl.leq[a][a] = 1;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int nxt : succ[cur])
        if (!cl.leq[a][nxt]) {
          cl.leq[a][nxt] = 1;
          stack.push_back(nxt);
        }
    }
  }
  return cache.emplace(key, std::move(cl)).first->second;
}

}  // namespace detail

// Demazure order: gamma <= beta iff g_beta lies in the B-module generated by
// E_gamma. Type A has the closed form (k <= i and l >= j); type C is decided
// by chain reachability over Phi_C.
inline bool leq_demazure(const Root& g, const Root& b) {
  detail::check_same_system(g, b, "leq_demazure");
  if (g.system == System::A) return b.i <= g.i && b.j >= g.j;
  const auto& cl = detail::demazure_closure(System::C, g.rank);
  return cl.leq[cl.index.at(g)][cl.index.at(b)] != 0;
}

struct RootIdeal {
  System system;
  int rank;
  std::set<Root> roots;

  bool contains(const Root& r) const { return roots.count(r) > 0; }

  bool is_upper_ideal() const {
    for (const Root& g : roots)
      for (const Root& b : all_roots(system, rank))
        if (leq_demazure(g, b) && !contains(b)) return false;
    return true;
  }
};

// {beta : gamma <= beta}.
inline RootIdeal demazure_upset(const Root& g) {
  RootIdeal ideal{g.system, g.rank, {}};
  for (const Root& b : all_roots(g.system, g.rank))
    if (leq_demazure(g, b)) ideal.roots.insert(b);
  return ideal;
}

// Upward closure of a root set.
inline RootIdeal upward_closure(System sys, int rank, const std::vector<Root>& gens) {
  RootIdeal ideal{sys, rank, {}};
  for (const Root& g : gens)
    for (const Root& b : all_roots(sys, rank))
      if (leq_demazure(g, b)) ideal.roots.insert(b);
  return ideal;
}

// w(e_i - e_j) = e_{w(i)} - e_{w(j)}; for type C, the action of a signed
// permutation on classes (well-defined on sigma-orbits).
inline Root weyl_action(const Permutation& w, const Root& r) {
  if (r.system == System::A) {
    if (w.size() != r.rank) throw std::invalid_argument("weyl_action: size mismatch");
    return root_a(r.rank, w(r.i), w(r.j));
  }
  if (w.size() != 2 * r.rank) throw std::invalid_argument("weyl_action: size mismatch");
  if (!is_signed(w)) throw std::invalid_argument("weyl_action: type C needs a signed permutation");
  return root_c(r.rank, w(r.i), w(r.j));
}

// Stabilizer W_theta of the type A highest root: permutations fixing 1 and n.
struct ThetaStabilizer {
  int n;

  bool member(const Permutation& w) const { return w(1) == 1 && w(n) == n; }

  std::vector<Permutation> generators() const {
    std::vector<Permutation> gens;
    for (int i = 2; i <= n - 2; ++i) gens.push_back(Permutation::simple_reflection(i, n));
    return gens;
  }

  long long order() const {
    long long o = 1;
    for (int t = 2; t <= n - 2; ++t) o *= t;
    return o;
  }

  // s_theta = (1, n), the minimal length representative of W_theta w_0.
  Permutation s_theta() const { return Permutation::transposition(1, n, n); }

  std::vector<Permutation> elements() const {
    std::vector<Permutation> out;
    for (const Permutation& w : all_permutations(n))
      if (member(w)) out.push_back(w);
    return out;
  }

  std::vector<Permutation> coset_w0() const {
    std::vector<Permutation> out;
    const Permutation w0 = Permutation::longest_element(n);
    for (const Permutation& y : elements()) out.push_back(y * w0);
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline ThetaStabilizer theta_stabilizer(int n) {
  if (n < 2) throw std::invalid_argument("theta_stabilizer: n >= 2 required");
  return ThetaStabilizer{n};
}

}  // namespace hesslab
