// Permutations and signed permutations in one-line notation, Bruhat order
// via the tableau criterion, pattern containment, pattern-avoidance counts,
// and lower Bruhat intervals.
//
// The type C Weyl group is handled as the subgroup of S_2n of windows with
// w(i)' = w(i') for i' = 2n+1-i; its Bruhat order is the restriction of the
// S_2n order.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hesslab {

class Permutation {
public:
  explicit Permutation(std::vector<int> window) : w_(std::move(window)) {
    const int n = static_cast<int>(w_.size());
    if (n == 0) throw std::invalid_argument("Permutation: empty window");
    std::vector<char> seen(n + 1, 0);
    for (int v : w_) {
      if (v < 1 || v > n || seen[v])
        throw std::invalid_argument("Permutation: window is not a bijection of [n]");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  // s_i exchanges i and i+1.
  static Permutation simple_reflection(int i, int n) {
    if (i < 1 || i >= n) throw std::invalid_argument("simple_reflection: index out of range");
    Permutation w = identity(n);
    std::swap(w.w_[i - 1], w.w_[i]);
    return w;
  }

  static Permutation longest_element(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
  }

  // Transposition (a, b).
  static Permutation transposition(int a, int b, int n) {
    Permutation w = identity(n);
    std::swap(w.w_[a - 1], w.w_[b - 1]);
    return w;
  }

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }  // 1-based
  const std::vector<int>& window() const { return w_; }

  Permutation inverse() const {
    std::vector<int> inv(w_.size());
    for (int i = 0; i < size(); ++i) inv[w_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
  }

  // (u*v)(i) = u(v(i)).
  Permutation operator*(const Permutation& v) const {
    if (size() != v.size()) throw std::invalid_argument("Permutation product: size mismatch");
    std::vector<int> w(w_.size());
    for (int i = 0; i < size(); ++i) w[i] = w_[v.w_[i] - 1];
    return Permutation(std::move(w));
  }

  // Number of inversions.
  int length() const {
    int len = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (w_[i] > w_[j]) ++len;
    return len;
  }

  int sign() const { return length() % 2 == 0 ? 1 : -1; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (w_[i] != i + 1) return false;
    return true;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < size(); ++i) {
      if (i) s += ",";
      s += std::to_string(w_[i]);
    }
    return s + "]";
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.w_ == b.w_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return a.w_ != b.w_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.w_ < b.w_; }

  friend std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << w.str(); }

private:
  std::vector<int> w_;
};

// I_{j,k}(w): the j-th smallest element of {w_1, ..., w_k}.
inline int tableau_entry(const Permutation& w, int j, int k) {
  if (j < 1 || k < j || k > w.size())
    throw std::out_of_range("tableau_entry: need 1 <= j <= k <= n");
  std::vector<int> prefix(w.window().begin(), w.window().begin() + k);
  std::nth_element(prefix.begin(), prefix.begin() + (j - 1), prefix.end());
  return prefix[j - 1];
}

// r_{p,q}(w) = |{i <= p : w_i <= q}|, the rank conditions cutting out X_w in
// the flag model.
inline int rank_count(const Permutation& w, int p, int q) {
  if (p < 1 || q < 1 || p > w.size() || q > w.size())
    throw std::out_of_range("rank_count: indices in [n] required");
  int c = 0;
  for (int i = 1; i <= p; ++i)
    if (w(i) <= q) ++c;
  return c;
}

// Tableau criterion: v <= w iff I_{j,k}(v) <= I_{j,k}(w) for all j <= k.
inline bool bruhat_leq(const Permutation& v, const Permutation& w) {
  const int n = v.size();
  if (n != w.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
  std::vector<int> pv, pw;
  pv.reserve(n);
  pw.reserve(n);
  for (int k = 1; k <= n; ++k) {
    pv.insert(std::upper_bound(pv.begin(), pv.end(), v(k)), v(k));
    pw.insert(std::upper_bound(pw.begin(), pw.end(), w(k)), w(k));
    for (int j = 0; j < k; ++j)
      if (pv[j] > pw[j]) return false;
  }
  return true;
}

// Positions i_1 < ... < i_m whose values order-match p, or nullopt when w
// avoids p. Returns the lexicographically least witness.
inline std::optional<std::vector<int>> contains_pattern(const Permutation& w,
                                                        const Permutation& p) {
  const int n = w.size(), m = p.size();
  if (m > n) return std::nullopt;
  std::vector<int> pos(m, 0);
  // DFS over positions; partial consistency: relative order of chosen values
  // must match the pattern prefix.
  std::vector<int> chosen;
  chosen.reserve(m);
  std::function<bool(int, int)> dfs = [&](int depth, int start) -> bool {
    if (depth == m) return true;
    for (int i = start; i <= n - (m - depth) + 1; ++i) {
      bool ok = true;
      for (int t = 0; t < depth && ok; ++t) {
        const bool want = p(t + 1) < p(depth + 1);
        const bool got = chosen[t] < w(i);
        if (want != got) ok = false;
      }
      if (!ok) continue;
      pos[depth] = i;
      chosen.push_back(w(i));
      if (dfs(depth + 1, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(0, 1)) return std::nullopt;
  return pos;
}

namespace detail {

// Does the prefix w_1..w_len contain p using position len as the last match?
inline bool prefix_new_containment(const std::vector<int>& w, int len, const Permutation& p) {
  const int m = p.size();
  if (len < m) return false;
  std::vector<int> chosen(m);
  chosen[m - 1] = w[len - 1];
  std::function<bool(int, int)> dfs = [&](int depth, int last_pos) -> bool {
    // depth counts down: slots [0, depth) still free, slot depth..m-1 filled
    if (depth == 0) return true;
    for (int i = last_pos - 1; i >= depth; --i) {
      bool ok = true;
      for (int t = depth; t < m && ok; ++t) {
        const bool want = p(depth) < p(t + 1);
        const bool got = w[i - 1] < chosen[t];
        if (want != got) ok = false;
      }
      if (!ok) continue;
      chosen[depth - 1] = w[i - 1];
      if (dfs(depth - 1, i)) return true;
    }
    return false;
  };
  return dfs(m - 1, len);
}

}  // namespace detail

// |S_n(p)| by pruned depth-first construction: a branch is cut as soon as the
// prefix contains p (only subsequences ending at the new letter are tested).
inline long long count_avoiders(int n, const Permutation& p) {
  if (n < 1) throw std::invalid_argument("count_avoiders: n >= 1 required");
  long long count = 0;
  std::vector<int> prefix;
  prefix.reserve(n);
  std::vector<char> used(n + 1, 0);
  std::function<void(int)> dfs = [&](int depth) {
    if (depth == n) {
      ++count;
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      prefix.push_back(v);
      used[v] = 1;
      if (!detail::prefix_new_containment(prefix, depth + 1, p)) dfs(depth + 1);
      prefix.pop_back();
      used[v] = 0;
    }
  };
  dfs(0);
  return count;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

struct BruhatInterval {
  Permutation top;
  std::vector<Permutation> members;  // sorted by window
};

// Streams every v <= w. Materialization is only offered for n <= 8.
template <typename Fn>
void for_lower_interval(const Permutation& w, Fn&& fn) {
  const int n = w.size();
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    Permutation cand(v);
    if (bruhat_leq(cand, w)) fn(cand);
  } while (std::next_permutation(v.begin(), v.end()));
}

inline BruhatInterval lower_interval(const Permutation& w) {
  if (w.size() > 8)
    throw std::invalid_argument("lower_interval: materialization limited to n <= 8; use for_lower_interval");
  BruhatInterval iv{w, {}};
  for_lower_interval(w, [&](const Permutation& v) { iv.members.push_back(v); });
  return iv;
}

inline long long lower_interval_size(const Permutation& w) {
  long long c = 0;
  for_lower_interval(w, [&](const Permutation&) { ++c; });
  return c;
}

// --- signed permutations (type C inside S_2n) ---

inline int primed(int i, int two_n) { return two_n + 1 - i; }

// Window of even size 2n with w(i)' = w(i') for all i.
inline bool is_signed(const Permutation& w) {
  const int m = w.size();
  if (m % 2 != 0) throw std::invalid_argument("is_signed: window size must be even");
  for (int i = 1; i <= m; ++i)
    if (primed(w(i), m) != w(primed(i, m))) return false;
  return true;
}

// All signed permutations in S_2n (order 2^n n!).
inline std::vector<Permutation> signed_permutations(int two_n) {
  if (two_n % 2 != 0) throw std::invalid_argument("signed_permutations: even size required");
  const int n = two_n / 2;
  std::vector<Permutation> out;
  // Choose w on positions 1..n freely among +/- images; mirror the rest.
  std::vector<int> targets(n);
  std::iota(targets.begin(), targets.end(), 1);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> w(two_n);
      for (int i = 1; i <= n; ++i) {
        int base = targets[perm[i - 1]];
        int val = (mask >> (i - 1)) & 1 ? primed(base, two_n) : base;
        w[i - 1] = val;
        w[primed(i, two_n) - 1] = primed(val, two_n);
      }
      out.emplace_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hesslab

template <>
struct std::hash<hesslab::Permutation> {
  size_t operator()(const hesslab::Permutation& w) const {
    size_t h = 1469598103934665603ull;
    for (int v : w.window()) {
      h ^= static_cast<size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};
