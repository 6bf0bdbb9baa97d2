// The certification core: fixed-point profiles, symbolic cell containment,
// Groebner disjointness, equality verdicts against Schubert varieties, Euler
// counts, Poincare polynomials, highest-weight adjoint varieties, the raising
// witnesses, and the type C cell-transfer check.

#pragma once

#include "groebner.hpp"
#include "hessenberg.hpp"
#include "matrix.hpp"
#include "permutation.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "roots.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hesslab {

// --- model ---

struct HessenbergModel {
  System system;
  int rank;
  RationalMatrix x;
  HessenbergSpace H;
};

inline HessenbergModel make_model(RationalMatrix x, HessenbergSpace H) {
  const int m = H.ambient_size();
  if (x.rank() != m) throw std::invalid_argument("make_model: x has wrong rank");
  if (!x.trace().is_zero()) throw std::invalid_argument("make_model: x must be trace zero");
  if (H.system == System::C && !is_sigma_fixed(x))
    throw std::invalid_argument("make_model: type C requires sigma-fixed x");
  auto vr = validate(H);
  if (!vr.ok) throw std::invalid_argument("make_model: H is not a Hessenberg space: " + vr.message);
  return HessenbergModel{H.system, H.rank, std::move(x), std::move(H)};
}

inline std::vector<Permutation> weyl_elements(System sys, int rank) {
  return sys == System::A ? all_permutations(rank) : signed_permutations(2 * rank);
}

// --- fixed-point profile ---

// {w in W : Ad(w^{-1}) x lies in H}, exact.
inline std::vector<Permutation> fixed_point_profile(const HessenbergModel& m) {
  SpanChecker span(m.H.basis());
  std::vector<Permutation> out;
  for (const Permutation& w : weyl_elements(m.system, m.rank)) {
    const RationalMatrix rep = rep_matrix(w, m.system).matrix;
    if (span.contains(adjoint(rep.inverse(), m.x))) out.push_back(w);
  }
  return out;
}

// --- symbolic cells ---

inline std::vector<RationalMatrix> default_unipotent_basis(System sys, int rank) {
  std::vector<RationalMatrix> out;
  if (sys == System::A) {
    for (int a = 1; a <= rank; ++a)
      for (int b = a + 1; b <= rank; ++b) out.push_back(RationalMatrix::elementary(rank, a, b));
  } else {
    for (const Root& g : positive_roots(System::C, rank)) out.push_back(root_vector(g));
  }
  return out;
}

inline std::vector<std::string> unipotent_variable_names(System sys, int rank) {
  std::vector<std::string> names;
  if (sys == System::A) {
    for (int a = 1; a <= rank; ++a)
      for (int b = a + 1; b <= rank; ++b)
        names.push_back("t[" + std::to_string(a) + "," + std::to_string(b) + "]");
  } else {
    for (const Root& g : positive_roots(System::C, rank))
      names.push_back("t[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]");
  }
  return names;
}

// Annihilator of the Cartan part inside the diagonal coordinate space:
// functionals vanishing exactly on the span of the Cartan vectors. Type A
// works in all n diagonal coordinates (the all-ones trace functional may
// appear; it vanishes identically on sl_n). Type C uses d_1..d_n.
inline std::vector<std::vector<Rational>> cartan_annihilator(const HessenbergSpace& H) {
  const int m = H.ambient_size();
  const int dim = H.system == System::A ? m : H.rank;
  // rows = cartan vectors restricted to the first `dim` coordinates
  std::vector<std::vector<Rational>> rows;
  for (const auto& d : H.cartan) {
    std::vector<Rational> r(d.begin(), d.begin() + dim);
    rows.push_back(std::move(r));
  }
  // nullspace of the row matrix: {f : rows * f = 0}
  const int nr = static_cast<int>(rows.size());
  std::vector<std::vector<Rational>> mat = rows;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < dim && r < nr; ++c) {
    int p = -1;
    for (int t = r; t < nr; ++t)
      if (!mat[t][c].is_zero()) {
        p = t;
        break;
      }
    if (p < 0) continue;
    std::swap(mat[r], mat[p]);
    const Rational inv = mat[r][c].inverse();
    for (int cc = 0; cc < dim; ++cc) mat[r][cc] *= inv;
    for (int t = 0; t < nr; ++t) {
      if (t == r || mat[t][c].is_zero()) continue;
      const Rational f = mat[t][c];
      for (int cc = 0; cc < dim; ++cc) mat[t][cc] -= f * mat[r][cc];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> ann;
  std::vector<char> is_pivot(dim, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  for (int free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> f(dim, Rational(0));
    f[free] = Rational(1);
    for (int t = 0; t < r; ++t) f[pivot_col[t]] = -mat[t][free];
    ann.push_back(std::move(f));
  }
  return ann;
}

// Shared per-model symbolic state: Ad(u^{-1}) x over the cell parameters.
struct CellContext {
  System system;
  int rank;
  int nvars;
  std::vector<std::string> names;
  PolyMatrix conjugated;  // Ad(u^{-1}) x, parameters t
  std::vector<std::vector<Rational>> cartan_ann;
  const HessenbergModel* model;
};

inline CellContext cell_setup(const HessenbergModel& m,
                              const std::vector<RationalMatrix>& unipotent_basis) {
  const int msz = m.H.ambient_size();
  const int nv = static_cast<int>(unipotent_basis.size());
  if (nv == 0) throw std::invalid_argument("cell_setup: empty unipotent basis");
  for (const auto& g : unipotent_basis) {
    PolyMatrix chk = PolyMatrix::from_rational(g, 1);
    if (!strictly_upper(chk))
      throw std::invalid_argument("cell_setup: basis not nilpotent-triangular");
  }
  PolyMatrix Y(msz, nv);
  for (int k = 0; k < nv; ++k) {
    for (const auto& [ij, v] : unipotent_basis[k].entries())
      Y.add_to(ij.first, ij.second, MultiPoly::variable(nv, k, v));
  }
  PolyMatrix X = PolyMatrix::from_rational(m.x, nv);
  PolyMatrix u(msz, nv), u_inv(msz, nv);
  if (m.system == System::A) {
    u = PolyMatrix::identity(msz, nv) + Y;
    u_inv = unipotent_inverse(u);
  } else {
    u = exp_nilpotent(Y);
    u_inv = exp_nilpotent(Rational(-1) * Y);
  }
  CellContext ctx{m.system, m.rank, nv, unipotent_variable_names(m.system, m.rank),
                  u_inv * X * u, cartan_annihilator(m.H), &m};
  return ctx;
}

// Membership polynomials of the cell C_v: coordinates of Ad((u v)^{-1}) x
// along a complement of H (missing root spaces plus the Cartan annihilator).
// The cell lies in B(x, H) iff all of them vanish identically.
inline std::vector<MultiPoly> cell_membership_polys(const CellContext& ctx, const Permutation& v) {
  const HessenbergModel& m = *ctx.model;
  const int msz = m.H.ambient_size();
  if (v.size() != msz) throw std::invalid_argument("cell_membership_polys: size mismatch");
  const RationalMatrix rep = rep_matrix(v, m.system).matrix;
  // column signs: rep maps e_a to c_a e_{v(a)}
  std::vector<Rational> colsign(msz + 1, Rational(0));
  for (int a = 1; a <= msz; ++a) colsign[a] = rep.get(v(a), a);
  auto conj_entry = [&](int a, int b) {
    // (rep^{-1} y0 rep)_(a,b) = c_b / c_a * y0_{v(a), v(b)}
    const Rational f = colsign[b] / colsign[a];
    return f * ctx.conjugated.get(v(a), v(b));
  };

  std::vector<MultiPoly> polys;
  if (m.system == System::A) {
    for (int a = 1; a <= msz; ++a)
      for (int b = 1; b <= msz; ++b) {
        if (a == b) continue;
        if (!m.H.roots.contains(root_a(msz, a, b))) polys.push_back(conj_entry(a, b));
      }
  } else {
    for (const Root& g : all_roots(System::C, m.rank))
      if (!m.H.roots.contains(g)) polys.push_back(conj_entry(g.i, g.j));
  }
  const int dim = m.system == System::A ? msz : m.rank;
  for (const auto& f : ctx.cartan_ann) {
    MultiPoly p = MultiPoly::zero(ctx.nvars);
    for (int a = 1; a <= dim; ++a)
      if (!f[a - 1].is_zero()) p += f[a - 1] * conj_entry(a, a);
    polys.push_back(std::move(p));
  }
  return polys;
}

inline std::vector<MultiPoly> cell_membership_polys(const Permutation& v, const HessenbergModel& m,
                                                    const std::vector<RationalMatrix>& basis) {
  CellContext ctx = cell_setup(m, basis);
  return cell_membership_polys(ctx, v);
}

// --- cell certificates ---

enum class CellStatus { Contained, NotContained, Disjoint, Meets, Indeterminate };

inline std::string cell_status_name(CellStatus s) {
  switch (s) {
    case CellStatus::Contained: return "CONTAINED";
    case CellStatus::NotContained: return "NOT_CONTAINED";
    case CellStatus::Disjoint: return "DISJOINT";
    case CellStatus::Meets: return "MEETS";
    case CellStatus::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

struct CellCertificate {
  Permutation v;
  CellStatus status;
  std::vector<MultiPoly> membership_polys;
  std::optional<std::vector<Rational>> witness_point;  // NOT_CONTAINED: some poly != 0 here
  std::optional<std::vector<Rational>> meet_point;     // MEETS: common zero
  std::optional<GroebnerCertificate> groebner_cert;    // DISJOINT (or consistent attempt)
};

namespace detail {

// Deterministic point where some polynomial is nonzero; a nonzero polynomial
// misses the zero set at almost every point, so a short seeded search finds one.
inline std::vector<Rational> nonvanishing_point(const std::vector<MultiPoly>& polys, int nvars,
                                                uint64_t seed) {
  auto some_nonzero = [&](const std::vector<Rational>& pt) {
    for (const auto& p : polys)
      if (!p.evaluate(pt).is_zero()) return true;
    return false;
  };
  std::vector<Rational> pt(nvars, Rational(0));
  if (some_nonzero(pt)) return pt;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-1000, 1000);
  for (int tries = 0; tries < 10000; ++tries) {
    for (auto& c : pt) c = Rational(dist(rng));
    if (some_nonzero(pt)) return pt;
  }
  throw std::logic_error("nonvanishing_point: no witness found (polynomials all zero?)");
}

inline bool all_vanish(const std::vector<MultiPoly>& polys, const std::vector<Rational>& pt) {
  for (const auto& p : polys)
    if (!p.evaluate(pt).is_zero()) return false;
  return true;
}

}  // namespace detail

inline CellCertificate cell_certificate(const CellContext& ctx, const Permutation& v,
                                        const GroebnerBudget& budget = {},
                                        uint64_t seed = 2024) {
  CellCertificate cert{v, CellStatus::Indeterminate, cell_membership_polys(ctx, v),
                       std::nullopt, std::nullopt, std::nullopt};
  bool all_zero = true;
  for (const auto& p : cert.membership_polys)
    if (!p.is_zero()) {
      all_zero = false;
      break;
    }
  if (all_zero) {
    cert.status = CellStatus::Contained;
    return cert;
  }
  cert.witness_point = detail::nonvanishing_point(cert.membership_polys, ctx.nvars, seed);

  // v's own torus-fixed point (t = 0) meets the variety iff all polys vanish at 0
  std::vector<Rational> origin(ctx.nvars, Rational(0));
  if (detail::all_vanish(cert.membership_polys, origin)) {
    cert.status = CellStatus::Meets;
    cert.meet_point = origin;
    return cert;
  }

  std::vector<MultiPoly> gens;
  for (const auto& p : cert.membership_polys)
    if (!p.is_zero()) gens.push_back(p);
  GroebnerCertificate gb = groebner(gens, budget, true);
  if (gb.status == GroebnerStatus::BudgetExceeded) {
    cert.status = CellStatus::Indeterminate;
    cert.groebner_cert = std::move(gb);
    return cert;
  }
  if (gb.inconsistent) {
    cert.status = CellStatus::Disjoint;
    cert.groebner_cert = std::move(gb);
    return cert;
  }
  // consistent basis: downgrade to MEETS only with an exhibited rational zero
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<int> dist(-20, 20);
  std::vector<Rational> pt(ctx.nvars, Rational(0));
  for (int tries = 0; tries < 200; ++tries) {
    for (auto& c : pt) c = Rational(dist(rng));
    if (detail::all_vanish(cert.membership_polys, pt)) {
      cert.status = CellStatus::Meets;
      cert.meet_point = pt;
      cert.groebner_cert = std::move(gb);
      return cert;
    }
  }
  cert.status = CellStatus::NotContained;
  cert.groebner_cert = std::move(gb);
  return cert;
}

inline CellCertificate cell_certificate(const Permutation& v, const HessenbergModel& m,
                                        const GroebnerBudget& budget = {}) {
  CellContext ctx = cell_setup(m, default_unipotent_basis(m.system, m.rank));
  return cell_certificate(ctx, v, budget);
}

// --- equality verdicts ---

enum class Verdict { Equal, NotEqual, Indeterminate };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "EQUAL";
    case Verdict::NotEqual: return "NOT_EQUAL";
    case Verdict::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

struct EqualityVerdict {
  Permutation target_w;
  Verdict verdict;
  std::string reason;
  std::vector<Permutation> fixed_point_profile;
  std::vector<CellCertificate> cells;
};

inline int thread_cap() {
  if (const char* env = std::getenv("HESSLAB_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

namespace detail {

template <typename Fn>
void parallel_for(size_t count, int threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const int T = std::min<size_t>(threads, count);
  for (int t = 0; t < T; ++t)
    pool.emplace_back([&, t]() {
      for (size_t i = t; i < count; i += T) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

// Pipeline: (1) the torus-fixed points of X_w are exactly [e, w], so a profile
// mismatch refutes equality outright; (2) every cell below w must be CONTAINED;
// (3) every cell not below w must be DISJOINT. Equality holds exactly when the
// full certificate set is present, since B(x,H) meets each cell in the locus
// cut by the membership polynomials.
inline EqualityVerdict equality_verdict(const HessenbergModel& m, const Permutation& w,
                                        const GroebnerBudget& budget = {},
                                        int threads = thread_cap(), uint64_t seed = 2024) {
  const int msz = m.H.ambient_size();
  if (w.size() != msz) throw std::invalid_argument("equality_verdict: size mismatch");
  if (m.system == System::C && !is_signed(w))
    throw std::invalid_argument("equality_verdict: type C target must be signed");

  EqualityVerdict out{w, Verdict::Indeterminate, "", fixed_point_profile(m), {}};

  const std::vector<Permutation> elements = weyl_elements(m.system, m.rank);
  std::set<Permutation> interval;
  for (const Permutation& v : elements)
    if (bruhat_leq(v, w)) interval.insert(v);

  std::set<Permutation> profile(out.fixed_point_profile.begin(), out.fixed_point_profile.end());
  if (profile != interval) {
    for (const Permutation& v : elements) {
      const bool in_p = profile.count(v) > 0, in_i = interval.count(v) > 0;
      if (in_p != in_i) {
        out.verdict = Verdict::NotEqual;
        out.reason = in_p ? "fixed point " + v.str() + " lies in B(x,H) but not in X_w"
                          : "torus-fixed point " + v.str() + " of X_w is missing from B(x,H)";
        return out;
      }
    }
  }

  CellContext ctx = cell_setup(m, default_unipotent_basis(m.system, m.rank));
  std::vector<CellCertificate> certs(elements.size(),
                                     CellCertificate{w, CellStatus::Indeterminate, {}, {}, {}, {}});
  detail::parallel_for(elements.size(), threads, [&](size_t idx) {
    certs[idx] = cell_certificate(ctx, elements[idx], budget, seed ^ (idx * 0x9e3779b97f4a7c15ull));
  });

  // inequality evidence outranks indeterminate cells
  std::string not_equal_reason, indeterminate_reason;
  for (size_t idx = 0; idx < elements.size(); ++idx) {
    const Permutation& v = elements[idx];
    const CellCertificate& c = certs[idx];
    out.cells.push_back(c);
    if (interval.count(v)) {
      if (c.status != CellStatus::Contained && not_equal_reason.empty())
        not_equal_reason = "cell " + v.str() + " of X_w is not contained in B(x,H)";
    } else {
      if (c.status == CellStatus::Meets && not_equal_reason.empty())
        not_equal_reason = "cell " + v.str() + " outside X_w meets B(x,H)";
      else if (c.status != CellStatus::Disjoint && c.status != CellStatus::Meets &&
               indeterminate_reason.empty())
        indeterminate_reason = "cell " + v.str() + ": no disjointness certificate within budget";
    }
  }
  if (!not_equal_reason.empty()) {
    out.verdict = Verdict::NotEqual;
    out.reason = not_equal_reason;
  } else if (!indeterminate_reason.empty()) {
    out.verdict = Verdict::Indeterminate;
    out.reason = indeterminate_reason;
  } else {
    out.verdict = Verdict::Equal;
    out.reason = "profile matches [e,w]; all cells below w contained, all others disjoint";
  }
  return out;
}

// --- pattern swaps and highest-weight targets ---

// Swap the window entries at positions j and k of a [4231]-witness
// (i<j<k<l, w_l < w_j < w_k < w_i); the result has greater length and is not
// below w.
inline Permutation extratau(const Permutation& w, int i, int j, int k, int l) {
  const int n = w.size();
  if (!(1 <= i && i < j && j < k && k < l && l <= n))
    throw std::invalid_argument("extratau: need 1 <= i < j < k < l <= n");
  if (!(w(l) < w(j) && w(j) < w(k) && w(k) < w(i)))
    throw std::invalid_argument("extratau: need w_l < w_j < w_k < w_i");
  std::vector<int> win = w.window();
  std::swap(win[j - 1], win[k - 1]);
  return Permutation(std::move(win));
}

struct HwResult {
  Root gamma;
  Permutation w;          // longest with w^{-1}(theta) = gamma
  bool certified;         // profile(E_theta, H_gamma) equals [e, w]
  std::vector<Permutation> profile;
  std::string reasoning;
};

// The longest w with w(gi) = 1 and w(gj) = n: remaining values placed in
// decreasing order.
inline Permutation longest_with_theta_preimage(const Root& gamma) {
  const int n = gamma.rank;
  std::vector<int> win(n, 0);
  win[gamma.i - 1] = 1;
  win[gamma.j - 1] = n;
  int next = n - 1;
  for (int pos = 1; pos <= n; ++pos) {
    if (win[pos - 1] != 0) continue;
    win[pos - 1] = next--;
  }
  return Permutation(std::move(win));
}

inline HwResult hw_adjoint(const Root& gamma) {
  if (gamma.system != System::A) throw std::invalid_argument("hw_adjoint: type A only");
  const int n = gamma.rank;
  const Permutation w = longest_with_theta_preimage(gamma);
  const Root theta = highest_root(System::A, n);
  HessenbergModel m = make_model(root_vector(theta), demazure_space(gamma));
  HwResult res{gamma, w, false, fixed_point_profile(m), ""};
  std::set<Permutation> profile(res.profile.begin(), res.profile.end());
  std::set<Permutation> interval;
  for (const Permutation& v : all_permutations(n))
    if (bruhat_leq(v, w)) interval.insert(v);
  res.certified = profile == interval;
  res.reasoning =
      "Ad(B) fixes the highest-root line, so B(E_theta, H_gamma) is B-invariant and closed, "
      "hence a union of Schubert varieties determined by its torus-fixed points; profile "
      "equality with [e,w] therefore certifies X_w = B(E_theta, H_gamma).";
  return res;
}

// --- Euler counts and Poincare polynomials ---

namespace detail {

struct KillTable {
  int n;
  std::vector<uint64_t> masks;  // per permutation, bit p set <=> support pair p fails
};

inline int pair_index(int j, int k, int n) {
  // 1 <= j < k <= n, row-major over the strict upper triangle
  return (j - 1) * n - (j * (j - 1)) / 2 + (k - j - 1);
}

inline const KillTable& kill_table(const HessenbergSpace& H) {
  static std::map<std::pair<int, std::set<std::pair<int, int>>>, KillTable> cache;
  static std::mutex mu;
  const int n = H.rank;
  std::set<std::pair<int, int>> key_roots;
  for (const Root& r : H.roots.roots) key_roots.insert({r.i, r.j});
  const auto key = std::make_pair(n, key_roots);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  KillTable tab;
  tab.n = n;
  std::vector<char> in_ideal(n * n + n + 1, 0);
  for (const Root& r : H.roots.roots) in_ideal[r.i * n + r.j] = 1;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<int> winv(n + 1);
  do {
    for (int t = 0; t < n; ++t) winv[w[t]] = t + 1;
    uint64_t mask = 0;
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const int a = winv[j], b = winv[k];
        if (!in_ideal[a * n + b]) mask |= 1ull << pair_index(j, k, n);
      }
    tab.masks.push_back(mask);
  } while (std::next_permutation(w.begin(), w.end()));
  return cache.emplace(key, std::move(tab)).first->second;
}

}  // namespace detail

// |{w in S_n : e_{w^{-1}(j)} - e_{w^{-1}(k)} in Phi_H for every (j,k) in
// support}| — the cell count for a nilpotent part supported on the given
// pairs.
inline long long euler_profile_count(const std::vector<std::pair<int, int>>& support,
                                     const HessenbergSpace& H) {
  if (H.system != System::A) throw std::invalid_argument("euler_profile_count: type A only");
  const int n = H.rank;
  if (n > 10) throw std::invalid_argument("euler_profile_count: n too large for a full scan");
  uint64_t smask = 0;
  for (const auto& [j, k] : support) {
    if (!(1 <= j && j < k && k <= n))
      throw std::invalid_argument("euler_profile_count: support pairs must be strictly upper");
    smask |= 1ull << detail::pair_index(j, k, n);
  }
  const detail::KillTable& tab = detail::kill_table(H);
  long long count = 0;
  for (uint64_t m : tab.masks)
    if ((m & smask) == 0) ++count;
  return count;
}

// Integer polynomials in q.
struct QPoly {
  std::vector<long long> c;  // c[k] = coefficient of q^k

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  long long eval1() const {
    long long s = 0;
    for (long long v : c) s += v;
    return s;
  }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }
  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t t = 0; t < a.c.size(); ++t) r.c[t] += a.c[t];
    for (size_t t = 0; t < b.c.size(); ++t) r.c[t] += b.c[t];
    r.normalize();
    return r;
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t t = 0; t < a.c.size(); ++t) r.c[t] += a.c[t];
    for (size_t t = 0; t < b.c.size(); ++t) r.c[t] -= b.c[t];
    r.normalize();
    return r;
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t s = 0; s < a.c.size(); ++s)
      for (size_t t = 0; t < b.c.size(); ++t) r.c[s + t] += a.c[s] * b.c[t];
    r.normalize();
    return r;
  }
  std::string str() const {
    if (c.empty()) return "0";
    std::string s;
    for (size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      if (!s.empty()) s += " + ";
      if (k == 0)
        s += std::to_string(c[k]);
      else if (c[k] == 1)
        s += "q^" + std::to_string(k);
      else
        s += std::to_string(c[k]) + "*q^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
  }
};

inline QPoly q_monomial(int k, long long coef = 1) {
  QPoly p;
  p.c.assign(k + 1, 0);
  p.c[k] = coef;
  p.normalize();
  return p;
}

inline QPoly q_integer(int n) {
  QPoly p;
  p.c.assign(n, 1);
  return p;
}

inline QPoly q_factorial(int n) {
  QPoly p = q_monomial(0);
  for (int t = 1; t <= n; ++t) p = p * q_integer(t);
  return p;
}

// Poincare polynomial of X_w in the sqrt(q) convention: sum over v <= w of
// q^{l(v)}.
inline QPoly schubert_poincare(const Permutation& w) {
  QPoly p;
  p.c.assign(w.length() + 1, 0);
  for_lower_interval(w, [&](const Permutation& v) { p.c[v.length()] += 1; });
  p.normalize();
  return p;
}

// Fixed-point profile of (diag(c,...,c,d), H(-theta-bar)) split as the lower
// interval of s_{n-1} w_0 and the sigma_0-image (left w_0-translate) of the
// lower interval of s_1 w_0. Asserts the union equals the profile.
inline std::pair<std::vector<Permutation>, std::vector<Permutation>> codim1_component_fixed_points(
    int n, const Rational& c, const Rational& d) {
  if (n < 2) throw std::invalid_argument("codim1_component_fixed_points: n >= 2 required");
  if (c == d) throw std::invalid_argument("codim1_component_fixed_points: need c != d");
  std::vector<Rational> diag(n, c);
  diag[n - 1] = d;
  // shift to trace zero: membership in H is unaffected since h lies in H, but
  // the model requires sl_n; subtract the average.
  Rational avg = Rational(0);
  for (const auto& v : diag) avg += v;
  avg /= Rational(n);
  for (auto& v : diag) v -= avg;
  HessenbergModel m = make_model(RationalMatrix::diagonal(diag), special_space(SpecialKind::MinusTheta, n));
  const auto profile = fixed_point_profile(m);

  const Permutation w0 = Permutation::longest_element(n);
  const Permutation a_top = Permutation::simple_reflection(n - 1, n) * w0;
  const Permutation b_top = Permutation::simple_reflection(1, n) * w0;
  std::vector<Permutation> first, second;
  for_lower_interval(a_top, [&](const Permutation& v) { first.push_back(v); });
  for_lower_interval(b_top, [&](const Permutation& v) { second.push_back(w0 * v); });

  std::set<Permutation> uni(first.begin(), first.end());
  uni.insert(second.begin(), second.end());
  std::set<Permutation> prof(profile.begin(), profile.end());
  if (uni != prof)
    throw std::logic_error("codim1_component_fixed_points: component union differs from profile");
  return {first, second};
}

// --- raising witnesses (types A and C) ---

namespace detail {

inline RationalMatrix try_factor_alpha(const RationalMatrix& cur, const RationalMatrix& gen,
                                       int ti, int tj, const char* who) {
  for (int alpha = 1; alpha <= 8; ++alpha) {
    RationalMatrix f = RationalMatrix::identity(cur.rank()) + Rational(alpha) * gen;
    if (!adjoint(f, cur).get(ti, tj).is_zero()) return f;
  }
  throw std::logic_error(std::string(who) + ": no admissible factor coefficient found");
}

}  // namespace detail

// Witness b in B with c_{k,l}(b . x) != 0, built from elementary factors
// I + alpha E_{pq} along the two-leg route of the raising argument; each leg
// verified exactly.
inline RationalMatrix typeA_raise(const RationalMatrix& x, std::pair<int, int> from,
                                  std::pair<int, int> to) {
  const int n = x.rank();
  const auto [i, j] = from;
  const auto [k, l] = to;
  if (i == j || k == l || k > i || l < j)
    throw std::invalid_argument("typeA_raise: need k <= i, l >= j, k != l");
  if (x.get(i, j).is_zero()) throw std::invalid_argument("typeA_raise: c_ij(x) = 0");
  RationalMatrix b = RationalMatrix::identity(n);
  RationalMatrix cur = x;
  auto apply = [&](const RationalMatrix& f) {
    cur = adjoint(f, cur);
    b = f * b;
  };
  auto elem = [&](int p, int q) { return RationalMatrix::elementary(n, p, q); };
  if (k == i && l == j) return b;
  if (k == j && l == i) {
    apply(detail::try_factor_alpha(cur, elem(j, i), j, i, "typeA_raise"));
    return b;
  }
  if (l != i) {
    if (l != j) apply(detail::try_factor_alpha(cur, elem(j, l), i, l, "typeA_raise"));
    if (k != i) apply(detail::try_factor_alpha(cur, elem(k, i), k, l, "typeA_raise"));
  } else {
    // l == i, k != j: raise the row inside column j, then extend to column i
    apply(detail::try_factor_alpha(cur, elem(k, i), k, j, "typeA_raise"));
    apply(detail::try_factor_alpha(cur, elem(j, i), k, i, "typeA_raise"));
  }
  if (cur.get(k, l).is_zero()) throw std::logic_error("typeA_raise: verification failed");
  return b;
}

// Type C witness: the same route with sigma-symmetrized factors
// I + sigma_bar(alpha E_{pq}), which lie in B_C; verifies c_beta(b.x) != 0 and
// sigma(b) = b exactly.
inline RationalMatrix typeC_raise(const RationalMatrix& x, const Root& gamma, const Root& beta) {
  if (gamma.system != System::C || beta.system != System::C || gamma.rank != beta.rank)
    throw std::invalid_argument("typeC_raise: type C roots of equal rank required");
  if (!leq_demazure(gamma, beta)) throw std::invalid_argument("typeC_raise: need beta >= gamma");
  const int m = 2 * gamma.rank;
  if (x.rank() != m) throw std::invalid_argument("typeC_raise: rank mismatch");
  if (!is_sigma_fixed(x)) throw std::invalid_argument("typeC_raise: x must be sigma-fixed");
  if (x.get(gamma.i, gamma.j).is_zero())
    throw std::invalid_argument("typeC_raise: c_gamma(x) = 0");

  // choose type A fiber representatives with beta' >= gamma'
  std::optional<std::pair<Root, Root>> reps;
  for (const Root& g : fiber(gamma))
    for (const Root& bb : fiber(beta))
      if (leq_demazure(g, bb)) {
        reps = {g, bb};
        break;
      }
  if (!reps) throw std::logic_error("typeC_raise: no comparable fiber representatives");
  const auto [gA, bA] = *reps;
  const int i = gA.i, j = gA.j, k = bA.i, l = bA.j;

  RationalMatrix b = RationalMatrix::identity(m);
  RationalMatrix cur = x;
  auto apply = [&](const RationalMatrix& f) {
    cur = adjoint(f, cur);
    b = f * b;
  };
  auto elem = [&](int p, int q) { return sigma_bar(RationalMatrix::elementary(m, p, q)); };
  if (k == i && l == j) {
    // b = I
  } else if (k == j && l == i) {
    apply(detail::try_factor_alpha(cur, elem(j, i), j, i, "typeC_raise"));
  } else if (l != i) {
    if (l != j) apply(detail::try_factor_alpha(cur, elem(j, l), i, l, "typeC_raise"));
    if (k != i) apply(detail::try_factor_alpha(cur, elem(k, i), k, l, "typeC_raise"));
  } else {
    apply(detail::try_factor_alpha(cur, elem(k, i), k, j, "typeC_raise"));
    apply(detail::try_factor_alpha(cur, elem(j, i), k, i, "typeC_raise"));
  }
  if (cur.get(beta.i, beta.j).is_zero()) throw std::logic_error("typeC_raise: verification failed");
  // group-level sigma-fixedness: E (b^tr)^{-1} E^{-1} = b
  const RationalMatrix E = matrix_E(m);
  if (E * b.transpose().inverse() * E.inverse() != b)
    throw std::logic_error("typeC_raise: witness not sigma-fixed");
  return b;
}

// Cell transfer: a certified type C cell containment implies the type A cell
// of the lifted model is contained. Returns the type A outcome.
inline bool cell_transfer_C_to_A(const HessenbergModel& mc, const Permutation& w,
                            const GroebnerBudget& budget = {}) {
  if (mc.system != System::C) throw std::invalid_argument("cell_transfer_C_to_A: type C model required");
  CellContext ctx_c = cell_setup(mc, default_unipotent_basis(System::C, mc.rank));
  CellCertificate hyp = cell_certificate(ctx_c, w, budget);
  if (hyp.status != CellStatus::Contained)
    throw std::invalid_argument("cell_transfer_C_to_A: hypothesis certificate missing (type C cell not contained)");
  HessenbergModel ma = make_model(mc.x, lift_C_to_A(mc.H));
  CellContext ctx_a = cell_setup(ma, default_unipotent_basis(System::A, 2 * mc.rank));
  CellCertificate got = cell_certificate(ctx_a, w, budget);
  return got.status == CellStatus::Contained;
}

}  // namespace hesslab
