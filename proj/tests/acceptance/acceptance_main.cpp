// Acceptance suite: runs every acceptance criterion at its stated size and
// tolerance (everything here is exact arithmetic) and prints one pass/fail
// line per criterion. Exits nonzero if any criterion fails.

#include <hesslab/reports.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#ifndef HESSLAB_FIXTURES_DIR
#define HESSLAB_FIXTURES_DIR "fixtures"
#endif

using namespace hesslab;

namespace {

int g_failures = 0;

void criterion(int id, const std::string& name, const std::function<std::string()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string err;
  try {
    err = body();
  } catch (const std::exception& e) {
    err = std::string("exception: ") + e.what();
  }
  const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  if (err.empty()) {
    std::cout << "PASS  criterion " << id << ": " << name << "  [" << dt << " ms]\n";
  } else {
    std::cout << "FAIL  criterion " << id << ": " << name << "  [" << dt << " ms]  -- " << err
              << "\n";
    ++g_failures;
  }
  std::cout.flush();
}

long long factorial(int n) {
  long long f = 1;
  for (int t = 2; t <= n; ++t) f *= t;
  return f;
}

Permutation si_w0(int i, int n) {
  return Permutation::simple_reflection(i, n) * Permutation::longest_element(n);
}

std::set<Permutation> interval_set(const Permutation& w) {
  std::set<Permutation> out;
  for_lower_interval(w, [&](const Permutation& v) { out.insert(v); });
  return out;
}

HessenbergSpace full_space(System sys, int rank) {
  RootIdeal ideal{sys, rank, {}};
  for (const Root& r : all_roots(sys, rank)) ideal.roots.insert(r);
  return HessenbergSpace{sys, rank, std::move(ideal), full_cartan(sys, rank)};
}

// every EQUAL verdict the suite produces lands here for criterion 10
struct EqualLog {
  std::vector<std::pair<System, Permutation>> targets;
} g_equal_log;

void log_verdict(System sys, const EqualityVerdict& v) {
  if (v.verdict == Verdict::Equal) g_equal_log.targets.push_back({sys, v.target_w});
}

std::string criterion1_table1() {
  RunOptions opts;
  opts.no_row_instances = 2500;  // five negative rows -> 12500 randomized instances
  opts.seed = 20240901;
  const CorpusResult res = verify_corpus("table1", HESSLAB_FIXTURES_DIR, opts);
  for (const auto& line : res.lines)
    if (!line.pass) return "table1 corpus line failed: " + line.id + " (" + line.detail + ")";
  // log the seven explicit EQUAL rows for the pattern cross-check
  std::ifstream in(std::string(HESSLAB_FIXTURES_DIR) + "/table1.json");
  Json fixture = Json::parse(in, nullptr, true, true);
  for (const Json& row : fixture.at("rows")) {
    if (row.at("answer") != "yes") continue;
    HessenbergModel m = model_from_json(Json{{"x", row.at("x")}, {"H", row.at("H")}});
    const Permutation target = permutation_from_json(row.at("w")).inverse();
    log_verdict(System::A, equality_verdict(m, target));
  }
  return "";
}

std::string criterion2_n5_witness() {
  RationalMatrix x(5);
  x.set(1, 2, Rational(1));
  x.set(2, 5, Rational(1));
  RootIdeal ideal{System::A, 5, {}};
  for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 5}})
    ideal.roots.insert(root_a(5, i, j));
  auto m = make_model(std::move(x), HessenbergSpace{System::A, 5, std::move(ideal), {}});
  const EqualityVerdict v = equality_verdict(m, Permutation({1, 3, 4, 2, 5}).inverse());
  log_verdict(System::A, v);
  if (v.verdict != Verdict::Equal) return "expected EQUAL, got " + verdict_name(v.verdict) + ": " + v.reason;
  return "";
}

std::string criterion3_interval_sizes() {
  for (int n = 3; n <= 7; ++n)
    for (int i = 1; i <= n - 1; ++i) {
      const long long expect = factorial(n) - factorial(i) * factorial(n - i);
      const long long got = lower_interval_size(si_w0(i, n));
      if (got != expect)
        return "n=" + std::to_string(n) + ", i=" + std::to_string(i) + ": " + std::to_string(got) +
               " != " + std::to_string(expect);
    }
  return "";
}

std::string criterion4_poincare_identity() {
  for (int n = 4; n <= 7; ++n) {
    const QPoly expect = q_factorial(n - 2) * (q_integer(n) * q_integer(n - 1) -
                                               q_monomial(2 * n - 3) - q_monomial(2 * n - 4));
    for (int i : {2, n - 2})
      if (!(schubert_poincare(si_w0(i, n)) == expect))
        return "n=" + std::to_string(n) + ", i=" + std::to_string(i) + ": polynomial mismatch";
  }
  return "";
}

std::string criterion5_euler_counts() {
  for (int n = 4; n <= 8; ++n) {
    const HessenbergSpace H = special_space(SpecialKind::MinusTheta, n);
    const long long fact = factorial(n), factm2 = factorial(n - 2);
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) pairs.push_back({j, k});
    std::vector<std::pair<int, int>> sup;
    std::string err;
    std::function<void(size_t)> rec = [&](size_t start) {
      if (!err.empty()) return;
      const long long got = euler_profile_count(sup, H);
      const long long expect = fact - factm2 * static_cast<long long>(sup.size());
      if (got != expect || got % factm2 != 0) {
        err = "n=" + std::to_string(n) + ", |support|=" + std::to_string(sup.size()) + ": " +
              std::to_string(got) + " != " + std::to_string(expect);
        return;
      }
      if (sup.size() == 4) return;
      for (size_t t = start; t < pairs.size(); ++t) {
        sup.push_back(pairs[t]);
        rec(t + 1);
        sup.pop_back();
      }
    };
    rec(0);
    if (!err.empty()) return err;
    // Euler shadow: x = E_{1,n-1} + E_{2,n} matches chi(X_{s_2 w_0})
    const long long shadow = euler_profile_count({{1, n - 1}, {2, n}}, H);
    const long long chi = lower_interval_size(si_w0(2, n));
    if (shadow != chi)
      return "euler shadow n=" + std::to_string(n) + ": " + std::to_string(shadow) +
             " != " + std::to_string(chi);
  }
  return "";
}

std::string criterion6_highest_weight_profiles() {
  for (int n = 3; n <= 6; ++n)
    for (const Root& gamma : all_roots(System::A, n)) {
      const HwResult res = hw_adjoint(gamma);
      if (!res.certified)
        return "n=" + std::to_string(n) + ", gamma=" + gamma.str() +
               ": profile differs from [e, w]";
    }
  return "";
}

std::string criterion7_lift() {
  auto lift_suite = [&](const HessenbergSpace& HC) -> std::string {
    const HessenbergSpace H = lift_C_to_A(HC);
    if (!validate(H).ok) return "lift fails validation";
    if (!is_sigma_stable(H)) return "lift is not sigma-stable";
    if (!H.roots.is_upper_ideal()) return "lifted roots are not an upper ideal";
    SpanChecker hc_span(HC.basis());
    const auto fixed = sigma_fixed_subspace(H);
    if (static_cast<int>(fixed.size()) != hc_span.dim()) return "dim H^sigma != dim H_C";
    for (const auto& v : fixed)
      if (!hc_span.contains(v)) return "H^sigma differs from H_C";
    return "";
  };
  // n = 2: every root-ideal space, both Cartan policies
  for (CartanPolicy policy : {CartanPolicy::Full, CartanPolicy::Generated}) {
    std::string err;
    enumerate_spaces(System::C, 2, 0, -1, policy, [&](const HessenbergSpace& HC) {
      if (err.empty()) err = lift_suite(HC);
    });
    if (!err.empty()) return "n=2: " + err;
  }
  // n = 3: a seeded 100-sample of ideals, both policies where applicable
  auto ideals = upper_ideals(System::C, 3);
  std::mt19937_64 rng(20240901);
  std::shuffle(ideals.begin(), ideals.end(), rng);
  if (ideals.size() > 100) ideals.resize(100);
  for (const RootIdeal& ideal : ideals)
    for (CartanPolicy policy : {CartanPolicy::Full, CartanPolicy::Generated}) {
      auto cartan = policy == CartanPolicy::Full ? full_cartan(System::C, 3)
                                                 : generated_cartan(System::C, 3, ideal);
      HessenbergSpace HC{System::C, 3, ideal, std::move(cartan)};
      if (!validate(HC).ok) {
        if (policy == CartanPolicy::Generated) return "n=3: generated space fails validation";
        continue;  // full Cartan requires the ideal to contain all positive classes
      }
      const std::string err = lift_suite(HC);
      if (!err.empty()) return "n=3: " + err;
    }
  return "";
}

std::string criterion8_folding_suite() {
  for (int n = 1; n <= 3; ++n) {
    const int m = 2 * n;
    std::set<Root> folded, pos;
    for (const Root& a : positive_roots(System::A, m)) folded.insert(fold(a));
    for (const Root& c : positive_roots(System::C, n)) pos.insert(c);
    if (folded != pos) return "n=" + std::to_string(n) + ": phi(Phi_A^+) != Phi_C^+";
    for (const Root& a : all_roots(System::A, m)) {
      std::set<Root> orbit{a, root_a(m, primed(a.j, m), primed(a.i, m))};
      std::set<Root> fib;
      for (const Root& f : fiber(fold(a))) fib.insert(f);
      if (orbit != fib) return "n=" + std::to_string(n) + ": fiber != sigma-orbit";
    }
    for (const Root& a : all_roots(System::A, m))
      for (const Root& b : all_roots(System::A, m))
        if (leq_demazure(a, b) && !leq_demazure(fold(a), fold(b)))
          return "n=" + std::to_string(n) + ": folding not order compatible";
    for (const Permutation& w : signed_permutations(m))
      for (const Root& a : all_roots(System::A, m))
        if (fold(weyl_action(w, a)) != weyl_action(w, fold(a)))
          return "n=" + std::to_string(n) + ": folding not W_C-equivariant";
  }
  return "";
}

std::string criterion9_raising_witnesses() {
  std::mt19937_64 rng(20240901);
  std::uniform_int_distribution<int> coef(-1000, 1000);
  // type A
  long long done = 0;
  while (done < 10000) {
    std::uniform_int_distribution<int> nd(3, 6);
    const int n = nd(rng);
    std::uniform_int_distribution<int> idx(1, n);
    RationalMatrix x(n);
    for (int s = 0; s < 4; ++s) {
      int c = coef(rng);
      if (c == 0) c = 1;
      x.add_to(idx(rng), idx(rng), Rational(c));
    }
    std::vector<std::pair<int, int>> nz;
    for (const auto& [ij, v] : x.entries())
      if (ij.first != ij.second) nz.push_back(ij);
    if (nz.empty()) continue;
    const auto [i, j] = nz[static_cast<size_t>(rng() % nz.size())];
    std::uniform_int_distribution<int> ki(1, i), lj(j, n);
    const int k = ki(rng), l = lj(rng);
    if (k == l) continue;
    const RationalMatrix b = typeA_raise(x, {i, j}, {k, l});
    if (adjoint(b, x).get(k, l).is_zero()) return "type A witness failed verification";
    ++done;
  }
  // type C
  done = 0;
  while (done < 10000) {
    std::uniform_int_distribution<int> nd(2, 3);
    const int n = nd(rng);
    const int m = 2 * n;
    std::uniform_int_distribution<int> idx(1, m);
    RationalMatrix raw(m);
    for (int s = 0; s < 3; ++s) {
      int c = coef(rng);
      if (c == 0) c = 1;
      raw.add_to(idx(rng), idx(rng), Rational(c));
    }
    RationalMatrix x = sigma_bar(raw);
    for (int i = 1; i <= m; ++i) x.set(i, i, Rational(0));  // keep to the root part
    if (x.is_zero()) continue;
    std::vector<Root> carriers;
    for (const Root& g : all_roots(System::C, n))
      if (!x.get(g.i, g.j).is_zero()) carriers.push_back(g);
    if (carriers.empty()) continue;
    const Root gamma = carriers[static_cast<size_t>(rng() % carriers.size())];
    std::vector<Root> above;
    for (const Root& b : all_roots(System::C, n))
      if (leq_demazure(gamma, b)) above.push_back(b);
    const Root beta = above[static_cast<size_t>(rng() % above.size())];
    const RationalMatrix b = typeC_raise(x, gamma, beta);
    if (adjoint(b, x).get(beta.i, beta.j).is_zero()) return "type C witness failed verification";
    const RationalMatrix E = matrix_E(m);
    if (E * b.transpose().inverse() * E.inverse() != b) return "type C witness not sigma-fixed";
    ++done;
  }
  return "";
}

std::string criterion10_pattern_property() {
  const Permutation p4231({4, 2, 3, 1});
  // engineered EQUAL verdicts through the full pipeline: highest-weight models
  for (int n = 4; n <= 5; ++n) {
    const Root theta = highest_root(System::A, n);
    for (const Root& gamma : all_roots(System::A, n)) {
      auto m = make_model(root_vector(theta), demazure_space(gamma));
      log_verdict(System::A, equality_verdict(m, longest_with_theta_preimage(gamma)));
    }
  }
  // randomized sweeps at n = 4, 5: verdicts against random targets
  std::mt19937_64 rng(20240901);
  for (int n = 4; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (int t = 0; t < (n == 4 ? 400 : 120); ++t) {
      auto m = random_model_A(n, rng);
      const Permutation target = perms[static_cast<size_t>(rng() % perms.size())];
      const auto prof = fixed_point_profile(m);
      if (std::set<Permutation>(prof.begin(), prof.end()) != interval_set(target)) continue;
      log_verdict(System::A, equality_verdict(m, target));
    }
  }
  // type C sweeps at n = 2: all root-ideal spaces with structured x
  int equal_c = 0;
  for (const RootIdeal& ideal : upper_ideals(System::C, 2)) {
    for (CartanPolicy policy : {CartanPolicy::Generated, CartanPolicy::Full}) {
      auto cartan = policy == CartanPolicy::Full ? full_cartan(System::C, 2)
                                                 : generated_cartan(System::C, 2, ideal);
      HessenbergSpace HC{System::C, 2, ideal, std::move(cartan)};
      if (!validate(HC).ok) continue;
      RationalMatrix x(4);
      int c = 0;
      for (const Root& r : ideal.roots) {
        x += root_vector(r);
        if (++c == 2) break;
      }
      auto m = make_model(x, HC);
      const auto prof = fixed_point_profile(m);
      std::set<Permutation> pset(prof.begin(), prof.end());
      for (const Permutation& w : signed_permutations(4)) {
        std::set<Permutation> iv;
        for (const Permutation& v : signed_permutations(4))
          if (bruhat_leq(v, w)) iv.insert(v);
        if (pset != iv) continue;
        const EqualityVerdict v = equality_verdict(m, w);
        log_verdict(System::C, v);
        if (v.verdict == Verdict::Equal) ++equal_c;
      }
    }
  }
  // the property: every EQUAL target has w^{-1} avoiding [4231] (type C
  // windows are their own phi* images inside S_2n)
  int equal_a = 0;
  for (const auto& [sys, w] : g_equal_log.targets) {
    if (contains_pattern(w.inverse(), p4231))
      return "EQUAL verdict with w^-1 containing [4231]: w = " + w.str();
    if (sys == System::A) ++equal_a;
  }
  if (equal_a < 40) return "too few type A EQUAL verdicts collected: " + std::to_string(equal_a);
  if (equal_c < 1) return "no type C EQUAL verdicts collected";
  return "";
}

std::string criterion11_avoider_counts() {
  const Permutation p({4, 2, 3, 1});
  double prev = 2.0;
  for (int n = 1; n <= 9; ++n) {
    const long long fast = count_avoiders(n, p);
    long long brute = 0;
    for (const Permutation& w : all_permutations(n))
      if (!contains_pattern(w, p)) ++brute;
    if (fast != brute)
      return "n=" + std::to_string(n) + ": " + std::to_string(fast) +
             " != " + std::to_string(brute);
    if (n >= 4) {
      const double ratio = double(fast) / double(factorial(n));
      if (ratio >= prev) return "ratio not strictly decreasing at n=" + std::to_string(n);
      prev = ratio;
    }
  }
  return "";
}

std::string criterion12_codim1_profiles() {
  for (int n = 3; n <= 6; ++n) {
    // codim1_component_fixed_points throws when the union differs from the profile
    const auto parts = codim1_component_fixed_points(n, Rational(5, 7), Rational(-2, 3));
    const Permutation w0 = Permutation::longest_element(n);
    if (std::set<Permutation>(parts.first.begin(), parts.first.end()) !=
        interval_set(si_w0(n - 1, n)))
      return "n=" + std::to_string(n) + ": first component differs from [e, s_{n-1} w_0]";
    std::set<Permutation> expect;
    for_lower_interval(si_w0(1, n), [&](const Permutation& v) { expect.insert(w0 * v); });
    if (std::set<Permutation>(parts.second.begin(), parts.second.end()) != expect)
      return "n=" + std::to_string(n) + ": second component differs from sigma_0 [e, s_1 w_0]";
  }
  return "";
}

}  // namespace

int main() {
  std::cout << "acceptance suite (" << kToolName << " " << kToolVersion << ")\n";
  criterion(1, "n=4 classification table: 7 explicit EQUAL rows, 12 highest-weight rows, 5 negative rows x 2500 randomized instances", criterion1_table1);
  criterion(2, "n=5 equality witness (E_12+E_25 vs X_{[13425]^-1})", criterion2_n5_witness);
  criterion(3, "|[e, s_i w_0]| = n! - i!(n-i)! for n=3..7, all i", criterion3_interval_sizes);
  criterion(4, "Poin(X_{s_i w_0}) = [n-2]_q!([n]_q[n-1]_q - q^{2n-3} - q^{2n-4}) for i in {2, n-2}, n=4..7", criterion4_poincare_identity);
  criterion(5, "euler profile counts n! - (n-2)!|support| for all supports of size <= 4, n=4..8, plus the Euler shadow", criterion5_euler_counts);
  criterion(6, "highest-weight profiles equal [e, w] for every root, n=3..6", criterion6_highest_weight_profiles);
  criterion(7, "type C -> type A lift: validates, sigma-stable, upper ideal, H^sigma = H_C (n=2 all, n=3 sample of 100, both Cartan policies)", criterion7_lift);
  criterion(8, "folding suite: positivity, fibers, order compatibility, equivariance (exhaustive n <= 3)", criterion8_folding_suite);
  criterion(9, "raising witnesses verify exactly on 10^4 randomized instances per type", criterion9_raising_witnesses);
  criterion(10, "every EQUAL verdict produced has w^-1 avoiding [4231] (type A n <= 5, type C n <= 2)", criterion10_pattern_property);
  criterion(11, "avoider counts match the brute-force oracle for n <= 9 with strictly decreasing ratio", criterion11_avoider_counts);
  criterion(12, "profile of (diag(c,..,c,d), H(-theta-bar)) splits as [e, s_{n-1}w_0] union sigma_0 [e, s_1 w_0], n=3..6", criterion12_codim1_profiles);

  if (g_failures == 0) {
    std::cout << "all 12 acceptance criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " acceptance criteria failed\n";
  return 1;
}
