// Query documents, report generation, the fixture-corpus runner, and the
// standalone certificate checker. One JSON document in, one JSON document
// out; reports are deterministic for a fixed seed and tool version.

#pragma once

#include "engine.hpp"
#include "json_io.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace hesslab {

inline constexpr const char* kToolName = "hesslab";
inline constexpr const char* kToolVersion = "0.1.0";

struct RunOptions {
  bool timings = false;
  int threads = thread_cap();
  std::optional<int> budget_degree;
  std::optional<long long> budget_terms;
  std::optional<uint64_t> seed;
  int no_row_instances = 2500;  // randomized sweep size per negative classification row
};

struct RunResult {
  Json report;
  int exit_code;  // 0 equal/true, 1 not-equal/false, 2 indeterminate, 3 input error
};

namespace detail {

inline GroebnerBudget budget_from(const Json& query, const RunOptions& opts) {
  GroebnerBudget b;
  if (query.contains("budget")) {
    const auto& jb = query.at("budget");
    if (jb.contains("degree")) b.max_total_degree = jb.at("degree").get<int>();
    if (jb.contains("terms")) b.max_terms = jb.at("terms").get<long long>();
    if (b.max_total_degree <= 0 || b.max_terms <= 0)
      throw JsonError("query document: budgets must be positive");
  }
  if (opts.budget_degree) b.max_total_degree = *opts.budget_degree;
  if (opts.budget_terms) b.max_terms = *opts.budget_terms;
  return b;
}

inline uint64_t seed_from(const Json& query, const RunOptions& opts) {
  if (opts.seed) return *opts.seed;
  if (query.contains("seed")) return query.at("seed").get<uint64_t>();
  return 20240901ull;
}

inline Json report_shell(const Json& input) {
  Json r;
  r["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
  r["input"] = input;
  return r;
}

}  // namespace detail

// --- randomized structured models (type A) ---

inline HessenbergModel random_model_A(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(1, n), coef(-1000, 1000), small(1, 3), coin(0, 1);
  while (true) {
    std::vector<Root> seeds;
    const int k = small(rng);
    for (int t = 0; t < k; ++t) {
      int i = idx(rng), j = idx(rng);
      if (i == j) continue;
      seeds.push_back(root_a(n, i, j));
    }
    if (seeds.empty()) continue;
    RootIdeal ideal = upward_closure(System::A, n, seeds);
    const bool with_borel = coin(rng) != 0;
    if (with_borel)
      for (const Root& r : positive_roots(System::A, n)) ideal.roots.insert(r);
    // a full Cartan part forces b <= H, so it is only paired with such ideals
    auto cartan = (with_borel && coin(rng)) ? full_cartan(System::A, n)
                                            : generated_cartan(System::A, n, ideal);
    HessenbergSpace H{System::A, n, ideal, std::move(cartan)};

    RationalMatrix x(n);
    std::vector<Root> pool(ideal.roots.begin(), ideal.roots.end());
    const int r = small(rng);
    std::uniform_int_distribution<size_t> pick(0, pool.empty() ? 0 : pool.size() - 1);
    for (int t = 0; t < r && !pool.empty(); ++t) {
      const Root& g = pool[pick(rng)];
      int c = coef(rng);
      if (c == 0) c = 1;
      x.add_to(g.i, g.j, Rational(c));
    }
    if (coin(rng) && !H.cartan.empty()) {
      std::uniform_int_distribution<int> cc(-3, 3);
      for (const auto& d : H.cartan) {
        const int c = cc(rng);
        if (c == 0) continue;
        for (int i = 1; i <= n; ++i) x.add_to(i, i, Rational(c) * d[i - 1]);
      }
    }
    if (x.is_zero()) continue;
    return make_model(std::move(x), std::move(H));
  }
}

// --- query dispatch ---

inline RunResult run(const Json& query, const RunOptions& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  Json report = detail::report_shell(query);
  int exit_code = 0;
  try {
    if (!query.contains("query")) throw JsonError("query document: missing \"query\"");
    const std::string kind = query.at("query").get<std::string>();
    const GroebnerBudget budget = detail::budget_from(query, opts);
    const uint64_t seed = detail::seed_from(query, opts);

    if (kind == "equality") {
      HessenbergModel m = model_from_json(query.at("model"));
      Permutation w = permutation_from_json(query.at("w"));
      EqualityVerdict v = equality_verdict(m, w, budget, opts.threads, seed);
      report["verdicts"] = Json{{"equality", verdict_name(v.verdict)}};
      report["certificates"] = to_json(v, unipotent_variable_names(m.system, m.rank));
      exit_code = v.verdict == Verdict::Equal ? 0 : (v.verdict == Verdict::NotEqual ? 1 : 2);
    } else if (kind == "profile") {
      HessenbergModel m = model_from_json(query.at("model"));
      Json arr = Json::array();
      for (const Permutation& w : fixed_point_profile(m)) arr.push_back(to_json(w));
      report["verdicts"] = Json{{"profile_size", arr.size()}};
      report["profile"] = arr;
      exit_code = 0;
    } else if (kind == "euler") {
      const Json jH = query.contains("H") ? query.at("H") : query.at("model").at("H");
      HessenbergSpace H = space_from_json(jH);
      std::vector<std::pair<int, int>> support;
      for (const auto& p : query.at("support")) support.push_back({p[0].get<int>(), p[1].get<int>()});
      const long long count = euler_profile_count(support, H);
      report["verdicts"] = Json{{"euler_profile_count", count}};
      exit_code = 0;
    } else if (kind == "poincare") {
      Permutation w = permutation_from_json(query.at("w"));
      QPoly p = schubert_poincare(w);
      report["verdicts"] = Json{{"poincare", p.c}, {"text", p.str()}};
      exit_code = 0;
    } else if (kind == "lift") {
      const Json jHC = query.contains("H_C") ? query.at("H_C") : query.at("model").at("H");
      HessenbergSpace HC = space_from_json(jHC);
      HessenbergSpace H = lift_C_to_A(HC);
      const bool valid = validate(H).ok;
      const bool stable = is_sigma_stable(H);
      const bool upper = H.roots.is_upper_ideal();
      // H^sigma = H_C exactly
      SpanChecker hc_span(HC.basis());
      bool fixed_eq = true;
      const auto fixed_basis = sigma_fixed_subspace(H);
      for (const auto& v : fixed_basis)
        if (!hc_span.contains(v)) fixed_eq = false;
      if (static_cast<int>(fixed_basis.size()) != hc_span.dim()) fixed_eq = false;
      report["lift"] = to_json(H);
      report["verdicts"] = Json{{"validates", valid},
                                {"sigma_stable", stable},
                                {"upper_ideal", upper},
                                {"fixed_part_equals_HC", fixed_eq}};
      exit_code = (valid && stable && upper && fixed_eq) ? 0 : 1;
    } else if (kind == "hw") {
      Root gamma = root_from_json(query.at("gamma"));
      HwResult res = hw_adjoint(gamma);
      Json profile = Json::array();
      for (const auto& p : res.profile) profile.push_back(to_json(p));
      report["verdicts"] = Json{{"w", to_json(res.w)}, {"certified", res.certified}};
      report["profile"] = profile;
      report["reasoning"] = res.reasoning;
      exit_code = res.certified ? 0 : 1;
    } else if (kind == "avoiders") {
      const int n = query.at("n").get<int>();
      Permutation p = permutation_from_json(query.at("pattern"));
      report["verdicts"] = Json{{"count", count_avoiders(n, p)}};
      exit_code = 0;
    } else {
      throw JsonError("query document: unknown query \"" + kind + "\"");
    }
  } catch (const JsonError& e) {
    report["error"] = e.what();
    exit_code = 3;
  } catch (const Json::exception& e) {
    report["error"] = e.what();
    exit_code = 3;
  } catch (const std::exception& e) {
    report["error"] = e.what();
    exit_code = 3;
  }
  if (opts.timings) {
    const auto dt = std::chrono::steady_clock::now() - t0;
    report["timings"] = Json{
        {"total_ms", std::chrono::duration_cast<std::chrono::milliseconds>(dt).count()}};
  }
  return {std::move(report), exit_code};
}

// --- standalone certificate checker ---

// Re-verifies a report without re-running Buchberger: membership polynomials
// are recomputed from the echoed model, DISJOINT certificates are checked via
// their cofactor identity, witness and meet points by evaluation.
inline RunResult check_certificate(const Json& report) {
  Json out = detail::report_shell(report.contains("input") ? report.at("input") : Json());
  std::vector<std::string> failures;
  try {
    if (!report.contains("input")) throw JsonError("report: missing input echo");
    const Json& input = report.at("input");
    const std::string kind = input.at("query").get<std::string>();
    if (kind == "profile") {
      HessenbergModel m = model_from_json(input.at("model"));
      Json arr = Json::array();
      for (const Permutation& w : fixed_point_profile(m)) arr.push_back(to_json(w));
      if (arr != report.at("profile")) failures.push_back("profile mismatch on recomputation");
    } else if (kind == "equality") {
      HessenbergModel m = model_from_json(input.at("model"));
      const Json& cert = report.at("certificates");
      // profile echo
      Json arr = Json::array();
      for (const Permutation& w : fixed_point_profile(m)) arr.push_back(to_json(w));
      if (arr != cert.at("fixed_point_profile")) failures.push_back("profile echo mismatch");
      CellContext ctx = cell_setup(m, default_unipotent_basis(m.system, m.rank));
      for (const Json& jc : cert.at("cells")) {
        const Permutation v = permutation_from_json(jc.at("v"));
        const std::string status = jc.at("status").get<std::string>();
        std::vector<MultiPoly> stored;
        for (const auto& jp : jc.at("membership_polys")) stored.push_back(poly_from_json(jp));
        std::vector<MultiPoly> fresh = cell_membership_polys(ctx, v);
        if (stored.size() != fresh.size()) {
          failures.push_back("cell " + v.str() + ": membership polynomial count differs");
          continue;
        }
        bool same = true;
        for (size_t t = 0; t < stored.size(); ++t)
          if (stored[t] != fresh[t]) same = false;
        if (!same) {
          failures.push_back("cell " + v.str() + ": membership polynomials differ");
          continue;
        }
        if (status == "CONTAINED") {
          for (const auto& p : stored)
            if (!p.is_zero()) failures.push_back("cell " + v.str() + ": CONTAINED with nonzero poly");
        } else if (status == "DISJOINT") {
          GroebnerCertificate g = groebner_from_json(jc.at("groebner"));
          std::vector<MultiPoly> nonzero;
          for (const auto& p : stored)
            if (!p.is_zero()) nonzero.push_back(p);
          if (g.generators.size() != nonzero.size())
            failures.push_back("cell " + v.str() + ": generator set differs from membership polys");
          else
            for (size_t t = 0; t < nonzero.size(); ++t)
              if (g.generators[t] != nonzero[t])
                failures.push_back("cell " + v.str() + ": generator differs from membership poly");
          if (!verify_inconsistency_certificate(g))
            failures.push_back("cell " + v.str() + ": cofactor identity fails");
        } else if (status == "MEETS") {
          const auto pt = point_from_json(jc.at("meet_point"));
          for (const auto& p : stored)
            if (!p.evaluate(pt).is_zero())
              failures.push_back("cell " + v.str() + ": meet point does not vanish");
        } else if (status == "NOT_CONTAINED") {
          const auto pt = point_from_json(jc.at("witness_point"));
          bool some = false;
          for (const auto& p : stored)
            if (!p.evaluate(pt).is_zero()) some = true;
          if (!some) failures.push_back("cell " + v.str() + ": witness point vanishes everywhere");
        }
      }
    } else {
      // other report kinds re-verify by re-running the (deterministic) query
      RunOptions opts;
      RunResult again = run(input, opts);
      if (again.report.contains("verdicts") && report.contains("verdicts") &&
          again.report.at("verdicts") != report.at("verdicts"))
        failures.push_back("verdicts differ on recomputation");
    }
  } catch (const std::exception& e) {
    failures.push_back(std::string("checker error: ") + e.what());
  }
  Json jf = Json::array();
  for (const auto& f : failures) jf.push_back(f);
  out["check"] = Json{{"passed", failures.empty()}, {"failures", jf}};
  return {std::move(out), failures.empty() ? 0 : 1};
}

// --- fixture corpus ---

struct CorpusLine {
  std::string id;
  bool pass;
  std::string detail;
};

struct CorpusResult {
  std::vector<CorpusLine> lines;
  bool all_pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

namespace corpus {

// Bruhat-maximal representatives of the cosets <s_2> w: the solution set of
// w^{-1}(theta) = gamma is closed under left multiplication by the stabilizer
// of theta, so the highest-weight targets are exactly the w with s_2 w < w.
inline std::set<Permutation> maximal_coset_reps_s2(int n) {
  std::set<Permutation> out;
  const Permutation s2 = Permutation::simple_reflection(2, n);
  for (const Permutation& w : all_permutations(n))
    if ((s2 * w).length() < w.length()) out.insert(w);
  return out;
}

inline CorpusResult run_table1(const Json& fixture, const RunOptions& opts) {
  CorpusResult res;
  const GroebnerBudget budget;
  uint64_t seed = opts.seed ? *opts.seed : 20240901ull;
  for (const Json& row : fixture.at("rows")) {
    const std::string id = row.at("id").get<std::string>();
    const Permutation w = permutation_from_json(row.at("w"));
    const Permutation target = w.inverse();
    const std::string answer = row.at("answer").get<std::string>();
    if (answer == "yes") {
      HessenbergModel m = model_from_json(Json{{"x", row.at("x")}, {"H", row.at("H")}});
      EqualityVerdict v = equality_verdict(m, target, budget, opts.threads);
      res.lines.push_back({id, v.verdict == Verdict::Equal,
                           "expected EQUAL to X_{w^-1}, got " + verdict_name(v.verdict)});
    } else {
      // randomized structured sweep: no EQUAL verdict may appear
      std::mt19937_64 rng(seed ^ std::hash<Permutation>()(w));
      const int n = w.size();
      std::set<Permutation> interval;
      for (const Permutation& v : all_permutations(n))
        if (bruhat_leq(v, target)) interval.insert(v);
      int equal_count = 0, deep_checks = 0;
      for (int t = 0; t < opts.no_row_instances; ++t) {
        HessenbergModel m = random_model_A(n, rng);
        const auto profile = fixed_point_profile(m);
        std::set<Permutation> pset(profile.begin(), profile.end());
        if (pset != interval) continue;  // profile violation refutes equality outright
        ++deep_checks;
        EqualityVerdict v = equality_verdict(m, target, budget, opts.threads);
        if (v.verdict == Verdict::Equal) ++equal_count;
      }
      res.lines.push_back({id, equal_count == 0,
                           std::to_string(opts.no_row_instances) + " sweeps, " +
                               std::to_string(deep_checks) + " profile matches, " +
                               std::to_string(equal_count) + " EQUAL verdicts"});
    }
  }
  // highest-weight rows: one per root of sl_4
  const int n = fixture.at("hw_rank").get<int>();
  std::set<Permutation> expected = maximal_coset_reps_s2(n);
  std::set<Permutation> got;
  bool all_cert = true;
  for (const Root& gamma : all_roots(System::A, n)) {
    HwResult hw = hw_adjoint(gamma);
    if (!hw.certified) all_cert = false;
    got.insert(hw.w);
  }
  res.lines.push_back({"highest-weight rows",
                       all_cert && got == expected,
                       std::to_string(got.size()) + " realized targets, certified=" +
                           (all_cert ? "all" : "NOT ALL")});
  return res;
}

inline CorpusResult run_examples(const Json& fixture, const RunOptions& opts) {
  CorpusResult res;
  const GroebnerBudget budget;
  for (const Json& row : fixture.at("equal")) {
    const std::string id = row.at("id").get<std::string>();
    const Permutation w = permutation_from_json(row.at("w"));
    HessenbergModel m = model_from_json(Json{{"x", row.at("x")}, {"H", row.at("H")}});
    EqualityVerdict v = equality_verdict(m, w.inverse(), budget, opts.threads);
    res.lines.push_back({id, v.verdict == Verdict::Equal,
                         "expected EQUAL, got " + verdict_name(v.verdict)});
  }
  for (const Json& jn : fixture.at("euler_shadow").at("ns")) {
    const int n = jn.get<int>();
    HessenbergSpace H = special_space(SpecialKind::MinusTheta, n);
    const long long count = euler_profile_count({{1, n - 1}, {2, n}}, H);
    const Permutation s2w0 =
        Permutation::simple_reflection(2, n) * Permutation::longest_element(n);
    const long long chi = lower_interval_size(s2w0);
    res.lines.push_back({"euler-shadow n=" + std::to_string(n), count == chi,
                         "count=" + std::to_string(count) + " chi=" + std::to_string(chi)});
  }
  return res;
}

inline CorpusResult run_folding(const Json& fixture, const RunOptions& opts) {
  CorpusResult res;
  for (const Json& jn : fixture.at("exhaustive_n")) {
    const int n = jn.get<int>();
    bool ok = true;
    std::string why;
    // phi(Phi_A^+) = Phi_C^+
    std::set<Root> folded;
    for (const Root& a : positive_roots(System::A, 2 * n)) folded.insert(fold(a));
    std::set<Root> pos;
    for (const Root& c : positive_roots(System::C, n)) pos.insert(c);
    if (folded != pos) { ok = false; why = "phi(Phi_A^+) != Phi_C^+"; }
    // fibers are sigma-orbits
    const int m = 2 * n;
    for (const Root& a : all_roots(System::A, m)) {
      std::set<Root> orbit{a, root_a(m, primed(a.j, m), primed(a.i, m))};
      std::set<Root> fib;
      for (const Root& f : fiber(fold(a))) fib.insert(f);
      if (orbit != fib) { ok = false; why = "fiber is not the sigma-orbit of " + a.str(); }
    }
    // order compatibility
    for (const Root& a : all_roots(System::A, m))
      for (const Root& b : all_roots(System::A, m))
        if (leq_demazure(a, b) && !leq_demazure(fold(a), fold(b))) {
          ok = false;
          why = "order compatibility fails at " + a.str() + " <= " + b.str();
        }
    // W_C-equivariance
    for (const Permutation& w : signed_permutations(m))
      for (const Root& a : all_roots(System::A, m))
        if (fold(weyl_action(w, a)) != weyl_action(w, fold(a))) {
          ok = false;
          why = "equivariance fails at w=" + w.str() + ", root " + a.str();
        }
    res.lines.push_back({"folding n=" + std::to_string(n), ok, ok ? "exhaustive" : why});
  }

  auto lift_suite = [&](const HessenbergSpace& HC) -> std::string {
    HessenbergSpace H = lift_C_to_A(HC);
    if (!validate(H).ok) return "lift does not validate";
    if (!is_sigma_stable(H)) return "lift not sigma-stable";
    if (!H.roots.is_upper_ideal()) return "lifted root set not an upper ideal";
    SpanChecker hc_span(HC.basis());
    const auto fixed = sigma_fixed_subspace(H);
    for (const auto& v : fixed)
      if (!hc_span.contains(v)) return "H^sigma strictly larger than H_C";
    if (static_cast<int>(fixed.size()) != hc_span.dim()) return "H^sigma smaller than H_C";
    return "";
  };

  {
    const int n = fixture.at("lift_full_n").get<int>();
    bool ok = true;
    std::string why;
    int count = 0;
    for (CartanPolicy policy : {CartanPolicy::Full, CartanPolicy::Generated})
      enumerate_spaces(System::C, n, 0, -1, policy, [&](const HessenbergSpace& HC) {
        ++count;
        std::string err = lift_suite(HC);
        if (!err.empty() && ok) { ok = false; why = err; }
      });
    res.lines.push_back({"lift n=" + std::to_string(n) + " (all ideals, both policies)", ok,
                         ok ? std::to_string(count) + " spaces" : why});
  }
  {
    const int n = fixture.at("lift_sample_n").get<int>();
    const int sample = fixture.at("sample").get<int>();
    auto ideals = upper_ideals(System::C, n);
    std::mt19937_64 rng(opts.seed ? *opts.seed : 20240901ull);
    std::shuffle(ideals.begin(), ideals.end(), rng);
    if (static_cast<int>(ideals.size()) > sample) ideals.resize(sample);
    bool ok = true;
    std::string why;
    for (const RootIdeal& ideal : ideals)
      for (CartanPolicy policy : {CartanPolicy::Full, CartanPolicy::Generated}) {
        auto cartan = policy == CartanPolicy::Full ? full_cartan(System::C, n)
                                                   : generated_cartan(System::C, n, ideal);
        HessenbergSpace HC{System::C, n, ideal, std::move(cartan)};
        if (!validate(HC).ok) {
          // a full Cartan only pairs with ideals containing all positive classes
          if (policy == CartanPolicy::Generated) { ok = false; why = "generated space fails validation"; }
          continue;
        }
        std::string err = lift_suite(HC);
        if (!err.empty() && ok) { ok = false; why = err; }
      }
    res.lines.push_back({"lift n=" + std::to_string(n) + " (sample " + std::to_string(sample) +
                             ", both policies)",
                         ok, ok ? "ok" : why});
  }
  return res;
}

inline CorpusResult run_formulas(const Json& fixture, const RunOptions&) {
  CorpusResult res;
  for (const Json& jn : fixture.at("interval_ns")) {
    const int n = jn.get<int>();
    bool ok = true;
    std::string detail;
    for (int i = 1; i <= n - 1; ++i) {
      const Permutation w =
          Permutation::simple_reflection(i, n) * Permutation::longest_element(n);
      long long fact_n = 1, fact_i = 1, fact_ni = 1;
      for (int t = 2; t <= n; ++t) fact_n *= t;
      for (int t = 2; t <= i; ++t) fact_i *= t;
      for (int t = 2; t <= n - i; ++t) fact_ni *= t;
      const long long expect = fact_n - fact_i * fact_ni;
      const long long got = lower_interval_size(w);
      if (got != expect) {
        ok = false;
        detail = "i=" + std::to_string(i) + ": " + std::to_string(got) +
                 " != " + std::to_string(expect);
      }
    }
    res.lines.push_back({"interval sizes n=" + std::to_string(n), ok, ok ? "all i" : detail});
  }
  for (const Json& jn : fixture.at("poincare_ns")) {
    const int n = jn.get<int>();
    const QPoly expect =
        q_factorial(n - 2) * (q_integer(n) * q_integer(n - 1) - q_monomial(2 * n - 3) -
                              q_monomial(2 * n - 4));
    bool ok = true;
    for (int i : {2, n - 2}) {
      const Permutation w =
          Permutation::simple_reflection(i, n) * Permutation::longest_element(n);
      if (!(schubert_poincare(w) == expect)) ok = false;
    }
    res.lines.push_back({"poincare identity n=" + std::to_string(n), ok, ok ? "s_2 and s_{n-2}" : "mismatch"});
  }
  return res;
}

}  // namespace corpus

inline CorpusResult verify_corpus(const std::string& name, const std::string& fixtures_dir,
                                  const RunOptions& opts = {}) {
  const std::string path = fixtures_dir + "/" + name + ".json";
  std::ifstream in(path);
  if (!in) throw JsonError("verify_corpus: cannot open fixture file " + path);
  Json fixture = Json::parse(in, nullptr, true, true);
  if (name == "table1") return corpus::run_table1(fixture, opts);
  if (name == "examples") return corpus::run_examples(fixture, opts);
  if (name == "folding") return corpus::run_folding(fixture, opts);
  if (name == "formulas") return corpus::run_formulas(fixture, opts);
  throw JsonError("verify_corpus: unknown corpus \"" + name + "\"");
}

}  // namespace hesslab
