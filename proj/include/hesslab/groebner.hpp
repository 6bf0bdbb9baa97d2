// Buchberger's algorithm over Q with grevlex, full reduction, resource
// budgets, and Nullstellensatz inconsistency certificates.
//
// An inconsistent certificate carries cofactors q_i with sum q_i * g_i = 1,
// so it can be re-verified by a single polynomial identity without re-running
// the completion.

#pragma once

#include "poly.hpp"
#include "rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hesslab {

struct GroebnerBudget {
  int max_total_degree = 40;
  size_t max_terms = 200000;
  size_t max_pairs = 200000;
};

enum class GroebnerStatus { Done, BudgetExceeded };

struct GroebnerCertificate {
  std::vector<MultiPoly> generators;
  std::vector<MultiPoly> basis;       // reduced, monic, sorted
  bool inconsistent = false;          // <=> basis == {1}
  std::vector<MultiPoly> cofactors;   // when inconsistent: 1 = sum cofactors[i]*generators[i]
  GroebnerStatus status = GroebnerStatus::Done;
};

namespace detail {

struct BudgetError {};

struct WorkPoly {
  MultiPoly p;
  std::vector<MultiPoly> cof;  // p = sum cof[k] * gen[k] (when tracking)
};

inline void check_budget(const MultiPoly& p, const GroebnerBudget& b) {
  if (p.term_count() > b.max_terms) throw BudgetError{};
  if (!p.is_zero() && p.degree() > b.max_total_degree) throw BudgetError{};
}

// Full normal form of w.p modulo basis; cofactors updated in place.
inline MultiPoly normal_form(WorkPoly& w, const std::vector<WorkPoly>& basis, bool track,
                             const GroebnerBudget& budget) {
  MultiPoly rem = MultiPoly::zero(w.p.nvars());
  MultiPoly cur = std::move(w.p);
  std::vector<MultiPoly::Term> rem_terms;
  while (!cur.is_zero()) {
    check_budget(cur, budget);
    bool reduced = false;
    for (const WorkPoly& g : basis) {
      if (g.p.is_zero()) continue;
      if (!divides(g.p.leading_monomial(), cur.leading_monomial())) continue;
      const Rational c = cur.leading_coefficient() / g.p.leading_coefficient();
      const Exponents e = exp_div(cur.leading_monomial(), g.p.leading_monomial());
      cur -= g.p.times_term(c, e);
      if (track)
        for (size_t k = 0; k < w.cof.size(); ++k) w.cof[k] -= g.cof[k].times_term(c, e);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem_terms.push_back(cur.terms().front());
      cur -= MultiPoly::from_terms(cur.nvars(), {cur.terms().front()});
    }
  }
  return MultiPoly::from_terms(cur.nvars(), std::move(rem_terms));
}

}  // namespace detail

// Buchberger with grevlex and the coprime-leading-monomial criterion. The
// moment a reduction produces a nonzero constant the ideal is (1) and the run
// stops with a cofactor certificate.
inline GroebnerCertificate groebner(std::vector<MultiPoly> gens, GroebnerBudget budget = {},
                                    bool track_cofactors = true) {
  GroebnerCertificate cert;
  cert.generators = gens;
  if (gens.empty()) throw std::invalid_argument("groebner: empty generator list");
  const int nv = gens[0].nvars();
  if (nv == 0) throw std::invalid_argument("groebner: nonempty variable set required");
  for (const auto& g : gens)
    if (g.nvars() != nv) throw std::invalid_argument("groebner: mixed variable counts");

  using detail::WorkPoly;
  auto unit_cof = [&](size_t k) {
    std::vector<MultiPoly> cof;
    if (!track_cofactors) return cof;
    for (size_t t = 0; t < gens.size(); ++t)
      cof.push_back(t == k ? MultiPoly::constant(nv, Rational(1)) : MultiPoly::zero(nv));
    return cof;
  };

  auto finish_inconsistent = [&](const WorkPoly& w) {
    // w.p is a nonzero constant c; 1 = sum (cof[k]/c) * gen[k].
    cert.inconsistent = true;
    cert.basis = {MultiPoly::constant(nv, Rational(1))};
    if (track_cofactors) {
      const Rational inv = w.p.constant_term().inverse();
      for (const auto& q : w.cof) cert.cofactors.push_back(inv * q);
    }
    cert.status = GroebnerStatus::Done;
  };

  try {
    std::vector<WorkPoly> basis;
    // seed with reduced generators
    for (size_t k = 0; k < gens.size(); ++k) {
      WorkPoly w{gens[k], unit_cof(k)};
      MultiPoly r = detail::normal_form(w, basis, track_cofactors, budget);
      if (r.is_zero()) continue;
      w.p = std::move(r);
      if (w.p.is_constant()) {
        finish_inconsistent(w);
        return cert;
      }
      basis.push_back(std::move(w));
    }
    if (basis.empty()) {
      cert.basis = {};
      cert.inconsistent = false;
      return cert;
    }

    // pair queue ordered by lcm degree (normal strategy)
    struct Pair {
      size_t i, j;
      Exponents lcm;
    };
    std::vector<Pair> pairs;
    auto push_pairs = [&](size_t j) {
      for (size_t i = 0; i < j; ++i) {
        Exponents l = exp_lcm(basis[i].p.leading_monomial(), basis[j].p.leading_monomial());
        // product criterion: coprime leading monomials yield a reducible S-pair
        if (l == exp_mul(basis[i].p.leading_monomial(), basis[j].p.leading_monomial())) continue;
        pairs.push_back({i, j, std::move(l)});
      }
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    size_t processed = 0;
    while (!pairs.empty()) {
      if (++processed > budget.max_pairs) throw detail::BudgetError{};
      auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        return grevlex_less(a.lcm, b.lcm);
      });
      Pair pr = *best;
      pairs.erase(best);

      const WorkPoly& gi = basis[pr.i];
      const WorkPoly& gj = basis[pr.j];
      const Exponents ei = exp_div(pr.lcm, gi.p.leading_monomial());
      const Exponents ej = exp_div(pr.lcm, gj.p.leading_monomial());
      const Rational ci = gi.p.leading_coefficient().inverse();
      const Rational cj = gj.p.leading_coefficient().inverse();
      WorkPoly s{gi.p.times_term(ci, ei) - gj.p.times_term(cj, ej), {}};
      if (track_cofactors) {
        s.cof.reserve(gens.size());
        for (size_t k = 0; k < gens.size(); ++k)
          s.cof.push_back(gi.cof[k].times_term(ci, ei) - gj.cof[k].times_term(cj, ej));
      }
      MultiPoly r = detail::normal_form(s, basis, track_cofactors, budget);
      if (r.is_zero()) continue;
      s.p = std::move(r);
      if (s.p.is_constant()) {
        finish_inconsistent(s);
        return cert;
      }
      basis.push_back(std::move(s));
      push_pairs(basis.size() - 1);
    }

    // minimalize: drop elements whose leading monomial is divisible by another's
    std::vector<char> keep(basis.size(), 1);
    for (size_t a = 0; a < basis.size(); ++a)
      for (size_t b = 0; b < basis.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (divides(basis[b].p.leading_monomial(), basis[a].p.leading_monomial())) keep[a] = 0;
      }
    std::vector<WorkPoly> minimal;
    for (size_t a = 0; a < basis.size(); ++a)
      if (keep[a]) minimal.push_back(std::move(basis[a]));

    // full interreduction
    for (size_t a = 0; a < minimal.size(); ++a) {
      WorkPoly w = std::move(minimal[a]);
      std::vector<WorkPoly> others;
      for (size_t b = 0; b < minimal.size(); ++b)
        if (b != a) others.push_back(minimal[b]);
      MultiPoly r = detail::normal_form(w, others, track_cofactors, budget);
      w.p = std::move(r);
      minimal[a] = std::move(w);
    }

    for (auto& w : minimal) {
      if (w.p.is_zero()) continue;
      const Rational inv = w.p.leading_coefficient().inverse();
      cert.basis.push_back(inv * w.p);
    }
    std::sort(cert.basis.begin(), cert.basis.end(), [](const MultiPoly& a, const MultiPoly& b) {
      return grevlex_less(a.leading_monomial(), b.leading_monomial());
    });
    cert.inconsistent = cert.basis.size() == 1 && cert.basis[0].is_constant() &&
                        !cert.basis[0].is_zero();
    if (cert.inconsistent) cert.basis = {MultiPoly::constant(nv, Rational(1))};
  } catch (const detail::BudgetError&) {
    cert.status = GroebnerStatus::BudgetExceeded;
    cert.basis.clear();
    cert.cofactors.clear();
    cert.inconsistent = false;
  }
  return cert;
}

// Re-verify an inconsistency certificate: sum cofactors[i] * generators[i] == 1.
inline bool verify_inconsistency_certificate(const GroebnerCertificate& cert) {
  if (!cert.inconsistent || cert.cofactors.size() != cert.generators.size()) return false;
  if (cert.generators.empty()) return false;
  MultiPoly acc = MultiPoly::zero(cert.generators[0].nvars());
  for (size_t k = 0; k < cert.generators.size(); ++k)
    acc += cert.cofactors[k] * cert.generators[k];
  return acc == MultiPoly::constant(acc.nvars(), Rational(1));
}

}  // namespace hesslab
