// JSON wire formats. Permutations are arrays of 1-based integers; rationals
// are "p/q" strings; matrices list nonzero entries; Hessenberg spaces carry a
// root list plus a Cartan policy or explicit diagonal vectors.

#pragma once

#include "engine.hpp"
#include "groebner.hpp"
#include "hessenberg.hpp"
#include "matrix.hpp"
#include "permutation.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "roots.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace hesslab {

using Json = nlohmann::ordered_json;

struct JsonError : std::runtime_error {
  explicit JsonError(const std::string& what) : std::runtime_error(what) {}
};

// --- permutations ---

inline Json to_json(const Permutation& w) {
  Json arr = Json::array();
  for (int v : w.window()) arr.push_back(v);
  return arr;
}

inline Permutation permutation_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw JsonError("permutation: expected a nonempty array");
  std::vector<int> win;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw JsonError("permutation: entries must be integers");
    win.push_back(v.get<int>());
  }
  try {
    return Permutation(std::move(win));
  } catch (const std::exception& e) {
    throw JsonError(std::string("permutation: ") + e.what());
  }
}

// --- roots ---

inline Json to_json(const Root& r) {
  return Json{{"system", system_name(r.system)}, {"rank", r.rank}, {"pair", {r.i, r.j}}};
}

inline System system_from_json(const Json& j) {
  const std::string s = j.get<std::string>();
  if (s == "A") return System::A;
  if (s == "C") return System::C;
  throw JsonError("system: expected \"A\" or \"C\"");
}

inline Root root_from_json(const Json& j) {
  if (!j.contains("system") || !j.contains("rank") || !j.contains("pair"))
    throw JsonError("root: need system, rank, pair");
  const System sys = system_from_json(j.at("system"));
  const int rank = j.at("rank").get<int>();
  const auto& p = j.at("pair");
  if (!p.is_array() || p.size() != 2) throw JsonError("root: pair must be [i,j]");
  try {
    return sys == System::A ? root_a(rank, p[0].get<int>(), p[1].get<int>())
                            : root_c(rank, p[0].get<int>(), p[1].get<int>());
  } catch (const std::exception& e) {
    throw JsonError(std::string("root: ") + e.what());
  }
}

// --- rationals and matrices ---

inline Json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) throw JsonError("rational: expected \"p/q\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw JsonError(std::string("rational: ") + e.what());
  }
}

inline Json to_json(const RationalMatrix& m) {
  Json entries = Json::array();
  for (const auto& [ij, v] : m.entries()) entries.push_back(Json{ij.first, ij.second, v.str()});
  return Json{{"rank", m.rank()}, {"entries", entries}};
}

inline RationalMatrix matrix_from_json(const Json& j) {
  if (!j.contains("rank") || !j.contains("entries")) throw JsonError("matrix: need rank, entries");
  RationalMatrix m(j.at("rank").get<int>());
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw JsonError("matrix: entry must be [i,j,\"p/q\"]");
    m.set(e[0].get<int>(), e[1].get<int>(), rational_from_json(e[2]));
  }
  return m;
}

// --- Hessenberg spaces ---

inline Json to_json(const HessenbergSpace& H) {
  Json roots = Json::array();
  for (const Root& r : H.roots.roots) roots.push_back(Json{r.i, r.j});
  Json cartan = Json::array();
  for (const auto& d : H.cartan) {
    Json vec = Json::array();
    for (const auto& v : d) vec.push_back(v.str());
    cartan.push_back(vec);
  }
  return Json{{"system", system_name(H.system)},
              {"rank", H.rank},
              {"roots", roots},
              {"cartan", cartan}};
}

inline HessenbergSpace space_from_json(const Json& j) {
  if (!j.contains("system") || !j.contains("rank") || !j.contains("roots"))
    throw JsonError("space: need system, rank, roots");
  const System sys = system_from_json(j.at("system"));
  const int rank = j.at("rank").get<int>();
  RootIdeal ideal{sys, rank, {}};
  for (const auto& p : j.at("roots")) {
    if (!p.is_array() || p.size() != 2) throw JsonError("space: root must be [i,j]");
    ideal.roots.insert(sys == System::A ? root_a(rank, p[0].get<int>(), p[1].get<int>())
                                        : root_c(rank, p[0].get<int>(), p[1].get<int>()));
  }
  std::vector<std::vector<Rational>> cartan;
  if (!j.contains("cartan") || (j.at("cartan").is_string() && j.at("cartan") == "full")) {
    cartan = full_cartan(sys, rank);
  } else if (j.at("cartan").is_string() && j.at("cartan") == "generated") {
    cartan = generated_cartan(sys, rank, ideal);
  } else if (j.at("cartan").is_array()) {
    for (const auto& vec : j.at("cartan")) {
      std::vector<Rational> d;
      for (const auto& v : vec) d.push_back(rational_from_json(v));
      cartan.push_back(std::move(d));
    }
  } else {
    throw JsonError("space: cartan must be \"full\", \"generated\", or a vector list");
  }
  return HessenbergSpace{sys, rank, std::move(ideal), std::move(cartan)};
}

inline Json to_json(const HessenbergModel& m) {
  return Json{{"x", to_json(m.x)}, {"H", to_json(m.H)}};
}

inline HessenbergModel model_from_json(const Json& j) {
  if (!j.contains("x") || !j.contains("H")) throw JsonError("model: need x and H");
  try {
    return make_model(matrix_from_json(j.at("x")), space_from_json(j.at("H")));
  } catch (const JsonError&) {
    throw;
  } catch (const std::exception& e) {
    throw JsonError(std::string("model: ") + e.what());
  }
}

// --- polynomials and certificates ---

inline Json to_json(const MultiPoly& p, const std::vector<std::string>& names) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exps = Json::array();
    for (int x : e) exps.push_back(x);
    terms.push_back(Json{exps, c.str()});
  }
  return Json{{"nvars", p.nvars()}, {"terms", terms}, {"text", p.str(names)}};
}

inline MultiPoly poly_from_json(const Json& j) {
  if (!j.contains("nvars") || !j.contains("terms")) throw JsonError("poly: need nvars, terms");
  const int nv = j.at("nvars").get<int>();
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 2) throw JsonError("poly: term must be [[exps],\"coef\"]");
    Exponents e;
    for (const auto& x : t[0]) e.push_back(x.get<int>());
    if (static_cast<int>(e.size()) != nv) throw JsonError("poly: exponent length mismatch");
    terms.push_back({std::move(e), rational_from_json(t[1])});
  }
  return MultiPoly::from_terms(nv, std::move(terms));
}

inline Json to_json(const GroebnerCertificate& g, const std::vector<std::string>& names) {
  Json jgens = Json::array(), jbasis = Json::array(), jcof = Json::array();
  for (const auto& p : g.generators) jgens.push_back(to_json(p, names));
  for (const auto& p : g.basis) jbasis.push_back(to_json(p, names));
  for (const auto& p : g.cofactors) jcof.push_back(to_json(p, names));
  return Json{{"generators", jgens},
              {"basis", jbasis},
              {"inconsistent", g.inconsistent},
              {"cofactors", jcof},
              {"status", g.status == GroebnerStatus::Done ? "done" : "budget-exceeded"}};
}

inline GroebnerCertificate groebner_from_json(const Json& j) {
  GroebnerCertificate g;
  for (const auto& p : j.at("generators")) g.generators.push_back(poly_from_json(p));
  for (const auto& p : j.at("basis")) g.basis.push_back(poly_from_json(p));
  g.inconsistent = j.at("inconsistent").get<bool>();
  for (const auto& p : j.at("cofactors")) g.cofactors.push_back(poly_from_json(p));
  g.status = j.at("status") == "done" ? GroebnerStatus::Done : GroebnerStatus::BudgetExceeded;
  return g;
}

inline Json point_to_json(const std::vector<Rational>& pt) {
  Json arr = Json::array();
  for (const auto& v : pt) arr.push_back(v.str());
  return arr;
}

inline std::vector<Rational> point_from_json(const Json& j) {
  std::vector<Rational> pt;
  for (const auto& v : j) pt.push_back(rational_from_json(v));
  return pt;
}

inline Json to_json(const CellCertificate& c, const std::vector<std::string>& names) {
  Json out{{"v", to_json(c.v)}, {"status", cell_status_name(c.status)}};
  Json polys = Json::array();
  for (const auto& p : c.membership_polys) polys.push_back(to_json(p, names));
  out["membership_polys"] = polys;
  if (c.witness_point) out["witness_point"] = point_to_json(*c.witness_point);
  if (c.meet_point) out["meet_point"] = point_to_json(*c.meet_point);
  if (c.groebner_cert) out["groebner"] = to_json(*c.groebner_cert, names);
  return out;
}

inline Json to_json(const EqualityVerdict& v, const std::vector<std::string>& names) {
  Json cells = Json::array();
  for (const auto& c : v.cells) cells.push_back(to_json(c, names));
  Json profile = Json::array();
  for (const auto& p : v.fixed_point_profile) profile.push_back(to_json(p));
  return Json{{"target_w", to_json(v.target_w)},
              {"verdict", verdict_name(v.verdict)},
              {"reason", v.reason},
              {"fixed_point_profile", profile},
              {"cells", cells}};
}

}  // namespace hesslab
