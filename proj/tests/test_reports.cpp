#include <hesslab/reports.hpp>

#include <catch2/catch_amalgamated.hpp>

#ifndef HESSLAB_FIXTURES_DIR
#define HESSLAB_FIXTURES_DIR "fixtures"
#endif

using namespace hesslab;

namespace {

Json table1_row_2143_query() {
  return Json::parse(R"({
    "query": "equality",
    "model": {
      "x": { "rank": 4, "entries": [[1, 3, "1"], [2, 4, "1"]] },
      "H": { "system": "A", "rank": 4, "roots": [[1,3],[1,4],[2,3],[2,4]], "cartan": [] }
    },
    "w": [2, 1, 4, 3],
    "seed": 11
  })");
}

}  // namespace

TEST_CASE("query dispatch and exit codes") {
  RunOptions opts;
  auto eq = run(table1_row_2143_query(), opts);
  CHECK(eq.exit_code == 0);
  CHECK(eq.report.at("verdicts").at("equality") == "EQUAL");

  Json neq = table1_row_2143_query();
  neq["w"] = Json{4, 2, 3, 1};
  CHECK(run(neq, opts).exit_code == 1);

  Json prof = table1_row_2143_query();
  prof["query"] = "profile";
  auto pr = run(prof, opts);
  CHECK(pr.exit_code == 0);
  CHECK(pr.report.at("verdicts").at("profile_size") == 4);

  Json avoid{{"query", "avoiders"}, {"n", 5}, {"pattern", {4, 2, 3, 1}}};
  CHECK(run(avoid, opts).report.at("verdicts").at("count") == 103);

  Json poin{{"query", "poincare"}, {"w", {2, 3, 1}}};
  auto pp = run(poin, opts);
  CHECK(pp.report.at("verdicts").at("poincare") == Json{1, 2, 1});

  // malformed documents exit 3
  Json bad{{"query", "equality"}, {"w", {1, 2, 3}}};
  CHECK(run(bad, opts).exit_code == 3);
  Json bad2 = table1_row_2143_query();
  bad2["model"]["x"]["entries"][0][2] = "not-a-number";
  CHECK(run(bad2, opts).exit_code == 3);
  Json bad3 = table1_row_2143_query();
  bad3["budget"] = Json{{"degree", -1}};
  CHECK(run(bad3, opts).exit_code == 3);
}

TEST_CASE("budget exhaustion propagates as INDETERMINATE") {
  // the n=5 witness needs multi-term reductions, so a one-term cap starves it;
  // the n=4 row below certifies through constant coordinates even under a
  // degree-1 cap, which is a genuine (not budget-limited) certificate
  Json q = Json::parse(R"({
    "query": "equality",
    "model": {
      "x": { "rank": 5, "entries": [[1, 2, "1"], [2, 5, "1"]] },
      "H": { "system": "A", "rank": 5,
             "roots": [[1,2],[1,3],[1,4],[1,5],[2,5],[3,5]], "cartan": [] }
    },
    "w": [1, 4, 2, 3, 5],
    "budget": { "degree": 40, "terms": 1 },
    "seed": 11
  })");
  RunOptions opts;
  const auto res = run(q, opts);
  CHECK(res.exit_code == 2);
  CHECK(res.report.at("verdicts").at("equality") == "INDETERMINATE");

  Json q4 = table1_row_2143_query();
  q4["budget"] = Json{{"degree", 1}, {"terms", 200000}};
  CHECK(run(q4, opts).exit_code == 0);
}

TEST_CASE("euler and lift accept the model-carrying schema") {
  RunOptions opts;
  Json q{{"query", "euler"},
         {"model", table1_row_2143_query().at("model")},
         {"support", Json::array()}};
  // the fixture space has codimension > 1, so only the empty support is exact n!
  auto res = run(q, opts);
  CHECK(res.exit_code == 0);
  CHECK(res.report.at("verdicts").at("euler_profile_count") == 24);
}

TEST_CASE("type C equality through the JSON surface") {
  // x spans the long-root class of (1,4); H_C is all of sp_4, so B(x,H) is
  // the whole type C flag variety, i.e. X_{w_0}
  Json q = Json::parse(R"({
    "query": "equality",
    "model": {
      "x": { "rank": 4, "entries": [[1, 4, "2"]] },
      "H": { "system": "C", "rank": 2,
             "roots": [[1,2],[2,1],[1,3],[3,1],[1,4],[4,1],[2,3],[3,2]],
             "cartan": "full" }
    },
    "w": [4, 3, 2, 1],
    "seed": 5
  })");
  RunOptions opts;
  const auto res = run(q, opts);
  CHECK(res.exit_code == 0);
  CHECK(res.report.at("verdicts").at("equality") == "EQUAL");
  CHECK(check_certificate(res.report).exit_code == 0);
  // a non-signed target is an input error
  Json bad = q;
  bad["w"] = Json{4, 3, 1, 2};
  CHECK(run(bad, opts).exit_code == 3);
}

TEST_CASE("reports are byte-identical for a fixed seed and version") {
  RunOptions opts;
  const auto a = run(table1_row_2143_query(), opts);
  const auto b = run(table1_row_2143_query(), opts);
  CHECK(a.report.dump() == b.report.dump());
  // timings are opt-in and excluded from the default document
  CHECK_FALSE(a.report.contains("timings"));
  RunOptions timed;
  timed.timings = true;
  CHECK(run(table1_row_2143_query(), timed).report.contains("timings"));
}

TEST_CASE("embedded certificates re-verify standalone") {
  RunOptions opts;
  const auto res = run(table1_row_2143_query(), opts);
  const auto check = check_certificate(res.report);
  CHECK(check.exit_code == 0);
  CHECK(check.report.at("check").at("passed") == true);

  // tampering with a cofactor or a status is caught
  Json tampered = res.report;
  for (auto& cell : tampered["certificates"]["cells"]) {
    if (cell["status"] == "DISJOINT") {
      cell["groebner"]["cofactors"][0]["terms"] = Json::array();
      break;
    }
  }
  CHECK(check_certificate(tampered).exit_code == 1);

  Json flipped = res.report;
  for (auto& cell : flipped["certificates"]["cells"]) {
    if (cell["status"] == "DISJOINT") {
      cell["status"] = "CONTAINED";
      break;
    }
  }
  CHECK(check_certificate(flipped).exit_code == 1);
}

TEST_CASE("profile reports re-verify") {
  Json prof = table1_row_2143_query();
  prof["query"] = "profile";
  RunOptions opts;
  const auto res = run(prof, opts);
  CHECK(check_certificate(res.report).exit_code == 0);
  Json tampered = res.report;
  tampered["profile"].push_back(Json{4, 3, 2, 1});
  CHECK(check_certificate(tampered).exit_code == 1);
}

TEST_CASE("json round trips") {
  const Permutation w({3, 1, 2});
  CHECK(permutation_from_json(to_json(w)) == w);
  const Root r = root_c(2, 2, 4);
  CHECK(root_from_json(to_json(r)) == r);
  const Rational q(-7, 3);
  CHECK(rational_from_json(to_json(q)) == q);
  RationalMatrix m(3);
  m.set(1, 3, Rational(5, 2));
  m.set(2, 1, Rational(-4));
  CHECK(matrix_from_json(to_json(m)) == m);
  const HessenbergSpace H = special_space(SpecialKind::Beta1, 4);
  const HessenbergSpace back = space_from_json(to_json(H));
  CHECK(back.roots.roots == H.roots.roots);
  CHECK(back.cartan == H.cartan);
  // cartan policies by name
  const auto gen = space_from_json(Json{{"system", "A"},
                                        {"rank", 3},
                                        {"roots", {{1, 3}}},
                                        {"cartan", "generated"}});
  CHECK(gen.cartan.empty());
  const auto full = space_from_json(Json{{"system", "A"},
                                         {"rank", 3},
                                         {"roots", Json::parse("[[1,2],[1,3],[2,3]]")},
                                         {"cartan", "full"}});
  CHECK(full.cartan.size() == 2);
  MultiPoly p = MultiPoly::variable(3, 0) * MultiPoly::variable(3, 2) -
                MultiPoly::constant(3, Rational(5, 3));
  CHECK(poly_from_json(to_json(p, {"a", "b", "c"})) == p);
}

TEST_CASE("fixture corpora pass") {
  RunOptions opts;
  opts.no_row_instances = 60;  // the acceptance suite runs the full sweep size
  opts.seed = 99;
  for (const std::string name : {"table1", "examples", "folding", "formulas"}) {
    const CorpusResult res = verify_corpus(name, HESSLAB_FIXTURES_DIR, opts);
    for (const auto& line : res.lines) {
      INFO(name << " / " << line.id << ": " << line.detail);
      CHECK(line.pass);
    }
  }
  CHECK_THROWS_AS(verify_corpus("nonsense", HESSLAB_FIXTURES_DIR, opts), JsonError);
}
