#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "freeplate/error.hpp"
#include "freeplate/verify.hpp"
#include "json.hpp"

using namespace freeplate;

TEST_CASE("manifest covers the required lemma identifiers") {
  const char* required[] = {"fact1",    "fact2",     "fact3",    "fact4",  "ijbounds",   "propLS",
                            "thm2-ordering", "wbounds", "scaling", "fefo", "negclass-degenerate",
                            "zeroclass", "poly1",    "poly2",  "derivs",     "ptwise",
                            "mondenom", "monnum",    "gppneg",   "lemmaboundRC-equality", "monint",
                            "inertiabound"};
  std::set<std::string> ids;
  for (const auto& m : verify_manifest()) {
    CHECK_MESSAGE(ids.insert(m.check_id).second, "duplicate id " << m.check_id);
    CHECK(std::find(verify_modules().begin(), verify_modules().end(), m.module) != verify_modules().end());
    CHECK_FALSE(m.ref.empty());
  }
  for (const char* r : required) CHECK_MESSAGE(ids.count(r) == 1, "missing " << r);
}

TEST_CASE("every manifest entry runs exactly once under all") {
  auto rep = verify_suite("all", 0);
  REQUIRE(rep.entries.size() == verify_manifest().size());
  for (size_t i = 0; i < rep.entries.size(); ++i) {
    CHECK(rep.entries[i].check_id == verify_manifest()[i].check_id);
    CHECK_MESSAGE(rep.entries[i].status != CheckStatus::fail, rep.entries[i].check_id << ": " << rep.entries[i].detail);
  }
  CHECK(rep.passed());
}

TEST_CASE("module selections") {
  auto sf = verify_suite("special_functions");
  CHECK(sf.entries.size() >= 6);
  CHECK(sf.passed());
  auto rod = verify_suite("rod_spectrum");
  bool found = false;
  for (const auto& e : rod.entries)
    if (e.check_id == "negclass-degenerate") {
      found = true;
      CHECK(std::fabs(e.value - 1.13943) <= 1e-4);
    }
  CHECK(found);
  CHECK_THROWS_AS(verify_suite("nonsense"), InvalidArgument);
}

TEST_CASE("overall flag follows the entries") {
  VerificationReport r;
  r.entries.push_back({"x", "ref", CheckStatus::inconclusive, 1, 1, 0, ""});
  CHECK(r.passed());
  r.entries.push_back({"y", "ref", CheckStatus::fail, 1, 1, 0, ""});
  CHECK_FALSE(r.passed());
  auto j = nlohmann::ordered_json::parse(verification_to_json(r, false));
  CHECK(j["overall"] == "fail");
  CHECK_FALSE(j["entries"][0].contains("runtime_ms"));
  std::vector<std::string> keys;
  for (auto it = j["entries"][0].begin(); it != j["entries"][0].end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"check_id", "ref", "status", "value", "tolerance"});
  auto jt = nlohmann::json::parse(verification_to_json(r, true));
  CHECK(jt["entries"][0].contains("runtime_ms"));
}

TEST_CASE("reports are reproducible without timings") {
  auto a = verify_suite("ball_spectrum", 3), b = verify_suite("ball_spectrum", 3);
  CHECK(verification_to_json(a, false) == verification_to_json(b, false));
  CHECK(verification_to_csv(a, false) == verification_to_csv(b, false));
}
