#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modaut/report.hpp"

using namespace modaut;

TEST_CASE("rendering primitives") {
  FieldPtr F = make_ext(17, 2);
  CHECK(render_field(F.get()) == "17^2");
  CHECK(render_elem(ff_const(F.get(), 5)) == "5,0");
  CHECK(render_fqvec({}) == "0");
  CHECK(render_fqvec({ff_const(F.get(), 1), ff_const(F.get(), 3)}) ==
        "1,0;3,0");
}

TEST_CASE("greedy generators close the group") {
  auto c = std::get<OddCharCurve>(reduce_mod(22, 3));
  AutGroup g = full_group(c);
  REQUIRE(g.elems.size() == 12);
  auto gens = greedy_generators(g.table);
  CHECK(gens.size() <= 3);
  CHECK(closure(g.table, gens).size() == g.table.size());
  CHECK(identify(g.table) == "D6");
  // D6 / <j> = S3, reported under its dihedral name
  CHECK(reduced_label(g.table, g.j_index) == "D3");
}

TEST_CASE("group record schema") {
  auto c = std::get<OddCharCurve>(reduce_mod(41, 17));
  AutGroup g = full_group(c);
  Json rec = odd_group_record(g);
  CHECK(rec["order"] == 4);
  CHECK(rec["label"] == "(Z/2)^2");
  CHECK(rec["reduced_label"] == "Z/2");
  REQUIRE(rec["generators"].is_array());
  CHECK(rec["generators"].size() == 2);
  for (auto& one : rec["generators"]) {
    CHECK(one["matrix"].size() == 4);
    CHECK(one["field"].is_string());
    CHECK(one["multiplier_or_h"].is_string());
  }
}

TEST_CASE("char-2 group record") {
  auto c = std::get<Char2Curve>(reduce_mod(33, 2));
  Char2Group g = full_group2(c);
  Json rec = char2_group_record(g);
  CHECK(rec["order"] == 12);
  CHECK(rec["label"] == "D6");
  auto gens = greedy_generators(g.table);
  CHECK(closure(g.table, gens).size() == g.table.size());
}

TEST_CASE("scan record and document round-trip") {
  ScanReport r = full_scan(41, 60);
  Json rec = scan_record(r);
  CHECK(rec["N"] == 41);
  CHECK(rec["exceptional"][0]["p"] == 17);
  Json doc = make_document("sieve", {{"n", 41}}, rec, /*no_meta=*/true);
  CHECK_FALSE(doc.contains("meta"));
  CHECK(doc["command"] == "sieve");
  // serialization is deterministic
  CHECK(doc.dump() == make_document("sieve", {{"n", 41}}, scan_record(r),
                                    true)
                          .dump());
  Json with_meta = make_document("sieve", {{"n", 41}}, rec, false);
  CHECK(with_meta["meta"]["tool"] == "modaut");
}

TEST_CASE("expected-results file covers every level") {
  std::ifstream in(default_expected_path());
  REQUIRE(in.good());
  nlohmann::json exp;
  in >> exp;
  std::vector<int> ns;
  for (auto& r : exp.at("rows")) ns.push_back(r.at("N").get<int>());
  std::sort(ns.begin(), ns.end());
  CHECK(ns == hyperelliptic_levels());
  int disputed = 0;
  for (auto& r : exp.at("rows")) disputed += r.value("disputed", false);
  CHECK(disputed == 1);
}
