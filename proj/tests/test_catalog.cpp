#include "k3cone/catalog.hpp"
#include "k3cone/error.hpp"

#include "doctest.h"

using namespace k3cone;

namespace {

const std::string shipped = std::string(K3CONE_DATA_DIR) + "/fano_mirror_catalog.json";

std::string error_of(const std::string& text) {
  try {
    parse_catalog(text, "cat.json");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

FanoEntry entry(const std::string& label, std::vector<std::string> blocks, ReflectivityStatus status) {
  return {label, LatticeDefinition{label, std::move(blocks), std::nullopt}, true, status, "test"};
}

VinbergResult cheap_runner(const GramLattice& l) {
  return run_vinberg(l, std::nullopt, {.max_walls = 4});
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("shipped catalog round-trips byte for byte") {
  const std::string text = read_text_file(shipped);
  const Catalog cat = parse_catalog(text, shipped);
  CHECK(save_catalog(cat) == text);
  CHECK(cat == default_catalog());
  CHECK(load_catalog(shipped) == cat);
}

TEST_CASE("bookkeeping of the shipped catalog") {
  const Catalog cat = load_catalog(shipped);
  CHECK(cat.summary == CatalogSummary{105, 13, 92});
  const CatalogArithmetic a = check_arithmetic(cat);
  CHECK(a.galois_nontrivial == 7);
  CHECK(a.asserted_reflective == 6);
  CHECK(a.ok());
  const FanoEntry* quartic = cat.find("X4 in P4");
  REQUIRE(quartic);
  REQUIRE(quartic->lattice);
  CHECK(quartic->status == ReflectivityStatus::AssertedNot2Reflective);
  const GramLattice l = quartic->lattice->build();
  CHECK(l.rank() == 19);
  CHECK(determinant(l) == 4);
  CHECK(cat.find("no such family") == nullptr);
  for (const FanoEntry& e : cat.entries)
    CHECK_FALSE(e.provenance.empty());
}

TEST_CASE("arithmetic mismatches are reported") {
  Catalog cat = default_catalog();
  cat.summary.excluded = 12;
  CHECK_FALSE(check_arithmetic(cat).excluded_matches);
  CHECK_FALSE(check_arithmetic(cat).remainder_matches);
  cat = default_catalog();
  cat.summary.infinite = 91;
  CHECK(check_arithmetic(cat).excluded_matches);
  CHECK_FALSE(check_arithmetic(cat).ok());
}

TEST_CASE("parse errors name the line") {
  const std::string dup =
      "[\n"
      "  {\"label\": \"a\", \"galois_trivial\": true, \"status\": \"UNKNOWN\"},\n"
      "  {\"label\": \"a\", \"galois_trivial\": true, \"status\": \"UNKNOWN\"},\n"
      "  {\"summary\": {\"total\": 1, \"excluded\": 0, \"infinite\": 1}}\n"
      "]\n";
  CHECK(error_of(dup) == "cat.json:3: duplicate label \"a\"");
  const std::string unknown_field =
      "[\n"
      "  {\"summary\": {\"total\": 1, \"excluded\": 0, \"infinite\": 1}},\n"
      "\n"
      "  {\"label\": \"a\", \"galois_trivial\": true, \"status\": \"UNKNOWN\", \"colour\": 1}\n"
      "]\n";
  CHECK(error_of(unknown_field) == "cat.json:4: unknown field \"colour\"");
  CHECK(error_of("[\n{\"label\": \"a\",\n") == "cat.json:3: malformed JSON");
  CHECK(error_of("[\n  {\"label\": \"a\", \"galois_trivial\": true, \"status\": \"MAYBE\"}\n]") ==
        "cat.json:2: unknown 2-reflectivity status \"MAYBE\"");
  CHECK(error_of("[\n  {\"label\": \"a\", \"galois_trivial\": true, \"status\": \"ASSERTED_2REFLECTIVE\"}\n]")
            .starts_with("cat.json:2: "));
  CHECK(error_of("[\n  {\"label\": \"a\", \"galois_trivial\": true, \"status\": \"UNKNOWN\"}\n]") ==
        "cat.json: catalog has no summary record");
  CHECK(error_of("{}").starts_with("cat.json:1: "));
  const std::string bad_lattice =
      "[\n"
      "  {\"summary\": {\"total\": 1, \"excluded\": 0, \"infinite\": 1}},\n"
      "  {\"label\": \"a\", \"galois_trivial\": true, \"status\": \"UNKNOWN\",\n"
      "   \"lattice\": {\"blocks\": [\"V\"]}}\n"
      "]\n";
  CHECK(error_of(bad_lattice).starts_with("cat.json:3: entry a: "));
  CHECK_THROWS_AS(load_catalog("/nonexistent/catalog.json"), ParseError);
}

TEST_CASE("cross check outcomes") {
  const std::vector<FanoEntry> entries{
      entry("U asserted reflective", {"U"}, ReflectivityStatus::Asserted2Reflective),
      entry("U asserted not reflective", {"U"}, ReflectivityStatus::AssertedNot2Reflective),
      entry("U unknown", {"U"}, ReflectivityStatus::Unknown),
      entry("quartic asserted reflective", {"DIAG(-4)", "U", "E8MINUS", "E8MINUS"},
            ReflectivityStatus::Asserted2Reflective),
      entry("quartic asserted not reflective", {"DIAG(-4)", "U", "E8MINUS", "E8MINUS"},
            ReflectivityStatus::AssertedNot2Reflective),
      {"no lattice", std::nullopt, true, ReflectivityStatus::Asserted2Reflective, "test"},
  };
  const std::vector<CrossCheckRow> rows = cross_check(entries, cheap_runner);
  REQUIRE(rows.size() == entries.size());
  CHECK(rows[0].outcome == CrossCheckOutcome::Consistent);
  CHECK(rows[1].outcome == CrossCheckOutcome::Contradiction);
  CHECK(rows[2].outcome == CrossCheckOutcome::Inconclusive);
  CHECK(rows[3].outcome == CrossCheckOutcome::Inconclusive);
  CHECK(rows[4].outcome == CrossCheckOutcome::Consistent);
  CHECK(rows[5].outcome == CrossCheckOutcome::Skipped);
  CHECK_FALSE(rows[5].verdict);
  CHECK(rows[0].verdict == Verdict::TwoReflective);
  CHECK(rows[4].verdict == Verdict::NotDetected);
  for (std::size_t i = 0; i < rows.size(); ++i)
    CHECK(rows[i].label == entries[i].label);
  CHECK(to_string(CrossCheckOutcome::Contradiction) == "CONTRADICTION");
}

TEST_CASE("shipped catalog has no contradiction at a small budget") {
  for (const CrossCheckRow& row : cross_check(load_catalog(shipped).entries, cheap_runner))
    CHECK(row.outcome != CrossCheckOutcome::Contradiction);
}

TEST_CASE("status strings") {
  for (ReflectivityStatus s : {ReflectivityStatus::Asserted2Reflective, ReflectivityStatus::AssertedNot2Reflective,
                               ReflectivityStatus::Unknown})
    CHECK(reflectivity_status_from_string(to_string(s)) == s);
  CHECK_THROWS_AS(reflectivity_status_from_string("asserted_2reflective"), ParseError);
}

}  // TEST_SUITE
