// Catalog of K3-fibred mirrors of Fano threefolds: Galois triviality,
// asserted 2-reflectivity of the generic-fibre Picard lattice, and the
// family count bookkeeping. Entries record claims with their citation;
// cross_check compares claims with Vinberg runs.

#ifndef K3CONE_CATALOG_HPP_
#define K3CONE_CATALOG_HPP_

#include "k3cone/io.hpp"
#include "k3cone/vinberg.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace k3cone {

enum class ReflectivityStatus { Asserted2Reflective, AssertedNot2Reflective, Unknown };
std::string to_string(ReflectivityStatus s);  // ASSERTED_2REFLECTIVE, ...
ReflectivityStatus reflectivity_status_from_string(const std::string& s);

struct FanoEntry {
  std::string label;
  std::optional<LatticeDefinition> lattice;
  bool galois_trivial = true;
  ReflectivityStatus status = ReflectivityStatus::Unknown;
  std::string provenance;
  friend bool operator==(const FanoEntry&, const FanoEntry&) = default;
};

struct CatalogSummary {
  long total = 0;
  long excluded = 0;
  long infinite = 0;
  friend bool operator==(const CatalogSummary&, const CatalogSummary&) = default;
};

struct Catalog {
  std::vector<FanoEntry> entries;
  CatalogSummary summary;

  const FanoEntry* find(const std::string& label) const;
  friend bool operator==(const Catalog&, const Catalog&) = default;
};

// Errors (ParseError) name the source and line.
Catalog parse_catalog(const std::string& text, const std::string& source = "catalog");
Catalog load_catalog(const std::string& path);
// Canonical text: sorted keys, two-space indent, entries in stored order,
// summary last, trailing newline.
std::string save_catalog(const Catalog& catalog);
Json entry_to_json(const FanoEntry& e);

Catalog default_catalog();

struct CatalogArithmetic {
  long galois_nontrivial = 0;
  long asserted_reflective = 0;
  bool excluded_matches = false;   // galois_nontrivial + asserted_reflective == excluded
  bool remainder_matches = false;  // total - excluded == infinite
  bool ok() const { return excluded_matches && remainder_matches; }
};
CatalogArithmetic check_arithmetic(const Catalog& catalog);

enum class CrossCheckOutcome { Consistent, Contradiction, Inconclusive, Skipped };
std::string to_string(CrossCheckOutcome o);

struct CrossCheckRow {
  std::string label;
  CrossCheckOutcome outcome = CrossCheckOutcome::Skipped;
  std::optional<Verdict> verdict;
  std::string note;
};

using VinbergRunner = std::function<VinbergResult(const GramLattice&)>;
VinbergResult default_vinberg_runner(const GramLattice& lattice);

std::vector<CrossCheckRow> cross_check(const std::vector<FanoEntry>& entries,
                                       const VinbergRunner& runner = default_vinberg_runner);

}  // namespace k3cone

#endif
