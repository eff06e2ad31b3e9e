#include "k3cone/catalog.hpp"

#include "k3cone/error.hpp"

#include <set>

namespace k3cone {

std::string to_string(ReflectivityStatus s) {
  switch (s) {
  case ReflectivityStatus::Asserted2Reflective: return "ASSERTED_2REFLECTIVE";
  case ReflectivityStatus::AssertedNot2Reflective: return "ASSERTED_NOT_2REFLECTIVE";
  case ReflectivityStatus::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

ReflectivityStatus reflectivity_status_from_string(const std::string& s) {
  if (s == "ASSERTED_2REFLECTIVE")
    return ReflectivityStatus::Asserted2Reflective;
  if (s == "ASSERTED_NOT_2REFLECTIVE")
    return ReflectivityStatus::AssertedNot2Reflective;
  if (s == "UNKNOWN")
    return ReflectivityStatus::Unknown;
  throw ParseError("unknown 2-reflectivity status \"" + s + "\"");
}

std::string to_string(CrossCheckOutcome o) {
  switch (o) {
  case CrossCheckOutcome::Consistent: return "CONSISTENT";
  case CrossCheckOutcome::Contradiction: return "CONTRADICTION";
  case CrossCheckOutcome::Inconclusive: return "INCONCLUSIVE";
  case CrossCheckOutcome::Skipped: return "SKIPPED";
  }
  return "SKIPPED";
}

const FanoEntry* Catalog::find(const std::string& label) const {
  for (const FanoEntry& e : entries)
    if (e.label == label)
      return &e;
  return nullptr;
}

namespace {

// Line on which each element of the top-level array starts.
std::vector<std::size_t> element_lines(const std::string& text) {
  std::vector<std::size_t> lines;
  std::size_t line = 1;
  int depth = 0;
  bool in_string = false, escaped = false, expecting = false;
  for (char c : text) {
    if (c == '\n')
      ++line;
    if (in_string) {
      if (escaped)
        escaped = false;
      else if (c == '\\')
        escaped = true;
      else if (c == '"')
        in_string = false;
      continue;
    }
    if (expecting && c != ' ' && c != '\t' && c != '\r' && c != '\n' && c != ']') {
      lines.push_back(line);
      expecting = false;
    }
    if (c == '"')
      in_string = true;
    else if (c == '[' || c == '{') {
      if (++depth == 1 && c == '[')
        expecting = true;
    } else if (c == ']' || c == '}')
      --depth;
    else if (c == ',' && depth == 1)
      expecting = true;
  }
  return lines;
}

long summary_count(const Json& s, const char* key, const std::string& where) {
  if (!s.contains(key) || !s[key].is_number_integer() || s[key].get<long>() < 0)
    throw ParseError(where + ": summary." + key + " must be a nonnegative integer");
  return s[key].get<long>();
}

FanoEntry entry_from_json(const Json& j, const std::string& where) {
  if (!j.is_object())
    throw ParseError(where + ": catalog elements must be objects");
  FanoEntry e;
  for (const auto& [key, value] : j.items())
    if (key != "label" && key != "galois_trivial" && key != "status" && key != "provenance" && key != "lattice")
      throw ParseError(where + ": unknown field \"" + key + "\"");
  if (!j.contains("label") || !j["label"].is_string() || j["label"].get<std::string>().empty())
    throw ParseError(where + ": entry needs a nonempty string label");
  e.label = j["label"].get<std::string>();
  if (!j.contains("galois_trivial") || !j["galois_trivial"].is_boolean())
    throw ParseError(where + ": entry " + e.label + " needs a boolean galois_trivial");
  e.galois_trivial = j["galois_trivial"].get<bool>();
  if (!j.contains("status") || !j["status"].is_string())
    throw ParseError(where + ": entry " + e.label + " needs a status string");
  try {
    e.status = reflectivity_status_from_string(j["status"].get<std::string>());
  } catch (const ParseError& err) {
    throw ParseError(where + ": " + err.what());
  }
  if (j.contains("provenance")) {
    if (!j["provenance"].is_string())
      throw ParseError(where + ": provenance must be a string");
    e.provenance = j["provenance"].get<std::string>();
  }
  if (e.status != ReflectivityStatus::Unknown && e.provenance.empty())
    throw ParseError(where + ": entry " + e.label + " asserts a status without provenance");
  if (j.contains("lattice")) {
    try {
      e.lattice = lattice_definition_from_json(j["lattice"]);
    } catch (const Error& err) {
      throw ParseError(where + ": entry " + e.label + ": " + err.what());
    }
  }
  return e;
}

}  // namespace

Catalog parse_catalog(const std::string& text, const std::string& source) {
  const Json doc = parse_json_text(text, source);
  if (!doc.is_array())
    throw ParseError(source + ":1: catalog must be a JSON array");
  const std::vector<std::size_t> lines = element_lines(text);
  auto where = [&](std::size_t i) { return source + ":" + std::to_string(i < lines.size() ? lines[i] : 1); };

  Catalog cat;
  bool have_summary = false;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const Json& el = doc[i];
    if (el.is_object() && el.contains("summary")) {
      if (have_summary)
        throw ParseError(where(i) + ": more than one summary record");
      if (el.size() != 1 || !el["summary"].is_object())
        throw ParseError(where(i) + ": summary record must be {\"summary\": {...}}");
      const Json& s = el["summary"];
      cat.summary = {summary_count(s, "total", where(i)), summary_count(s, "excluded", where(i)),
                     summary_count(s, "infinite", where(i))};
      have_summary = true;
      continue;
    }
    FanoEntry e = entry_from_json(el, where(i));
    if (!labels.insert(e.label).second)
      throw ParseError(where(i) + ": duplicate label \"" + e.label + "\"");
    cat.entries.push_back(std::move(e));
  }
  if (!have_summary)
    throw ParseError(source + ": catalog has no summary record");
  return cat;
}

Catalog load_catalog(const std::string& path) {
  return parse_catalog(read_text_file(path), path);
}

Json entry_to_json(const FanoEntry& e) {
  Json j = Json::object();
  j["label"] = e.label;
  j["galois_trivial"] = e.galois_trivial;
  j["status"] = to_string(e.status);
  j["provenance"] = e.provenance;
  if (e.lattice)
    j["lattice"] = lattice_definition_to_json(*e.lattice);
  return j;
}

std::string save_catalog(const Catalog& catalog) {
  Json doc = Json::array();
  for (const FanoEntry& e : catalog.entries)
    doc.push_back(entry_to_json(e));
  doc.push_back({{"summary",
                  {{"total", catalog.summary.total},
                   {"excluded", catalog.summary.excluded},
                   {"infinite", catalog.summary.infinite}}}});
  return doc.dump(2) + "\n";
}

Catalog default_catalog() {
  const std::string galois =
      "Galois action on the Picard lattice of the geometric generic fibre: Przyjalkowski 2018; "
      "Doran-Harder-Katzarkov-Ovcharenko-Przyjalkowski 2023";
  const std::string reflective =
      "Nikulin's classification of 2-reflective lattices (Dolgachev 1983, Thm 2.2.2) applied to the lattices "
      "of Przyjalkowski 2018 and Doran-Harder-Katzarkov-Ovcharenko-Przyjalkowski 2023";
  Catalog cat;
  for (const char* label : {"2.12", "4.3", "6.1", "7.1", "8.1", "9.1", "10.1"})
    cat.entries.push_back({label, std::nullopt, false, ReflectivityStatus::Unknown, galois});
  for (const char* label : {"2.1", "3.2", "3.6", "4.9", "X6 in P(1,1,1,1,3)", "X6 in P(1,1,1,2,3)"})
    cat.entries.push_back({label, std::nullopt, true, ReflectivityStatus::Asserted2Reflective, reflective});
  LatticeDefinition quartic{"<-4> + U + (-E8)^2",
                            std::vector<std::string>{"DIAG(-4)", "U", "E8MINUS", "E8MINUS"}, std::nullopt};
  cat.entries.push_back({"X4 in P4", quartic, true, ReflectivityStatus::AssertedNot2Reflective, reflective});
  cat.summary = {105, 13, 92};
  return cat;
}

CatalogArithmetic check_arithmetic(const Catalog& catalog) {
  CatalogArithmetic a;
  for (const FanoEntry& e : catalog.entries) {
    if (!e.galois_trivial)
      ++a.galois_nontrivial;
    else if (e.status == ReflectivityStatus::Asserted2Reflective)
      ++a.asserted_reflective;
  }
  a.excluded_matches = a.galois_nontrivial + a.asserted_reflective == catalog.summary.excluded;
  a.remainder_matches = catalog.summary.total - catalog.summary.excluded == catalog.summary.infinite;
  return a;
}

VinbergResult default_vinberg_runner(const GramLattice& lattice) {
  return run_vinberg(lattice);
}

std::vector<CrossCheckRow> cross_check(const std::vector<FanoEntry>& entries, const VinbergRunner& runner) {
  std::vector<CrossCheckRow> rows;
  for (const FanoEntry& e : entries) {
    CrossCheckRow row;
    row.label = e.label;
    if (!e.lattice) {
      row.note = "no lattice attached";
      rows.push_back(std::move(row));
      continue;
    }
    const VinbergResult r = runner(e.lattice->build());
    row.verdict = r.verdict;
    const bool certified = r.verdict == Verdict::TwoReflective;
    switch (e.status) {
    case ReflectivityStatus::Asserted2Reflective:
      row.outcome = certified ? CrossCheckOutcome::Consistent : CrossCheckOutcome::Inconclusive;
      row.note = certified ? "certificate found" : "budget exhausted (" + r.stop_reason + ") before a certificate";
      break;
    case ReflectivityStatus::AssertedNot2Reflective:
      row.outcome = certified ? CrossCheckOutcome::Contradiction : CrossCheckOutcome::Consistent;
      row.note = certified ? "finite-volume certificate found for a lattice asserted not 2-reflective"
                           : "no certificate (" + r.stop_reason + ")";
      break;
    case ReflectivityStatus::Unknown:
      row.outcome = CrossCheckOutcome::Inconclusive;
      row.note = "status unknown; Vinberg verdict " + to_string(r.verdict);
      break;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace k3cone
