#include "k3cone/io.hpp"

#include "k3cone/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace k3cone {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

}  // namespace

Json int_to_json(const Int& x) {
  if (x.fits_slong_p())
    return Json(x.get_si());
  return Json(x.get_str());
}

Int int_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer())
    return j.is_number_unsigned() ? Int(j.get<unsigned long>()) : Int(j.get<long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || !std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      bad(where, "expected an integer, got \"" + s + "\"");
    return Int(s[0] == '+' ? s.substr(1) : s);
  }
  bad(where, "expected an integer, got " + j.dump());
}

Json vec_to_json(const IntVec& v) {
  Json out = Json::array();
  for (const Int& x : v)
    out.push_back(int_to_json(x));
  return out;
}

IntVec vec_from_json(const Json& j, const std::string& where) {
  if (!j.is_array())
    bad(where, "expected an array of integers");
  IntVec v;
  v.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(int_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

Json vecs_to_json(const std::vector<IntVec>& vs) {
  Json out = Json::array();
  for (const IntVec& v : vs)
    out.push_back(vec_to_json(v));
  return out;
}

std::vector<IntVec> vecs_from_json(const Json& j, const std::string& where) {
  if (!j.is_array())
    bad(where, "expected an array of integer vectors");
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(vec_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json matrix_to_json(const IntMatrix& m) {
  return vecs_to_json(m.to_rows());
}

IntMatrix matrix_from_json(const Json& j, const std::string& where) {
  std::vector<IntVec> rows = vecs_from_json(j, where);
  for (const IntVec& r : rows)
    if (r.size() != rows.front().size())
      bad(where, "ragged matrix rows");
  return IntMatrix::from_rows(rows);
}

GramLattice LatticeDefinition::build() const {
  if (blocks)
    return direct_sum_tokens(*blocks, label);
  return GramLattice(*gram, label);
}

LatticeDefinition lattice_definition_from_json(const Json& j) {
  if (!j.is_object())
    bad("lattice", "expected an object with label and blocks or gram");
  LatticeDefinition d;
  if (j.contains("label")) {
    if (!j["label"].is_string())
      bad("lattice.label", "expected a string");
    d.label = j["label"].get<std::string>();
  }
  const bool has_blocks = j.contains("blocks"), has_gram = j.contains("gram");
  if (has_blocks == has_gram)
    bad("lattice", "exactly one of \"blocks\" and \"gram\" must be present");
  if (has_blocks) {
    const Json& b = j["blocks"];
    if (!b.is_array() || b.empty())
      bad("lattice.blocks", "expected a nonempty array of block tokens");
    std::vector<std::string> tokens;
    for (const Json& t : b) {
      if (!t.is_string())
        bad("lattice.blocks", "block tokens must be strings");
      tokens.push_back(t.get<std::string>());
    }
    d.blocks = std::move(tokens);
  } else {
    d.gram = matrix_from_json(j["gram"], "lattice.gram");
  }
  for (const auto& [key, value] : j.items())
    if (key != "label" && key != "blocks" && key != "gram")
      bad("lattice", "unknown field \"" + key + "\"");
  d.build();  // validates tokens and the Gram matrix
  return d;
}

Json lattice_definition_to_json(const LatticeDefinition& d) {
  Json j = Json::object();
  j["label"] = d.label;
  if (d.blocks)
    j["blocks"] = *d.blocks;
  else
    j["gram"] = matrix_to_json(*d.gram);
  return j;
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t upto = std::min(e.byte, text.size());
    const std::size_t line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw ParseError(source + ":" + std::to_string(line) + ": malformed JSON");
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GramLattice load_lattice_file(const std::string& path) {
  return lattice_definition_from_json(parse_json_text(read_text_file(path), path)).build();
}

RationalCone cone_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ambient_dim"))
    bad("cone", "expected an object with ambient_dim");
  const Int dim = int_from_json(j["ambient_dim"], "cone.ambient_dim");
  if (sgn(dim) <= 0 || !dim.fits_ulong_p())
    bad("cone.ambient_dim", "must be a positive integer");
  const std::size_t n = dim.get_ui();
  auto field = [&](const char* key) {
    return j.contains(key) ? vecs_from_json(j[key], std::string("cone.") + key) : std::vector<IntVec>{};
  };
  const bool by_rays = j.contains("rays") || j.contains("lineality");
  const bool by_facets = j.contains("facets") || j.contains("equations");
  if (!by_rays)
    return RationalCone::from_inequalities(n, field("facets"), field("equations"));
  RationalCone c = RationalCone::from_rays(n, field("rays"), field("lineality"));
  if (by_facets && !(RationalCone::from_inequalities(n, field("facets"), field("equations")) == c))
    bad("cone", "the given facets do not describe the cone generated by the given rays");
  return c;
}

Json cone_to_json(const RationalCone& c) {
  Json j = Json::object();
  j["ambient_dim"] = c.ambient_dim();
  j["dim"] = c.dim();
  j["rays"] = vecs_to_json(c.rays());
  j["lineality"] = vecs_to_json(c.lineality());
  j["facets"] = vecs_to_json(c.facets());
  j["equations"] = vecs_to_json(c.equations());
  return j;
}

ChamberComplex chamber_complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("shared_ray") || !j.contains("chambers"))
    bad("complex", "expected an object with shared_ray and chambers");
  ChamberComplex cc;
  cc.shared_ray = vec_from_json(j["shared_ray"], "complex.shared_ray");
  if (!j["chambers"].is_array())
    bad("complex.chambers", "expected an array of cones");
  for (const Json& c : j["chambers"])
    cc.chambers.push_back(cone_from_json(c));
  if (j.contains("adjacency")) {
    for (const IntVec& pair : vecs_from_json(j["adjacency"], "complex.adjacency")) {
      if (pair.size() != 2 || sgn(pair[0]) < 0 || sgn(pair[1]) < 0 || !pair[0].fits_ulong_p() ||
          !pair[1].fits_ulong_p())
        bad("complex.adjacency", "entries must be pairs of chamber indices");
      cc.adjacency.emplace_back(pair[0].get_ui(), pair[1].get_ui());
    }
  }
  return cc;
}

}  // namespace k3cone
