// JSON encodings shared by the catalog and the command-line tool. Integers
// outside the int64 range are written as decimal strings; either form is
// accepted on input.

#ifndef K3CONE_IO_HPP_
#define K3CONE_IO_HPP_

#include "k3cone/cone.hpp"
#include "k3cone/lattice.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3cone {

using Json = nlohmann::json;  // keys sorted, so dumps are canonical

Json int_to_json(const Int& x);
Int int_from_json(const Json& j, const std::string& where);
Json vec_to_json(const IntVec& v);
IntVec vec_from_json(const Json& j, const std::string& where);
Json vecs_to_json(const std::vector<IntVec>& vs);
std::vector<IntVec> vecs_from_json(const Json& j, const std::string& where);
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, const std::string& where);

// {label, blocks: [...]} or {label, gram: [[...]]}; exactly one of the two.
struct LatticeDefinition {
  std::string label;
  std::optional<std::vector<std::string>> blocks;
  std::optional<IntMatrix> gram;

  GramLattice build() const;
  friend bool operator==(const LatticeDefinition&, const LatticeDefinition&) = default;
};

LatticeDefinition lattice_definition_from_json(const Json& j);
Json lattice_definition_to_json(const LatticeDefinition& d);

// Parses a whole document; syntax errors carry the line number.
Json parse_json_text(const std::string& text, const std::string& source);
std::string read_text_file(const std::string& path);

GramLattice load_lattice_file(const std::string& path);

// {"ambient_dim": n, "rays": [...], "lineality": [...]} and/or
// {"ambient_dim": n, "facets": [...], "equations": [...]}; when both are
// given they must describe the same cone.
RationalCone cone_from_json(const Json& j);
Json cone_to_json(const RationalCone& c);

// {"shared_ray": [...], "chambers": [cone, ...], "adjacency": [[i, j], ...]}
ChamberComplex chamber_complex_from_json(const Json& j);

}  // namespace k3cone

#endif
