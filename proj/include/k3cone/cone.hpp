// Rational polyhedral cones in double description, and the operations used
// on nef / movable cone models: duals, faces, invariant subspaces, group
// actions, restricted face orbits and chamber-complex validation.

#ifndef K3CONE_CONE_HPP_
#define K3CONE_CONE_HPP_

#include "k3cone/integer.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace k3cone {

// Canonical form: rays and facets are primitive, lexicographically sorted
// and duplicate free. Non-pointed cones additionally carry a lineality
// basis (rref, primitive) and rays are reduced modulo it; likewise facets
// are reduced modulo the equations cutting out the linear span. Two cones
// are equal iff their canonical descriptions are equal.
class RationalCone {
public:
  static RationalCone from_rays(std::size_t ambient_dim, std::vector<IntVec> rays,
                                std::vector<IntVec> lineality = {});
  // {x : f.x >= 0 for f in facets, e.x = 0 for e in equations}
  static RationalCone from_inequalities(std::size_t ambient_dim, std::vector<IntVec> facets,
                                        std::vector<IntVec> equations = {});

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return ambient_dim_ - equations_.size(); }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<IntVec>& lineality() const { return lineality_; }
  const std::vector<IntVec>& facets() const { return facets_; }
  const std::vector<IntVec>& equations() const { return equations_; }

  bool pointed() const { return lineality_.empty(); }
  bool full_dimensional() const { return equations_.empty(); }
  bool contains(const IntVec& x) const;
  // Every facet strictly positive at x (and x in the span).
  bool contains_in_relative_interior(const IntVec& x) const;
  // Sum of the rays: a point of the relative interior.
  IntVec interior_point() const;

  friend bool operator==(const RationalCone&, const RationalCone&) = default;
  friend std::weak_ordering operator<=>(const RationalCone& a, const RationalCone& b) {
    if (auto c = a.ambient_dim_ <=> b.ambient_dim_; c != 0)
      return c;
    if (auto c = a.lineality_ <=> b.lineality_; c != 0)
      return c;
    return a.rays_ <=> b.rays_;
  }

private:
  RationalCone() = default;
  std::size_t ambient_dim_ = 0;
  std::vector<IntVec> rays_;
  std::vector<IntVec> lineality_;
  std::vector<IntVec> facets_;
  std::vector<IntVec> equations_;
};

// Face = cone ∩ {f.x = 0 : f in active facets}. Indices refer to the
// canonical facet/ray lists of the parent cone.
struct ConeFace {
  std::vector<std::size_t> active_facets;
  std::vector<std::size_t> rays;
  std::size_t dim = 0;
};

RationalCone face_cone(const RationalCone& cone, const ConeFace& face);

// Operations below refuse ambient dimensions above the guard. The default
// guard is 12, or the value of the K3CONE_DIM_GUARD environment variable.
std::size_t default_dim_guard();

RationalCone dual_cone(std::size_t ambient_dim, const std::vector<IntVec>& rays,
                       std::optional<std::size_t> dim_guard = std::nullopt);
inline RationalCone dual_cone(const RationalCone& cone, std::optional<std::size_t> dim_guard = std::nullopt) {
  std::vector<IntVec> gens = cone.rays();
  for (const IntVec& l : cone.lineality()) {
    gens.push_back(l);
    gens.push_back(negated(l));
  }
  return dual_cone(cone.ambient_dim(), gens, dim_guard);
}

std::vector<ConeFace> faces(const RationalCone& cone, std::size_t codim,
                            std::optional<std::size_t> dim_guard = std::nullopt);

// Integer basis (Hermite normal form) of {x : M x = x for all generators}.
std::vector<IntVec> fixed_subspace(std::span<const IntMatrix> generators);

// cone ∩ span(basis), in the coordinates of `basis`.
RationalCone intersect_with_subspace(const RationalCone& cone, const std::vector<IntVec>& basis,
                                     std::optional<std::size_t> dim_guard = std::nullopt);

RationalCone act(const IntMatrix& m, const RationalCone& cone,
                 std::optional<std::size_t> dim_guard = std::nullopt);

struct OrbitPartition {
  std::vector<std::vector<std::size_t>> classes;  // indices into the input, ascending
  std::vector<bool> complete;                     // closure finished within the word budget
  std::vector<std::size_t> representatives;       // smallest index of each class
};

// Breadth-first closure of the generator action (generators and their
// inverses) over words of length <= word_budget.
OrbitPartition orbit_faces(const std::vector<RationalCone>& faces, std::span<const IntMatrix> generators,
                           std::size_t word_budget, std::optional<std::size_t> dim_guard = std::nullopt);

struct ChamberComplex {
  IntVec shared_ray;
  std::vector<RationalCone> chambers;
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;
};

struct ChamberComplexReport {
  struct Overlap {
    std::size_t first, second;
    IntVec witness;  // lies in both relative interiors
  };
  struct Adjacency {
    std::size_t first, second;
    bool ok = false;
    std::optional<RationalCone> common_facet;
    std::string detail;
  };
  std::vector<std::size_t> missing_shared_ray;  // chambers not containing it
  std::vector<Overlap> overlaps;
  std::vector<Adjacency> adjacencies;

  bool shared_ray_ok() const { return missing_shared_ray.empty(); }
  bool disjoint_ok() const { return overlaps.empty(); }
  bool adjacency_ok() const;
  bool ok() const { return shared_ray_ok() && disjoint_ok() && adjacency_ok(); }
};

ChamberComplexReport validate_chamber_complex(const ChamberComplex& complex,
                                              std::optional<std::size_t> dim_guard = std::nullopt);

}  // namespace k3cone

#endif
