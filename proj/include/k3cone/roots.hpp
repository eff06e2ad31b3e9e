// (-2)-roots of hyperbolic lattices: reflections and exact enumeration of
// roots by level with respect to a controlling vector.

#ifndef K3CONE_ROOTS_HPP_
#define K3CONE_ROOTS_HPP_

#include "k3cone/lattice.hpp"

#include <functional>
#include <vector>

namespace k3cone {

// A lattice vector of norm exactly -2. Roots are primitive automatically.
class Root {
public:
  Root(const GramLattice& lattice, LatticeVector vec);
  const LatticeVector& vec() const { return vec_; }
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root& a, const Root& b) { return a.vec_ <=> b.vec_; }

private:
  LatticeVector vec_;
};

// s_a(x) = x + (x.a) a
LatticeVector reflect(const GramLattice& lattice, const Root& alpha, const LatticeVector& x);
Isometry reflection_matrix(const GramLattice& lattice, const Root& alpha);

// Enumerates {a : a.a = -2, a.v0 = level} for a fixed lattice and v0. The
// slice is parametrised once as x_level + B*y over an integer basis B of
// v0^perp, on which minus the form is positive definite; each level is then
// a Fincke-Pohst search using fraction-free (Bareiss) LDL data, so all
// bounds are exact integers.
class RootSlicer {
public:
  // Requires signature (1, rank-1) and v0.v0 > 0.
  RootSlicer(const GramLattice& lattice, LatticeVector v0);

  const GramLattice& lattice() const { return lattice_; }
  const LatticeVector& v0() const { return v0_; }

  // Calls visit(root_vector) for every root on the level, in search order.
  // Stops early when visit returns false. Returns the number visited.
  std::size_t for_each(const Int& level, const std::function<bool(const LatticeVector&)>& visit) const;

  // All roots of the level, sorted lexicographically.
  std::vector<Root> roots(const Int& level) const;

private:
  GramLattice lattice_;
  LatticeVector v0_;
  IntVec v0_covector_;
  Int gcd_;               // content of v0_covector_
  LatticeVector unit_;    // v0_covector_ . unit_ = gcd_
  IntMatrix basis_;       // rank x (rank-1), columns span v0^perp
  IntMatrix neg_form_;    // -B^T G B, positive definite
};

std::vector<Root> enumerate_roots_at_level(const GramLattice& lattice, const LatticeVector& v0,
                                           const Int& level);

}  // namespace k3cone

#endif
