// Intersection numbers on Hirzebruch surfaces F_n, K3 Riemann-Roch and
// adjunction counts, and the decision table for K-negative extremal
// contractions of a K3-fibred threefold with -K = f*O(1).

#ifndef K3CONE_SURFACE_HPP_
#define K3CONE_SURFACE_HPP_

#include "k3cone/integer.hpp"

#include <string>

namespace k3cone {

// a*C0 + b*f on F_n, with C0^2 = -n, C0.f = 1, f^2 = 0.
struct HirzebruchClass {
  Int a, b;
  friend bool operator==(const HirzebruchClass&, const HirzebruchClass&) = default;
};

class Hirzebruch {
public:
  explicit Hirzebruch(Int n);  // n >= 0

  const Int& n() const { return n_; }
  IntMatrix gram() const;
  Int intersect(const HirzebruchClass& x, const HirzebruchClass& y) const;

  HirzebruchClass negative_section() const { return {1, 0}; }      // C0
  HirzebruchClass fiber() const { return {0, 1}; }                 // f
  HirzebruchClass positive_section() const { return {1, n_}; }     // C1 = C0 + n f
  HirzebruchClass anticanonical() const { return {2, n_ + 2}; }    // -K = 2 C0 + (n+2) f

private:
  Int n_;
};

enum class BaseMultiplicity { Zero, One, AtLeastTwo };
std::string to_string(BaseMultiplicity m);  // "0", "1", ">=2"

struct FixedComponentAnalysis {
  Int minus_k_dot_c0;     // -K.C0 = -(n-2)
  Int residual_dot_c0;    // (-2K - C0).C0 = -(n-4)
  BaseMultiplicity multiplicity;  // of C0 in the base locus of |-2K|
  bool smooth_k3_cover_possible;  // multiplicity <= 1
};

FixedComponentAnalysis fixed_component_analysis(const Int& n);

struct K3Class {
  Int self_intersection;
  bool nef_and_big = true;
};

// h0(L) = 2 + L^2/2 for nef and big L on a K3 surface.
Int k3_riemann_roch(const K3Class& l);

// (theta^* M)^2 = deg(theta) * M^2.
Int pullback_self_intersection(const Int& m_sq, const Int& cover_degree);

// Arithmetic genus 1 + C^2/2 of an irreducible curve on a K3 surface.
Int adjunction_genus_on_k3(const Int& c_sq);

struct ContractionDescriptor {
  int mori_type = 1;  // 1..8
  bool anticanonical_is_fiber_pullback = true;
  bool fibration_base_is_p1 = true;
};

struct ContractionVerdict {
  bool allowed = false;
  std::string reason;
};

std::string mori_type_description(int mori_type);
ContractionVerdict classify_contraction(const ContractionDescriptor& d);

}  // namespace k3cone

#endif
