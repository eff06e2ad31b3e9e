#include "k3cone/surface.hpp"

#include "k3cone/error.hpp"

namespace k3cone {

Hirzebruch::Hirzebruch(Int n) : n_(std::move(n)) {
  if (sgn(n_) < 0)
    throw PreconditionError("Hirzebruch index n must be nonnegative, got " + n_.get_str());
}

IntMatrix Hirzebruch::gram() const {
  return IntMatrix::from_rows({{-n_, 1}, {1, 0}});
}

Int Hirzebruch::intersect(const HirzebruchClass& x, const HirzebruchClass& y) const {
  return -n_ * x.a * y.a + x.a * y.b + x.b * y.a;
}

std::string to_string(BaseMultiplicity m) {
  switch (m) {
  case BaseMultiplicity::Zero: return "0";
  case BaseMultiplicity::One: return "1";
  case BaseMultiplicity::AtLeastTwo: return ">=2";
  }
  return "?";
}

FixedComponentAnalysis fixed_component_analysis(const Int& n) {
  const Hirzebruch f(n);
  const HirzebruchClass c0 = f.negative_section();
  const HirzebruchClass k2 = {2 * f.anticanonical().a, 2 * f.anticanonical().b};
  FixedComponentAnalysis out;
  out.minus_k_dot_c0 = f.intersect(f.anticanonical(), c0);
  out.residual_dot_c0 = f.intersect({k2.a - 1, k2.b}, c0);
  // C0 is a fixed component of |-2K| once -K.C0 < 0, and again of the
  // residual system once that is also negative on C0.
  if (sgn(out.minus_k_dot_c0) < 0 && sgn(out.residual_dot_c0) < 0)
    out.multiplicity = BaseMultiplicity::AtLeastTwo;
  else if (sgn(out.minus_k_dot_c0) < 0)
    out.multiplicity = BaseMultiplicity::One;
  else
    out.multiplicity = BaseMultiplicity::Zero;
  out.smooth_k3_cover_possible = out.multiplicity != BaseMultiplicity::AtLeastTwo;
  return out;
}

Int k3_riemann_roch(const K3Class& l) {
  if (!l.nef_and_big)
    throw PreconditionError("Riemann-Roch count needs a nef and big class");
  if (mpz_odd_p(l.self_intersection.get_mpz_t()))
    throw PreconditionError("L^2 = " + l.self_intersection.get_str() + " is odd; K3 lattices are even");
  if (sgn(l.self_intersection) <= 0)
    throw PreconditionError("a nef and big class has L^2 > 0, got " + l.self_intersection.get_str());
  return 2 + l.self_intersection / 2;
}

Int pullback_self_intersection(const Int& m_sq, const Int& cover_degree) {
  if (sgn(cover_degree) <= 0)
    throw PreconditionError("cover degree must be positive, got " + cover_degree.get_str());
  return cover_degree * m_sq;
}

Int adjunction_genus_on_k3(const Int& c_sq) {
  if (mpz_odd_p(c_sq.get_mpz_t()))
    throw PreconditionError("C^2 = " + c_sq.get_str() + " is odd; K3 lattices are even");
  if (c_sq < -2)
    throw PreconditionError("C^2 = " + c_sq.get_str() + " < -2 is not the class of an irreducible curve");
  return 1 + c_sq / 2;
}

std::string mori_type_description(int t) {
  switch (t) {
  case 1: return "blowup of a smooth curve";
  case 2: return "blowup of a smooth point";
  case 3: return "blowup of an ordinary double point";
  case 4: return "blowup of a cA1 point x^2+y^2+z^2+w^3=0";
  case 5: return "contraction of a plane with normal bundle O(-2) to a quotient point";
  case 6: return "conic bundle over a surface";
  case 7: return "del Pezzo fibration over a curve";
  case 8: return "Fano manifold (contraction to a point)";
  default: throw PreconditionError("Mori type must be in 1..8, got " + std::to_string(t));
  }
}

ContractionVerdict classify_contraction(const ContractionDescriptor& d) {
  mori_type_description(d.mori_type);
  if (!d.anticanonical_is_fiber_pullback || !d.fibration_base_is_p1)
    throw PreconditionError("the decision table assumes -K_Y = f*O(1) for a K3 fibration f over P^1");
  switch (d.mori_type) {
  case 1:
    return {true, "allowed: blowup of a smooth curve"};
  case 6:
    return {true, "allowed: fibration with plane conics as fibers (conic bundle)"};
  case 2:
  case 3:
  case 4:
  case 5:
    return {false,
            "excluded: f restricted to the exceptional divisor E is a map from a surface to a curve that does "
            "not contract any curves"};
  case 7:
    return {false, "excluded: same divisor argument, replacing E by a fiber of the del Pezzo fibration"};
  default:
    return {false, "excluded: -K_Y = f*O(1) is pulled back from P^1, so -K_Y is not ample"};
  }
}

}  // namespace k3cone
