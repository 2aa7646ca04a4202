#pragma once

#include <optional>

#include "lsw/contact.hpp"
#include "lsw/jets.hpp"

namespace lsw {

// The restriction of 2 v^{h - x_{2m+1}} to the graph hypersurface
// x_{2m+1} = h, written in the intrinsic coordinates z_1..z_2m:
//   sum_k (dh/dz_{m+k} + z_k) d/dz_k + (-dh/dz_k + z_{m+k}) d/dz_{m+k}.
// h must have no constant or linear part; for h with a quadratic part q the
// linear part of the field is radial + omega_dagger(q).
VectorField restricted_field(const Poly& h, const ContactChart& chart);

// Coordinate-change jet w = z + O(2) conjugating V to its scalar linear part
// c*Id modulo degree N+1, solved degree by degree; eigenvalue resonances
// c = d*c are impossible for d >= 2, so every correction is unique. The
// result is re-verified, never trusted: V(w_j) = c w_j mod deg N+1.
CoordChangeJet poincare_linearize(const VectorField& V, int order);

struct HyperplaneNormalization {
  CoordChangeJet phi;  // x -> z: intrinsic coordinates of the graph germ
  Poly g;              // unit jet with phi^*(theta|_H) = g * theta|_X
  bool exact = false;  // residual is identically zero as a polynomial form
  // smallest degree of a residual term, counting coefficient degree + 1 for
  // the dx; success means residual_order > order (no residual at jet scale)
  int residual_order = 0;
  int order = 0;
  bool ok() const { return exact || residual_order > order; }
};

// Intrinsic-coordinate map from X = {x_{2m+1}=0} to H = {x_{2m+1}=h(z)}
// through the Poincare linearization of the restricted field, plus the unit
// jet g making phi^*(theta|_H) = g * theta|_X hold modulo degree order+1.
// The ambient contactomorphism asserted by the relative Darboux theorem is
// not constructed; this verifies its hypothesis at jet level. h must lie in
// m_0^3 (a quadratic part belongs to the classification pipeline instead).
HyperplaneNormalization hyperplane_normalize(const Poly& h, const ContactChart& chart,
                                             int order);

struct ContactJetCheck {
  bool ok = false;
  Poly g;  // conformal factor solved from the dx_{2m+1} coefficient
};

// psi^* theta = g * theta modulo degree order+1 for some unit jet g.
ContactJetCheck verify_contact_jet(const CoordChangeJet& psi, const ContactChart& chart,
                                   int order);

}  // namespace lsw
