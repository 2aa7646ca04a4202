#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsw/contact.hpp"
#include "lsw/deform.hpp"

namespace lsw {

// Worked examples with their expected verdicts attached; the gallery doubles
// as the integration-test fixture set.
struct GalleryItem {
  std::string name;
  int m = 1;
  std::vector<Poly> ideal_gens;       // chart ring, empty for family items
  std::vector<Poly> parametrization;  // u-ring, or (u,t) for families
  bool is_family = false;
  std::optional<Poly> quadric;  // generator of a quadric-flow family (2m vars)

  std::string expected_classification;  // classify verdict, when applicable
  bool expected_smooth_at_origin = false;
  bool expected_torsion_nonzero = false;  // at some order <= 8
  bool expected_weight_obstructed = false;
};

// Known names: legendrian-line, twisted-cubic-cone, cusp-curve,
// cusp-conormal-lift, rotating-line-family, quadric-flow-family.
GalleryItem gallery(const std::string& name);
std::vector<std::string> gallery_names();

// quadric-flow-family with a custom quadric q in the 2m symplectic variables
// (m = 2). The flow of v^q must be polynomial, i.e. the matrix of
// omega_dagger(q) nilpotent; otherwise the truncated family would not be
// exactly Legendrian and the construction is rejected.
GalleryItem gallery_quadric_flow(const Poly& q);

// Legendrian lift of the plane front (x(t), y(t)): requires the slope
// p = y'/x' to be polynomial; returns (x, -p/2, -y + x p/2), which pulls
// theta back to zero.
LegendrianParam legendrian_lift(const Poly& x_of_t, const Poly& y_of_t);

}  // namespace lsw
