#pragma once

#include <optional>
#include <vector>

#include "lsw/contact.hpp"

namespace lsw {

// Polynomial family of Legendrian parametrizations: n = 2m+1 components in
// the ring (u_1..u_m, t), t last.
class FamilyParam {
 public:
  FamilyParam(int m, std::vector<Poly> components);
  int m() const { return m_; }
  int nvars() const { return 2 * m_ + 1; }
  int tvar() const { return m_; }  // index of t inside the parameter ring
  const std::vector<Poly>& components() const { return comp_; }

  // (Phi_1, ..., Phi_n, t): substitution images for polynomials in (x, t).
  std::vector<Poly> images_with_t() const;

 private:
  int m_;
  std::vector<Poly> comp_;
};

// The u-pullback of theta along Phi(., t) vanishes identically in (u, t);
// every member of the family is Legendrian.
bool family_check(const FamilyParam& F);

// h(u,t) = theta_{Phi(u,t)}(dPhi/dt), the theta-image of the infinitesimal
// deformation. Requires family_check.
Poly deformation_function(const FamilyParam& F);

// A contact Hamiltonian b(x,t) whose restriction to the family graph equals
// the deformation function.
struct HamiltonianLift {
  Poly b;  // in (x_1..x_n, t)
  int x_degree = 0;
  int t_degree = 0;
};

// Finds b with b(Phi(u,t), t) = h(u,t) identically, by exact linear algebra
// on coefficients with x-degree <= x_degree and t-degree <= t_degree
// (defaults to the t-degree of h). nullopt means infeasible at this degree:
// raise the bound. This finite-degree search replaces the Stein-theoretic
// extension step of the analytic argument.
std::optional<HamiltonianLift> hamiltonian_lift(const FamilyParam& F, int x_degree,
                                                int t_degree = -1);

// The lifted field matches the deformation velocity modulo the tangent sheaf:
// all (m+1)-minors of [dPhi/du_1 .. dPhi/du_m | v^b(Phi) - dPhi/dt] vanish.
bool verify_lift_tangency(const FamilyParam& F, const HamiltonianLift& L);

struct TrivializationResult {
  std::vector<Poly> flow;  // n components in (x, t), a t-jet of order t_order
  Poly contact_factor;     // g(x,t) with flow^*theta = g theta mod t^{order+1}
  std::vector<Poly> sigma;  // reparametrization jet in (u, t), sigma(u,0) = u
  int t_order = 0;
  bool flow_ok = false;     // dPsi/dt = v^b(Psi,t) mod t^order
  bool contact_ok = false;  // each Psi_t is a contactomorphism jet
  bool reparam_ok = false;  // Psi_t(Phi(u,0)) = Phi(sigma(u,t), t) mod t^{order+1}
  int obstructed_order = -1;  // first t-order where the reparametrization solve failed
  bool x_cap_hit = false;     // Picard truncated in x; checks restricted accordingly
};

// Integrates the time-dependent flow of v^{b_t} as a t-jet (Picard iteration
// with an x-degree cap) and verifies the trivialization properties.
TrivializationResult trivialize_jet(const FamilyParam& F, const HamiltonianLift& L,
                                    int t_order, int x_degree_cap = 16);

}  // namespace lsw
