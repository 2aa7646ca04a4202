#pragma once

#include <vector>

#include "lsw/forms.hpp"
#include "lsw/ideal.hpp"

namespace lsw {

// theta = sum_{i=1..m} (x_{m+i} dx_i - x_i dx_{m+i}) - dx_{2m+1}, built in an
// ambient ring with at least 2m+1 variables (extra variables stay inert).
DiffForm standard_theta(int m, int ambient_nvars);
DiffForm standard_dtheta(int m, int ambient_nvars);

// The standard contact chart on C^{2m+1}. The contact distribution D is
// represented implicitly as ker theta.
class ContactChart {
 public:
  explicit ContactChart(int m);
  int m() const { return m_; }
  int nvars() const { return 2 * m_ + 1; }
  const DiffForm& theta() const { return theta_; }
  const DiffForm& dtheta() const { return dtheta_; }

 private:
  int m_;
  DiffForm theta_;
  DiffForm dtheta_;
};

// The contact Hamiltonian field v^f, with the exact factor 1/2 of the
// defining display; every identity below depends on it.
VectorField hamiltonian_field(const Poly& f, const ContactChart& chart);

// Same field for b(x_1..x_n, t): derivatives are taken in the x-slots and t
// rides along as a parameter (the returned field has a zero t-component).
VectorField hamiltonian_field_param(const Poly& b, const ContactChart& chart);

struct VfIdentityReport {
  bool theta_of_vf = false;   // theta(v^f) = f
  bool vf_of_f = false;       // v^f(f) = -f df/dx_{2m+1}
  bool lie_theta = false;     // Lie_{v^f} theta = -(df/dx_{2m+1}) theta
  bool dtheta_pairing = false;  // dtheta(v^f, w) = -(df/dx_{2m+1}) theta(w) - df(w)
  bool all() const { return theta_of_vf && vf_of_f && lie_theta && dtheta_pairing; }
};

// Checks the four identities as exact polynomial identities; the pairing
// identity is verified against a fully symbolic vector w in an extended ring.
VfIdentityReport verify_vf_identities(const Poly& f, const ContactChart& chart);

// v is tangent to V(I): v(g) in I for every generator (generator-complete by
// the Leibniz rule).
bool is_tangent(const VectorField& v, const Ideal& I);

// Parametrized germ: n = 2m+1 polynomial components in u_1..u_m.
class LegendrianParam {
 public:
  LegendrianParam(int m, std::vector<Poly> components);
  int m() const { return m_; }
  int nvars() const { return 2 * m_ + 1; }
  const std::vector<Poly>& components() const { return comp_; }

 private:
  int m_;
  std::vector<Poly> comp_;
};

// True iff the pullback of theta is the zero 1-form in the du's; this is
// the Legendrian condition for the parametrized germ.
bool legendrian_parametric(const LegendrianParam& phi);

enum class LegendrianVerdict {
  Legendrian,
  NotLegendrian,
  WrongDimension,
  // Jacobian never exhibits generic rank m+1 modulo sqrt(I); the ideal needs
  // to be re-presented (radical and equidimensional) before the test means
  // anything.
  NoSmoothWitness,
};

const char* to_string(LegendrianVerdict v);

// Implicit test: dimension must equal m, every (m+2)-minor of the Jacobian
// stacked with the theta coefficient row must lie in sqrt(I), and some
// (m+1)-minor of the Jacobian alone must not.
LegendrianVerdict legendrian_implicit(const Ideal& I, const ContactChart& chart);

// True iff the span of the generators' linear parts is contained in the span
// of x_{2m+1}, so the Zariski tangent space at 0 contains D_0.
bool contains_D0(const Ideal& I, const ContactChart& chart);

// Elimination kernel of the parametrization map; the implicit ideal in the
// chart ring.
Ideal implicitize(const LegendrianParam& phi, int degree_cap = kDefaultDegreeCap);

// Jacobian criterion at the origin: rank Jac(0) == nvars - dim(I). All
// generators must vanish at 0.
bool smooth_at_origin(const Ideal& I);

// sum x_i d/dx_i over all variables of the ring.
VectorField radial_field(int nvars);

// Restriction of a field tangent to {x_var = 0} down to that hyperplane.
VectorField restrict_to_hyperplane(const VectorField& v, int var);

// Determinant of a polynomial matrix (Laplace expansion; sizes here are tiny).
Poly poly_det(const std::vector<std::vector<Poly>>& mat);

}  // namespace lsw
