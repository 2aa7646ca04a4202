#include <doctest.h>

#include "lsw/contact.hpp"
#include "lsw/ideal_ops.hpp"
#include "lsw/poly_io.hpp"
#include "support/rng.hpp"

using namespace lsw;
using lsw::testing::Rng;

namespace {

Poly P(const std::string& s, const VarTable& v) { return parse_poly(s, v); }

Ideal ideal(const std::vector<std::string>& gens, int nvars) {
  const VarTable v = VarTable::x(nvars);
  std::vector<Poly> ps;
  for (const auto& s : gens) ps.push_back(parse_poly(s, v));
  return Ideal(std::move(ps), nvars);
}

VectorField VF(const std::vector<std::string>& comps, const VarTable& v) {
  std::vector<Poly> ps;
  for (const auto& s : comps) ps.push_back(parse_poly(s, v));
  return VectorField(std::move(ps));
}

LegendrianParam curve(int m, const std::vector<std::string>& comps) {
  const VarTable u = VarTable::u(m);
  std::vector<Poly> ps;
  for (const auto& s : comps) ps.push_back(parse_poly(s, u));
  return LegendrianParam(m, std::move(ps));
}

}  // namespace

TEST_SUITE("contact") {

TEST_CASE("hamiltonian field examples") {
  const ContactChart c1(1);
  const VarTable x3 = VarTable::x(3);

  CHECK(hamiltonian_field(P("x3", x3), c1) ==
        VF({"-1/2*x1", "-1/2*x2", "-x3"}, x3));
  CHECK(hamiltonian_field(Poly(3), c1).is_zero());
  CHECK(hamiltonian_field(P("-x1^2", x3), c1) == VF({"0", "x1", "0"}, x3));
}

TEST_CASE("minus twice the x_{2m+1} field restricts to the radial field") {
  for (int m = 1; m <= 3; ++m) {
    const ContactChart chart(m);
    const int n = chart.nvars();
    const VectorField v = hamiltonian_field(Poly::variable(n, n - 1), chart);
    const VectorField r = restrict_to_hyperplane(v * Q(-2), n - 1);
    CHECK(r == radial_field(n - 1));
  }
}

TEST_CASE("hamiltonian field identities hold for specific f") {
  const ContactChart c1(1);
  const VarTable x3 = VarTable::x(3);

  CHECK(verify_vf_identities(P("x1*x2", x3), c1).all());

  const Poly f = P("x3", x3);
  CHECK(verify_vf_identities(f, c1).all());
  // here df/dx3 = 1, so Lie_{v^f} theta = -theta on the nose
  CHECK(lie_derivative(hamiltonian_field(f, c1), c1.theta()) == c1.theta() * Q(-1));
}

TEST_CASE("hamiltonian field identities hold for random f") {
  Rng rng(0xc0417ac7);
  for (int it = 0; it < 16; ++it) {
    const int m = 1 + it % 2;
    const ContactChart chart(m);
    const Poly f = rng.poly(chart.nvars(), 4, 5);
    const VfIdentityReport rep = verify_vf_identities(f, chart);
    CHECK(rep.theta_of_vf);
    CHECK(rep.vf_of_f);
    CHECK(rep.lie_theta);
    CHECK(rep.dtheta_pairing);
  }
}

TEST_CASE("f to v^f is linear") {
  Rng rng(0xc0417ac8);
  const ContactChart chart(2);
  for (int it = 0; it < 20; ++it) {
    const Poly f = rng.poly(5, 3, 4);
    const Poly g = rng.poly(5, 3, 4);
    const Q c = rng.coeff();
    CHECK(hamiltonian_field(f + g, chart) ==
          hamiltonian_field(f, chart) + hamiltonian_field(g, chart));
    CHECK(hamiltonian_field(f * c, chart) == hamiltonian_field(f, chart) * c);
  }
}

TEST_CASE("graph hypersurfaces tangent to D at 0 give fields vanishing at 0") {
  const VarTable x3 = VarTable::x(3);
  const ContactChart c1(1);
  for (const char* h : {"x1^3", "x1^4", "x1^2*x2", "x1^3 - 2*x2^3"}) {
    const Poly f = P(h, x3) - P("x3", x3);
    const VectorField v = hamiltonian_field(f, c1);
    for (int i = 0; i < 3; ++i) CHECK(is_zero(v.component(i).constant_term()));
  }
}

TEST_CASE("tangency of fields to ideals") {
  const ContactChart c1(1);
  const VarTable x3 = VarTable::x(3);

  // v^{x3} is tangent to the x1-axis
  CHECK(is_tangent(hamiltonian_field(P("x3", x3), c1), ideal({"x2", "x3"}, 3)));

  VectorField d1(3);
  d1.component(0) = Poly::constant(3, 1);
  CHECK(!is_tangent(d1, ideal({"x1"}, 3)));

  // the cusp curve lies in {f = 0}, so v^f must be tangent to it
  const Ideal cusp = ideal({"x2^2 - x1^3", "5*x3 + x1*x2"}, 3);
  CHECK(is_tangent(hamiltonian_field(P("5*x3 + x1*x2", x3), c1), cusp));
}

TEST_CASE("parametric legendrian test") {
  CHECK(legendrian_parametric(curve(1, {"u1^2", "u1^3", "-1/5*u1^5"})));
  CHECK(legendrian_parametric(curve(1, {"u1", "0", "0"})));
  CHECK(!legendrian_parametric(curve(1, {"u1", "0", "u1"})));
}

TEST_CASE("implicit legendrian test") {
  const ContactChart c1(1);
  CHECK(legendrian_implicit(ideal({"x2", "x3"}, 3), c1) == LegendrianVerdict::Legendrian);
  CHECK(legendrian_implicit(ideal({"x2^2 - x1^3", "5*x3 + x1*x2"}, 3), c1) ==
        LegendrianVerdict::Legendrian);
  CHECK(legendrian_implicit(ideal({"x2", "x3 - x1"}, 3), c1) ==
        LegendrianVerdict::NotLegendrian);
  CHECK(legendrian_implicit(ideal({"x3"}, 3), c1) == LegendrianVerdict::WrongDimension);
  CHECK_THROWS_AS(legendrian_implicit(ideal({"x1", "x1 - 1"}, 3), c1), std::invalid_argument);
}

TEST_CASE("parametric and implicit tests agree through implicitization") {
  const ContactChart c1(1);
  const LegendrianParam cusp = curve(1, {"u1^2", "u1^3", "-1/5*u1^5"});
  REQUIRE(legendrian_parametric(cusp));
  const Ideal I = implicitize(cusp);
  CHECK(ideal_equal(I, ideal({"x2^2 - x1^3", "5*x3 + x1*x2"}, 3)));
  CHECK(legendrian_implicit(I, c1) == LegendrianVerdict::Legendrian);
}

TEST_CASE("contains_D0") {
  const ContactChart c1(1);
  CHECK(contains_D0(ideal({"x2^2 - x1^3", "5*x3 + x1*x2"}, 3), c1));
  CHECK(!contains_D0(ideal({"x1 + x3", "x2^2"}, 3), c1));
  CHECK(contains_D0(ideal({"x1*x2", "x2^2"}, 3), c1));
  CHECK_THROWS_AS(contains_D0(ideal({"x1 - 1"}, 3), c1), std::invalid_argument);
}

TEST_CASE("smoothness at the origin") {
  CHECK(smooth_at_origin(ideal({"x2", "x3"}, 3)));
  CHECK(!smooth_at_origin(ideal({"x2^2 - x1^3", "5*x3 + x1*x2"}, 3)));
  // smooth lift of the cusp front
  CHECK(smooth_at_origin(ideal({"9*x1 - 16*x2^2", "27*x3 - 16*x2^3"}, 3)));
}

}  // TEST_SUITE
