#include <doctest.h>

#include "lsw/cone.hpp"
#include "lsw/normalform.hpp"
#include "lsw/poly_io.hpp"
#include "support/rng.hpp"

using namespace lsw;
using lsw::testing::Rng;

namespace {

Poly P(const std::string& s, const VarTable& v) { return parse_poly(s, v); }

CoordChangeJet jet(const std::vector<std::string>& comps, const VarTable& v, int order) {
  std::vector<Poly> ps;
  for (const auto& s : comps) ps.push_back(parse_poly(s, v));
  return CoordChangeJet(std::move(ps), order);
}

}  // namespace

TEST_SUITE("normalform") {

TEST_CASE("jet composition and inversion round-trip") {
  Rng rng(0x3e7001);
  const int order = 6;
  for (int it = 0; it < 15; ++it) {
    const int n = 2 + it % 2;
    std::vector<Poly> comps;
    for (int i = 0; i < n; ++i) {
      Poly c = Poly::variable(n, i);
      // tangent-to-identity jets are always invertible
      Poly tail = rng.poly(n, order, 3);
      tail -= tail.truncated(1);
      comps.push_back(c + tail);
    }
    const CoordChangeJet phi(comps, order);
    const CoordChangeJet inv = phi.inverse();
    CHECK(phi.compose(inv) == CoordChangeJet::identity(n, order));
    CHECK(inv.compose(phi) == CoordChangeJet::identity(n, order));
  }
}

TEST_CASE("jet validation") {
  const VarTable x2 = VarTable::x(2);
  CHECK_THROWS_AS(jet({"x1 + x2", "x1 + x2"}, x2, 4), std::invalid_argument);  // singular
  CHECK_THROWS_AS(jet({"x1 + 1", "x2"}, x2, 4), std::invalid_argument);        // moves 0
  const CoordChangeJet a = jet({"x1 + x2^2", "x2"}, x2, 4);
  const CoordChangeJet b = jet({"x1", "x2 + x1^2"}, x2, 5);
  CHECK_THROWS_AS(a.compose(b), std::invalid_argument);  // order mismatch
}

TEST_CASE("restricted field on graph hypersurfaces") {
  const ContactChart c1(1);
  const VarTable z2 = VarTable::x(2);

  CHECK(restricted_field(P("x1^3", z2), c1) ==
        VectorField(std::vector<Poly>{P("x1", z2), P("x2 - 3*x1^2", z2)}));

  CHECK(restricted_field(Poly(2), c1) == radial_field(2));

  // quadratic graphs split as radial + omega_dagger(q)
  const ContactChart c2(2);
  const VarTable z4 = VarTable::x(4);
  Rng rng(0x3e7002);
  for (int it = 0; it < 8; ++it) {
    Poly q(4);
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j)
        q += Poly::variable(4, i) * Poly::variable(4, j) * rng.coeff();
    CHECK(restricted_field(q, c2) == radial_field(4) + omega_dagger(q, SymplecticSpace(2)));
  }

  CHECK_THROWS_AS(restricted_field(P("x1", z2), c1), std::invalid_argument);
}

TEST_CASE("restricted field of a cubic-or-higher graph has radial linear part") {
  const ContactChart c1(1);
  const VarTable z2 = VarTable::x(2);
  for (const char* h : {"x1^3", "x1^4", "x1^2*x2", "x1^3 - 2*x2^4"}) {
    const VectorField v = restricted_field(P(h, z2), c1);
    for (int i = 0; i < 2; ++i)
      CHECK(v.component(i).homogeneous_part(1) == Poly::variable(2, i));
  }
}

TEST_CASE("poincare linearization") {
  const VarTable z2 = VarTable::x(2);
  const VectorField v(std::vector<Poly>{P("x1", z2), P("x2 - 3*x1^2", z2)});
  const CoordChangeJet w = poincare_linearize(v, 6);
  CHECK(w.components()[0] == P("x1", z2));
  CHECK(w.components()[1] == P("x2 + 3*x1^2", z2));

  // conjugation really is linear, checked through the pushforward
  const VectorField pushed = pushforward(v, w);
  CHECK(pushed == VectorField(std::vector<Poly>{P("x1", z2), P("x2", z2)}));

  // already-linear fields linearize by the identity
  const VectorField lin(std::vector<Poly>{P("2*x1", z2), P("2*x2", z2)});
  CHECK(poincare_linearize(lin, 5) == CoordChangeJet::identity(2, 5));

  // a field whose nonlinearity never stops: solved degree by degree
  const VectorField vv(std::vector<Poly>{P("x1", z2), P("x2 + x1*x2", z2)});
  const CoordChangeJet w2 = poincare_linearize(vv, 8);
  const VectorField pushed2 = pushforward(vv, w2);
  CHECK(pushed2.component(0) == P("x1", z2));
  CHECK(pushed2.component(1) == P("x2", z2));
}

TEST_CASE("poincare linearization rejects non-scalar linear parts") {
  const VarTable z2 = VarTable::x(2);
  CHECK_THROWS_AS(poincare_linearize(
                      VectorField(std::vector<Poly>{P("x1", z2), P("2*x2", z2)}), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(poincare_linearize(
                      VectorField(std::vector<Poly>{P("x1 + x2", z2), P("x2", z2)}), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(poincare_linearize(
                      VectorField(std::vector<Poly>{P("x1^2", z2), P("x2^2", z2)}), 4),
                  std::invalid_argument);
}

TEST_CASE("hyperplane normalization of x3 = x1^3") {
  const ContactChart c1(1);
  const VarTable z2 = VarTable::x(2);
  const HyperplaneNormalization nf = hyperplane_normalize(P("x1^3", z2), c1, 6);
  CHECK(nf.phi.components()[0] == P("x1", z2));
  CHECK(nf.phi.components()[1] == P("x2 - 3*x1^2", z2));
  CHECK(nf.g == Poly::constant(2, 1));
  CHECK(nf.exact);
  CHECK(nf.ok());
}

TEST_CASE("hyperplane normalization of the flat graph is the identity") {
  const ContactChart c1(1);
  const HyperplaneNormalization nf = hyperplane_normalize(Poly(2), c1, 5);
  CHECK(nf.phi == CoordChangeJet::identity(2, 5));
  CHECK(nf.g == Poly::constant(2, 1));
  CHECK(nf.exact);
}

TEST_CASE("hyperplane normalization at order 8 for quartic graphs") {
  const ContactChart c1(1);
  const VarTable z2 = VarTable::x(2);
  for (const char* h : {"x1^4", "x1^2*x2"}) {
    const HyperplaneNormalization nf = hyperplane_normalize(P(h, z2), c1, 8);
    CHECK(nf.ok());
    CHECK(!is_zero(nf.g.constant_term()));
    if (!nf.exact) CHECK(nf.residual_order > 8);
  }
}

TEST_CASE("hyperplane normalization rejects quadratic parts") {
  const ContactChart c1(1);
  const VarTable z2 = VarTable::x(2);
  CHECK_THROWS_AS(hyperplane_normalize(P("x1^2", z2), c1, 6), std::invalid_argument);
  CHECK_THROWS_AS(hyperplane_normalize(P("x1^2 + x1^3", z2), c1, 6), std::invalid_argument);
}

TEST_CASE("contact jet verification") {
  const ContactChart c1(1);
  const VarTable x3 = VarTable::x(3);

  const ContactJetCheck squeeze = verify_contact_jet(jet({"2*x1", "1/2*x2", "x3"}, x3, 5), c1, 5);
  CHECK(squeeze.ok);
  CHECK(squeeze.g == Poly::constant(3, 1));

  CHECK(verify_contact_jet(CoordChangeJet::identity(3, 4), c1, 4).ok);

  const ContactJetCheck scale = verify_contact_jet(jet({"2*x1", "3*x2", "6*x3"}, x3, 5), c1, 5);
  CHECK(scale.ok);
  CHECK(scale.g == Poly::constant(3, 6));

  // shearing x3 by x1 bends theta off its conformal class
  CHECK(!verify_contact_jet(jet({"x1", "x2", "x3 + x1"}, x3, 5), c1, 5).ok);
}

TEST_CASE("contact jets compose") {
  Rng rng(0x3e7003);
  const ContactChart c1(1);
  const VarTable x3 = VarTable::x(3);
  for (int it = 0; it < 20; ++it) {
    // random SL2 block extended by the identity on x3 preserves theta
    const int a = rng.uniform(-2, 2), b = rng.uniform(-2, 2), c = rng.uniform(-2, 2);
    auto sl2 = [&](int p, int q, int r) {
      // [[1,p],[0,1]] * [[1,0],[q,1]] * [[1,r],[0,1]]
      const int m00 = 1 + p * q;
      const int m01 = r + p * q * r + p;
      const int m10 = q;
      const int m11 = q * r + 1;
      std::vector<Poly> comps{
          Poly::variable(3, 0) * Q(m00) + Poly::variable(3, 1) * Q(m01),
          Poly::variable(3, 0) * Q(m10) + Poly::variable(3, 1) * Q(m11), Poly::variable(3, 2)};
      return CoordChangeJet(std::move(comps), 5);
    };
    const CoordChangeJet psi1 = sl2(a, b, c);
    const CoordChangeJet psi2 = sl2(c, a, b);
    REQUIRE(verify_contact_jet(psi1, c1, 5).ok);
    REQUIRE(verify_contact_jet(psi2, c1, 5).ok);
    CHECK(verify_contact_jet(psi1.compose(psi2), c1, 5).ok);
  }
}

}  // TEST_SUITE
