#include <doctest.h>

#include <algorithm>

#include "lsw/groebner.hpp"
#include "lsw/ideal_ops.hpp"
#include "lsw/poly_io.hpp"
#include "support/rng.hpp"
#include "support/vectorize.hpp"

using namespace lsw;
using lsw::testing::MonomialIndex;
using lsw::testing::Rng;

namespace {

const MonomialOrder kDrl = MonomialOrder::degrevlex();

Ideal ideal(const std::vector<std::string>& gens, int nvars) {
  const VarTable v = VarTable::x(nvars);
  std::vector<Poly> ps;
  for (const auto& s : gens) ps.push_back(parse_poly(s, v));
  return Ideal(std::move(ps), nvars);
}

// Bounded-degree membership by plain linear algebra: p in span of
// { x^a * g : deg(x^a * g) <= cap }.
bool brute_force_membership(const Poly& p, const Ideal& I, int cap) {
  MonomialIndex idx(p.nvars(), cap);
  EchelonBasis span(idx.size());
  for (const Poly& g : I.gens()) {
    for (const Monomial& m : idx.basis) {
      if (m.deg() + g.degree() > cap) continue;
      span.insert(idx.vec(Poly::monomial(m, 1) * g));
    }
  }
  return span.in_span(idx.vec(p));
}

}  // namespace

TEST_SUITE("gb") {

TEST_CASE("buchberger on simple ideals") {
  const VarTable x2 = VarTable::x(2);
  auto gb = Ideal({parse_poly("x1", x2), parse_poly("x1 + x2", x2)}, 2).groebner_basis();
  REQUIRE(gb.elements.size() == 2);
  CHECK(gb.elements[0] == parse_poly("x2", x2));
  CHECK(gb.elements[1] == parse_poly("x1", x2));

  auto unit = ideal({"x1", "x1 - 1"}, 2).groebner_basis();
  REQUIRE(unit.elements.size() == 1);
  CHECK(unit.elements[0] == Poly::constant(2, 1));
}

TEST_CASE("twisted cubic cone has a 3-element reduced basis") {
  const Ideal I = ideal({"x2^2 + 9*x1*x4", "3*x1*x3 + x2*x4", "x2*x3 - 3*x4^2"}, 4);
  const Basis& gb = I.groebner_basis();
  CHECK(gb.elements.size() == 3);
  const Poly key = parse_poly("x2^2 + 9*x1*x4", VarTable::x(4)).monic(kDrl);
  CHECK(std::count(gb.elements.begin(), gb.elements.end(), key) == 1);
  // mutual reduction: basis and generators present the same ideal
  CHECK(ideal_equal(I, Ideal(gb.elements, 4)));
}

TEST_CASE("groebner is canonical under generator shuffles") {
  const Ideal a = ideal({"x1^2 - x2", "x1*x2 - x3", "x2^2 - x1*x3"}, 3);
  const Ideal b = ideal({"x2^2 - x1*x3", "x1^2 - x2", "x1*x2 - x3"}, 3);
  CHECK(a.groebner_basis().elements == b.groebner_basis().elements);
  // repeated runs through fresh ideals are identical
  const Ideal c = ideal({"x1^2 - x2", "x1*x2 - x3", "x2^2 - x1*x3"}, 3);
  CHECK(a.groebner_basis().elements == c.groebner_basis().elements);
}

TEST_CASE("normal form is stable under ideal shifts") {
  Rng rng(0x6b01);
  const Ideal I = ideal({"x1^2 - x2", "x2*x3 - 1"}, 3);
  const Basis& gb = I.groebner_basis();
  for (int it = 0; it < 30; ++it) {
    const Poly p = rng.poly(3, 4, 4);
    Poly shifted = p;
    for (const Poly& g : I.gens()) shifted += rng.poly(3, 2, 2) * g;
    CHECK(normal_form(p, gb.elements, kDrl).remainder ==
          normal_form(shifted, gb.elements, kDrl).remainder);
  }
}

TEST_CASE("mora standard basis of the cusp curve") {
  const Ideal I = ideal({"x2^2 - x1^3", "5*x3 + x1*x2"}, 3);
  const Basis& sb = I.standard_basis();
  std::vector<Poly> initial_forms;
  for (const Poly& g : sb.elements) initial_forms.push_back(g.lowest_form());
  const Ideal in_ideal(initial_forms, 3);
  CHECK(ideal_equal(in_ideal, ideal({"x3", "x2^2"}, 3)));
}

TEST_CASE("standard basis of a homogeneous ideal stays inside the ideal") {
  const Ideal I = ideal({"x2^2 + 9*x1*x4", "3*x1*x3 + x2*x4", "x2*x3 - 3*x4^2"}, 4);
  const Basis& sb = I.standard_basis();
  for (const Poly& g : sb.elements) {
    CHECK(g.is_homogeneous());
    CHECK(membership(g, I));
  }
  CHECK(ideal_equal(Ideal(sb.elements, 4), I));
}

TEST_CASE("standard basis of a principal ideal") {
  const Ideal I = ideal({"x1"}, 3);
  const Basis& sb = I.standard_basis();
  REQUIRE(sb.elements.size() == 1);
  CHECK(sb.elements[0] == Poly::variable(3, 0));
}

TEST_CASE("membership basics") {
  CHECK(membership(parse_poly("x2^2", VarTable::x(3)), ideal({"x2"}, 3)));
  CHECK(!membership(parse_poly("x1", VarTable::x(3)), ideal({"x2", "x3"}, 3)));
}

TEST_CASE("membership certificate recombines") {
  const Ideal I = ideal({"x2^2 + 9*x1*x4", "3*x1*x3 + x2*x4", "x2*x3 - 3*x4^2"}, 4);
  const Poly p = parse_poly("x2^3 + 9*x1*x2*x4", VarTable::x(4));
  auto cert = membership_certificate(p, I);
  REQUIRE(cert.has_value());
  Poly recombined(4);
  for (size_t i = 0; i < cert->basis.size(); ++i) recombined += cert->cofactors[i] * cert->basis[i];
  CHECK(recombined == p);
}

TEST_CASE("membership agrees with brute-force linear algebra") {
  Rng rng(0x6b02);
  int members = 0;
  for (int it = 0; it < 60; ++it) {
    const int nv = rng.uniform(2, 3);
    std::vector<Poly> gens;
    const int ngens = rng.uniform(1, 3);
    for (int i = 0; i < ngens; ++i) gens.push_back(rng.nonzero_poly(nv, 3, 3));
    const Ideal I(gens, nv);
    Poly p = rng.poly(nv, 3, 3);
    if (it % 3 == 0) {
      // force a member
      p = Poly(nv);
      for (const Poly& g : gens) p += rng.poly(nv, 2, 2) * g;
    }
    if (membership(p, I)) {
      ++members;
      auto cert = membership_certificate(p, I);
      REQUIRE(cert.has_value());
      int cap = p.degree();
      for (size_t i = 0; i < cert->basis.size(); ++i)
        if (!cert->cofactors[i].is_zero())
          cap = std::max(cap, cert->cofactors[i].degree() + cert->basis[i].degree());
      // the certificate bounds the degree a brute-force search needs
      CHECK(brute_force_membership(p, Ideal(cert->basis, nv), cap));
    } else {
      CHECK(!brute_force_membership(p, I, p.degree() + 3));
    }
  }
  CHECK(members > 10);
}

TEST_CASE("radical membership") {
  CHECK(radical_membership(parse_poly("x2", VarTable::x(3)), ideal({"x2^2"}, 3)));
  CHECK(!radical_membership(parse_poly("x1", VarTable::x(3)), ideal({"x2^2"}, 3)));
  // x3^2 = (x3^2 + x2^4) - x2 * x2^3
  CHECK(radical_membership(parse_poly("x3", VarTable::x(3)), ideal({"x3^2 + x2^4", "x2^3"}, 3)));
}

TEST_CASE("low powers witness radical membership") {
  Rng rng(0x6b03);
  for (int it = 0; it < 40; ++it) {
    const int nv = rng.uniform(2, 3);
    std::vector<Poly> gens;
    for (int i = 0; i < rng.uniform(1, 2); ++i) gens.push_back(rng.nonzero_poly(nv, 3, 2));
    const Ideal I(gens, nv);
    const Poly p = rng.nonzero_poly(nv, 2, 2);
    for (int k = 1; k <= 4; ++k) {
      if (membership(p.pow(k), I)) {
        CHECK(radical_membership(p, I));
        break;
      }
    }
  }
}

TEST_CASE("dimension") {
  CHECK(dimension(ideal({"x3", "x2^2 - x1^3"}, 3)) == 1);
  CHECK(dimension(Ideal({}, 4)) == 4);
  CHECK(dimension(ideal({"x2^2 + 9*x1*x4", "3*x1*x3 + x2*x4", "x2*x3 - 3*x4^2"}, 4)) == 2);
  CHECK_THROWS_AS(dimension(ideal({"x1", "x1 - 1"}, 2)), std::invalid_argument);
}

TEST_CASE("quotients and saturation") {
  const Ideal I = ideal({"x1^2*x2"}, 3);
  const Ideal J = ideal({"x1"}, 3);
  CHECK(ideal_equal(quotient_saturate(I, J), ideal({"x2"}, 3)));

  const Ideal K = ideal({"x1*x2 - x3^2", "x2^2"}, 3);
  CHECK(ideal_equal(quotient_saturate(K, ideal({"1"}, 3)), K));

  // the double line is already saturated at the origin
  const Ideal L = ideal({"x3", "x2^2"}, 3);
  const Ideal M = ideal({"x1", "x2", "x3"}, 3);
  CHECK(ideal_equal(quotient_saturate(L, M), L));
  CHECK(ideal_equal(quotient(quotient(L, M), M), L));
}

TEST_CASE("zero-dimensional radical test") {
  const VarTable x1 = VarTable::x(1);
  CHECK(!zero_dim_is_radical(Ideal({parse_poly("x1^2", x1)}, 1)));
  CHECK(zero_dim_is_radical(Ideal({parse_poly("x1^2 - 1", x1)}, 1)));

  // V = {(0,0), (1,1), (-1,1)}; the quotient is Q[x1]/(x1^3 - x1), reduced
  CHECK(zero_dim_is_radical(ideal({"x1^2 - x2", "x2^2 - x2", "x1*x2 - x1"}, 2)));
  // fat point
  CHECK(!zero_dim_is_radical(ideal({"x1^2", "x2"}, 2)));

  CHECK_THROWS_AS(zero_dim_is_radical(ideal({"x1"}, 2)), std::invalid_argument);
}

TEST_CASE("minimal univariate polynomials") {
  const Ideal I = ideal({"x1^2 - x2", "x2^2 - x2", "x1*x2 - x1"}, 2);
  const VarTable x2v = VarTable::x(2);
  CHECK(minimal_univariate(I, 0) == parse_poly("x1^3 - x1", VarTable::x(1)));
  CHECK(minimal_univariate(I, 1) == parse_poly("x1^2 - x1", VarTable::x(1)));
}

TEST_CASE("gcd and squarefree parts") {
  const VarTable x3 = VarTable::x(3);
  CHECK(poly_gcd(parse_poly("x1*x2", x3), parse_poly("x2", x3)) == parse_poly("x2", x3));
  CHECK(poly_gcd(parse_poly("x1^2 - x2^2", x3), parse_poly("x1 + x2", x3)) ==
        parse_poly("x1 + x2", x3));
  CHECK(squarefree(parse_poly("x1*x2", x3)));
  CHECK(!squarefree(parse_poly("x1^2*x2", x3)));
  CHECK(squarefree_part(parse_poly("x1^2*x2", x3)) == parse_poly("x1*x2", x3));
  CHECK(squarefree(parse_poly("x2^2 + 9*x1*x4", VarTable::x(4))));
}

TEST_CASE("elimination and kernels") {
  const VarTable u1 = VarTable::u(1);
  const Ideal K = kernel_ideal(std::vector<Poly>{parse_poly("u1^2", u1), parse_poly("u1^3", u1)});
  REQUIRE(K.gens().size() == 1);
  CHECK(K.gens()[0] == parse_poly("x1^3 - x2^2", VarTable::x(2)));
}

TEST_CASE("degree cap fails loudly") {
  // x1 - x2^2 under an elimination order lets degrees climb past a tiny cap
  const Ideal I = ideal({"x1^8 - x2", "x2^8 - x3"}, 3);
  CHECK_THROWS_AS(I.groebner_basis(MonomialOrder::elim_block(2), 6), cap_exceeded);
}

}  // TEST_SUITE
