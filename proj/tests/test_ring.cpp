#include <doctest.h>

#include "lsw/forms.hpp"
#include "lsw/poly.hpp"
#include "lsw/poly_io.hpp"
#include "support/rng.hpp"

using namespace lsw;
using lsw::testing::Rng;

namespace {

Poly P(const std::string& s, const VarTable& v) { return parse_poly(s, v); }

// theta = sum(x_{m+i} dx_i - x_i dx_{m+i}) - dx_{2m+1}
DiffForm standard_theta(int m) {
  const int n = 2 * m + 1;
  DiffForm th(n, 1);
  for (int i = 0; i < m; ++i) {
    th.add(std::vector<int>{i}, Poly::variable(n, m + i));
    th.add(std::vector<int>{m + i}, -Poly::variable(n, i));
  }
  th.add(std::vector<int>{n - 1}, Poly::constant(n, -1));
  return th;
}

}  // namespace

TEST_SUITE("ring") {

TEST_CASE("degrevlex basics") {
  const MonomialOrder drl = MonomialOrder::degrevlex();
  const Monomial x1x1(std::vector<int>{2, 0});
  const Monomial x1x2(std::vector<int>{1, 1});
  const Monomial x2x2(std::vector<int>{0, 2});
  CHECK(drl.compare(x1x1, x1x2) > 0);
  CHECK(drl.compare(x1x2, x2x2) > 0);
  const Monomial one(std::vector<int>{0, 0});
  CHECK(drl.compare(one, x1x2) < 0);
}

TEST_CASE("negdegrevlex ranks lower degree higher") {
  const MonomialOrder ds = MonomialOrder::negdegrevlex();
  const Monomial x1(std::vector<int>{1, 0, 0});
  const Monomial x2sq(std::vector<int>{0, 2, 0});
  CHECK(ds.compare(x1, x2sq) > 0);
  const Poly p = P("x2^2 - x1^3", VarTable::x(3));
  CHECK(p.leading_monomial(ds) == Monomial(std::vector<int>{0, 2, 0}));
}

TEST_CASE("poly ring axioms on random triples") {
  Rng rng(0x5eed01);
  for (int it = 0; it < 60; ++it) {
    const Poly a = rng.poly(3, 4, 4);
    const Poly b = rng.poly(3, 4, 4);
    const Poly c = rng.poly(3, 4, 4);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
  }
}

TEST_CASE("parser round trips") {
  const VarTable x4 = VarTable::x(4);
  const Poly p = P("9*x1*x4 + x2^2", x4);
  CHECK(to_string(p, x4) == "x2^2 + 9*x1*x4");
  CHECK(P(to_string(p, x4), x4) == p);

  const VarTable u1 = VarTable::u(1);
  const Poly q = P("-1/5*u1^5", u1);
  CHECK(q.coeff(Monomial(std::vector<int>{5})) == Q(-1, 5));
  CHECK(P(to_string(q, u1), u1) == q);

  Rng rng(0x5eed02);
  for (int it = 0; it < 100; ++it) {
    const Poly r = rng.poly(4, 5, 5);
    CHECK(P(to_string(r, x4), x4) == r);
  }
}

TEST_CASE("parser rejects malformed input") {
  const VarTable x3 = VarTable::x(3);
  CHECK_THROWS_AS(parse_poly("x9 + 1", x3), parse_error);
  CHECK_THROWS_AS(parse_poly("x1 +", x3), parse_error);
  CHECK_THROWS_AS(parse_poly("", x3), parse_error);
  CHECK_THROWS_AS(parse_poly("x1^(2)", x3), parse_error);
}

TEST_CASE("substitution and evaluation") {
  const VarTable x2 = VarTable::x(2);
  const Poly p = P("x1^2 + x2", x2);
  const VarTable u1 = VarTable::u(1);
  std::vector<Poly> images{P("u1^3", u1), P("2*u1", u1)};
  CHECK(p.substitute(images) == P("u1^6 + 2*u1", u1));
  std::vector<Q> pt{Q(2), Q(-1)};
  CHECK(p.eval(pt) == Q(3));
}

TEST_CASE("exterior derivative of theta") {
  // m = 1: d theta = 2 dx2 ^ dx1
  const DiffForm th = standard_theta(1);
  const DiffForm dth = exterior_derivative(th);
  DiffForm expected(3, 2);
  expected.add(std::vector<int>{1, 0}, Poly::constant(3, 2));
  CHECK(dth == expected);

  // m = 2: d theta = 2(dx3 ^ dx1 + dx4 ^ dx2)
  const DiffForm th2 = standard_theta(2);
  const DiffForm dth2 = exterior_derivative(th2);
  DiffForm expected2(5, 2);
  expected2.add(std::vector<int>{2, 0}, Poly::constant(5, 2));
  expected2.add(std::vector<int>{3, 1}, Poly::constant(5, 2));
  CHECK(dth2 == expected2);
}

TEST_CASE("exterior derivative edge cases") {
  CHECK(exterior_derivative(DiffForm::function(Poly::constant(3, 5))).is_zero());

  // d(x1 dx2) = dx1 ^ dx2
  DiffForm w(3, 1);
  w.add(std::vector<int>{1}, Poly::variable(3, 0));
  DiffForm expected(3, 2);
  expected.add(std::vector<int>{0, 1}, Poly::constant(3, 1));
  CHECK(exterior_derivative(w) == expected);

  CHECK_THROWS_AS(exterior_derivative(exterior_derivative(w)), std::invalid_argument);
}

TEST_CASE("d after d vanishes") {
  Rng rng(0x5eed03);
  for (int it = 0; it < 120; ++it) {
    const int n = 2 + it % 3;
    const DiffForm f = DiffForm::function(rng.poly(n, 5, 4));
    CHECK(exterior_derivative(exterior_derivative(f)).is_zero());
  }
}

TEST_CASE("contraction") {
  // i_{d/dx1} dx1 = 1
  VectorField e1(3);
  e1.component(0) = Poly::constant(3, 1);
  CHECK(contract(e1, DiffForm::dx(3, 0)) == DiffForm::function(Poly::constant(3, 1)));

  // radial field against 2 dx2 ^ dx1 on C^2: 2(x2 dx1 - x1 dx2)
  VectorField radial(2);
  radial.component(0) = Poly::variable(2, 0);
  radial.component(1) = Poly::variable(2, 1);
  DiffForm omega(2, 2);
  omega.add(std::vector<int>{1, 0}, Poly::constant(2, 2));
  DiffForm expected(2, 1);
  expected.add(std::vector<int>{0}, Poly::variable(2, 1) * Q(2));
  expected.add(std::vector<int>{1}, Poly::variable(2, 0) * Q(-2));
  CHECK(contract(radial, omega) == expected);

  CHECK_THROWS_AS(contract(e1, DiffForm::function(Poly::constant(3, 1))), std::invalid_argument);
}

TEST_CASE("lie derivative") {
  VectorField e1(3);
  e1.component(0) = Poly::constant(3, 1);

  // Lie_{d/dx1}(x1 dx2) = dx2
  DiffForm w(3, 1);
  w.add(std::vector<int>{1}, Poly::variable(3, 0));
  CHECK(lie_derivative(e1, w) == DiffForm::dx(3, 1));

  CHECK(lie_derivative(e1, DiffForm(3, 1)).is_zero());

  // Cartan consistency on functions: Lie_v f = i_v df
  Rng rng(0x5eed04);
  for (int it = 0; it < 40; ++it) {
    VectorField v(3);
    for (int i = 0; i < 3; ++i) v.component(i) = rng.poly(3, 3, 3);
    const Poly f = rng.poly(3, 4, 4);
    CHECK(lie_derivative(v, DiffForm::function(f)) ==
          contract(v, exterior_derivative(DiffForm::function(f))));
    CHECK(lie_derivative(v, DiffForm::function(f)) == DiffForm::function(v.apply(f)));
  }
}

TEST_CASE("weight function") {
  // wt(x_i) = 1 for i <= 2m, wt(x_{2m+1}) = 2
  const std::vector<int> w{1, 1, 2};
  CHECK(weight(standard_theta(1), w) == 2);

  const VarTable x3 = VarTable::x(3);
  CHECK(weight(P("x1*x2", x3), w) == 2);

  DiffForm x3dx1(3, 1);
  x3dx1.add(std::vector<int>{0}, Poly::variable(3, 2));
  CHECK(weight(x3dx1, w) == 3);

  CHECK(!weight(Poly(3), w).has_value());
}

TEST_CASE("weight is additive on products") {
  Rng rng(0x5eed05);
  const std::vector<int> w{1, 1, 2};
  for (int it = 0; it < 60; ++it) {
    const Poly p = rng.nonzero_poly(3, 4, 3);
    const Poly q = rng.nonzero_poly(3, 4, 3);
    CHECK(*weight(p * q, w) == *weight(p, w) + *weight(q, w));
  }
}

TEST_CASE("pullback of 1-forms") {
  // phi(u) = (u^2, u^3, -u^5/5) pulls theta back to 0
  const VarTable u1 = VarTable::u(1);
  std::vector<Poly> phi{P("u1^2", u1), P("u1^3", u1), P("-1/5*u1^5", u1)};
  CHECK(pullback(standard_theta(1), phi).is_zero());

  std::vector<Poly> line{P("u1", u1), Poly(1), Poly(1)};
  CHECK(pullback(standard_theta(1), line).is_zero());

  std::vector<Poly> bad{P("u1", u1), Poly(1), P("u1", u1)};
  DiffForm expected(1, 1);
  expected.add(std::vector<int>{0}, Poly::constant(1, -1));
  CHECK(pullback(standard_theta(1), bad) == expected);
}

}  // TEST_SUITE
