#include <doctest.h>

#include "lsw/localalg.hpp"
#include "lsw/poly_io.hpp"

using namespace lsw;

namespace {

Ideal ideal(const std::vector<std::string>& gens, int nvars) {
  const VarTable v = VarTable::x(nvars);
  std::vector<Poly> ps;
  for (const auto& s : gens) ps.push_back(parse_poly(s, v));
  return Ideal(std::move(ps), nvars);
}

}  // namespace

TEST_SUITE("localalg") {

TEST_CASE("jet space basics") {
  const JetSpace jet(3, 8);
  CHECK(jet.dim() == 120);  // C(10,3)
  const JetSpace small(2, 3);
  CHECK(small.dim() == 6);  // 1, x1, x2, x1^2, x1*x2, x2^2

  const VarTable x2 = VarTable::x(2);
  const Poly p = parse_poly("x1 + x2^2", x2);
  CHECK(small.mul(p, p) == parse_poly("x1^2 + 2*x1*x2^2", x2).truncated(2));
  CHECK(small.truncate(parse_poly("x1^3 + x2", x2)) == parse_poly("x2", x2));
}

TEST_CASE("cusp curve carries a nonzero torsion class") {
  const ContactChart c1(1);
  const Ideal cusp = ideal({"x2^2 - x1^3", "5*x3 + x1*x2"}, 3);

  int smallest = -1;
  for (int N = 3; N <= 8; ++N) {
    const TorsionVerdict v = torsion_theta_class(cusp, c1, N);
    if (v.nonzero) {
      smallest = N;
      break;
    }
  }
  REQUIRE(smallest != -1);
  CHECK(smallest <= 6);

  const TorsionVerdict v6 = torsion_theta_class(cusp, c1, 6);
  CHECK(v6.nonzero);
  CHECK(v6.witness_verified);
  CHECK(!is_zero(v6.witness_pairing));
  CHECK(!v6.functional.empty());

  // monotonicity: the class stays nonzero one order up
  CHECK(torsion_theta_class(cusp, c1, smallest + 1).nonzero);
}

TEST_CASE("smooth legendrian germs show no torsion class up to order 8") {
  const ContactChart c1(1);

  const Ideal line = ideal({"x2", "x3"}, 3);
  const TorsionVerdict vline = torsion_theta_class(line, c1, 8);
  CHECK(!vline.nonzero);
  CHECK(smooth_at_origin(line));

  // smooth lift of the cusp front y^2 = x^3
  const Ideal lift = ideal({"9*x1 - 16*x2^2", "27*x3 - 16*x2^3"}, 3);
  const TorsionVerdict vlift = torsion_theta_class(lift, c1, 8);
  CHECK(!vlift.nonzero);
  CHECK(smooth_at_origin(lift));
}

TEST_CASE("torsion test input validation") {
  const ContactChart c1(1);
  CHECK_THROWS_AS(torsion_theta_class(ideal({"x1 - 1"}, 3), c1, 6), std::invalid_argument);
  CHECK_THROWS_AS(torsion_theta_class(ideal({"x2", "x3"}, 3), c1, 2), std::invalid_argument);
}

TEST_CASE("weight obstruction") {
  const ContactChart c1(1);

  const WeightObstructionResult cusp = weight_obstruction(ideal({"x2^2 - x1^3", "5*x3 + x1*x2"}, 3), c1);
  CHECK(cusp.obstructed);
  CHECK(cusp.theta_weight == 2);
  for (long long w : cusp.generator_weights) CHECK(w >= 2);

  CHECK(!weight_obstruction(ideal({"x2", "x3"}, 3), c1).obstructed);

  // homogeneous ideal with no linear part in x1..x2m
  CHECK(weight_obstruction(ideal({"x1*x2", "x2^2"}, 3), c1).obstructed);
}

TEST_CASE("weight obstruction agrees with the torsion certificate") {
  const ContactChart c1(1);
  const Ideal cusp = ideal({"x2^2 - x1^3", "5*x3 + x1*x2"}, 3);
  REQUIRE(weight_obstruction(cusp, c1).obstructed);
  bool nonzero_by_8 = false;
  for (int N = 3; N <= 8 && !nonzero_by_8; ++N)
    nonzero_by_8 = torsion_theta_class(cusp, c1, N).nonzero;
  CHECK(nonzero_by_8);

  // twisted cubic cone in the m=2 chart: obstructed, and already nonzero at
  // a low truncation order
  const ContactChart c2(2);
  const Ideal cone =
      ideal({"x2^2 + 9*x1*x4", "3*x1*x3 + x2*x4", "x2*x3 - 3*x4^2", "x5"}, 5);
  REQUIRE(weight_obstruction(cone, c2).obstructed);
  bool nonzero_low = false;
  for (int N = 3; N <= 4 && !nonzero_low; ++N)
    nonzero_low = torsion_theta_class(cone, c2, N).nonzero;
  CHECK(nonzero_low);
}

}  // TEST_SUITE
