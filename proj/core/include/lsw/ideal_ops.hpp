#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lsw/groebner.hpp"
#include "lsw/ideal.hpp"

namespace lsw {

bool membership(const Poly& p, const Ideal& I);

// Cofactors of p against the degrevlex reduced basis (a checkable membership
// certificate together with that basis); nullopt when p is not a member.
struct MembershipCertificate {
  std::vector<Poly> basis;
  std::vector<Poly> cofactors;
};
std::optional<MembershipCertificate> membership_certificate(const Poly& p, const Ideal& I);

// p in sqrt(I), via the Rabinowitsch trick: 1 in I + (1 - z*p) with z a fresh
// last variable.
bool radical_membership(const Poly& p, const Ideal& I);

bool is_unit_ideal(const Ideal& I);
bool ideal_equal(const Ideal& I, const Ideal& J);

// Krull dimension of the quotient ring, from maximal independent variable
// sets modulo the leading term ideal. Throws on the unit ideal.
int dimension(const Ideal& I);

Ideal intersect(const Ideal& I, const Ideal& J);
Ideal quotient(const Ideal& I, const Poly& g);
Ideal quotient(const Ideal& I, const Ideal& J);

// (I : J^infinity), stabilized iterated quotient.
Ideal quotient_saturate(const Ideal& I, const Ideal& J);

// Contraction to the subring of the last nvars-head variables via a block
// elimination order; result lives in nvars-head variables.
Ideal eliminate(const Ideal& I, int head, int degree_cap = kDefaultDegreeCap);

// Kernel of the map Q[x_1..x_k] -> Q[u], x_i -> images[i]; the result lives
// in k = images.size() variables and is prime over Q.
Ideal kernel_ideal(std::span<const Poly> images, int degree_cap = kDefaultDegreeCap);

// Exact division; nullopt when g does not divide p.
std::optional<Poly> divide_exact(const Poly& p, const Poly& g);

// Multivariate gcd via the principal-ideal identity gcd = a*b / lcm with
// lcm generating (a) intersect (b); result is degrevlex-monic.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_gcd(std::span<const Poly> ps);

// Squarefree test in characteristic 0: gcd(g, dg/dx_1, ..., dg/dx_n) constant.
bool squarefree(const Poly& g);
Poly squarefree_part(const Poly& g);

// Seidenberg's criterion for a zero-dimensional ideal: radical iff for every
// variable the minimal univariate polynomial in I is squarefree. Throws if
// dimension(I) != 0.
bool zero_dim_is_radical(const Ideal& I);

// Monic generator of I intersect Q[x_var] for zero-dimensional I.
Poly minimal_univariate(const Ideal& I, int var);

}  // namespace lsw
