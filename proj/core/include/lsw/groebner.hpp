#pragma once

#include <span>
#include <vector>

#include "lsw/ideal.hpp"

namespace lsw {

struct NormalFormResult {
  Poly remainder;
  std::vector<Poly> cofactors;  // input = sum cofactors[i] * G[i] + remainder
};

// Full normal form against G under a global order, tracking cofactors.
// Reducers are chosen by first match in list order, which makes the result a
// function of (p, G, ord) only.
NormalFormResult normal_form(const Poly& p, std::span<const Poly> G, const MonomialOrder& ord,
                             int degree_cap = kDefaultDegreeCap);

// Reduced Groebner basis via Buchberger with normal pair selection (smallest
// lcm first) and the product criterion; output is monic and sorted by leading
// monomial, hence canonical.
std::vector<Poly> buchberger(std::vector<Poly> gens, const MonomialOrder& ord,
                             int degree_cap = kDefaultDegreeCap);

// Mora weak normal form with ecart-based reducer selection; correct for the
// local order negdegrevlex. remainder == 0 iff p lies in the localized ideal.
Poly mora_normal_form(const Poly& p, std::span<const Poly> T, int degree_cap = kDefaultDegreeCap);

// Standard basis for local-negdegrevlex via the S-pair loop with Mora
// reduction; minimalized, monic, sorted by leading monomial.
std::vector<Poly> mora_standard_basis(std::vector<Poly> gens, int degree_cap = kDefaultDegreeCap);

}  // namespace lsw
