#pragma once

#include <map>
#include <vector>

#include "lsw/linalg.hpp"
#include "lsw/poly.hpp"

namespace lsw::testing {

// Dense coordinates of polynomials of bounded degree, used by the
// brute-force linear-algebra oracles.
struct MonomialIndex {
  std::vector<Monomial> basis;
  std::map<Monomial, int> index;

  MonomialIndex(int nvars, int maxdeg) {
    std::vector<int> e(nvars, 0);
    enumerate(e, 0, maxdeg);
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
  }

  int size() const { return static_cast<int>(basis.size()); }

  QVec vec(const Poly& p) const {
    QVec v(basis.size(), Q(0));
    for (const auto& [m, c] : p.terms()) v[index.at(m)] = c;
    return v;
  }

 private:
  void enumerate(std::vector<int>& e, int pos, int remaining) {
    if (pos == static_cast<int>(e.size())) {
      basis.emplace_back(e);
      return;
    }
    for (int d = 0; d <= remaining; ++d) {
      e[pos] = d;
      enumerate(e, pos + 1, remaining - d);
    }
    e[pos] = 0;
  }
};

}  // namespace lsw::testing
