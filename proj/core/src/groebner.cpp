#include "lsw/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>
#include <tuple>

namespace lsw {

namespace {

void check_cap(const Poly& p, int cap, const char* what) {
  if (p.degree() > cap)
    throw cap_exceeded(std::string(what) + ": intermediate degree " +
                       std::to_string(p.degree()) + " exceeds cap " + std::to_string(cap));
}

Poly spoly(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  const auto [mf, cf] = f.leading_term(ord);
  const auto [mg, cg] = g.leading_term(ord);
  const Monomial m = lcm(mf, mg);
  return Poly::monomial(div(m, mf), 1 / cf) * f - Poly::monomial(div(m, mg), 1 / cg) * g;
}

}  // namespace

NormalFormResult normal_form(const Poly& p, std::span<const Poly> G, const MonomialOrder& ord,
                             int degree_cap) {
  assert(ord.global());
  NormalFormResult res;
  res.remainder = Poly(p.nvars());
  res.cofactors.assign(G.size(), Poly(p.nvars()));
  Poly h = p;
  while (!h.is_zero()) {
    check_cap(h, degree_cap, "normal_form");
    const auto [mh, ch] = h.leading_term(ord);
    bool reduced = false;
    for (size_t i = 0; i < G.size(); ++i) {
      if (G[i].is_zero()) continue;
      const auto [mg, cg] = G[i].leading_term(ord);
      if (!mg.divides(mh)) continue;
      const Poly t = Poly::monomial(div(mh, mg), ch / cg);
      res.cofactors[i] += t;
      h -= t * G[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      res.remainder.add_term(mh, ch);
      h.add_term(mh, -ch);
    }
  }
  return res;
}

std::vector<Poly> buchberger(std::vector<Poly> gens, const MonomialOrder& ord, int degree_cap) {
  assert(ord.global());
  std::vector<Poly> G;
  for (Poly& g : gens)
    if (!g.is_zero()) G.push_back(g.monic(ord));
  if (G.empty()) return {};

  struct PairLess {
    const MonomialOrder* ord;
    const std::vector<Poly>* G;
    bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
      const Monomial la = lcm((*G)[a.first].leading_monomial(*ord), (*G)[a.second].leading_monomial(*ord));
      const Monomial lb = lcm((*G)[b.first].leading_monomial(*ord), (*G)[b.second].leading_monomial(*ord));
      if (int c = ord->compare(la, lb); c != 0) return c < 0;  // smallest lcm first
      return std::tie(a.first, a.second) < std::tie(b.first, b.second);
    }
  };
  // std::set would need stable keys; G grows, so keep a plain vector and
  // re-scan for the minimum (instance sizes here are small).
  std::vector<std::pair<int, int>> pairs;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  };
  for (int j = 1; j < static_cast<int>(G.size()); ++j) push_pairs(j);

  PairLess less{&ord, &G};
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), less);
    const auto [i, j] = *it;
    pairs.erase(it);
    const Monomial mi = G[i].leading_monomial(ord);
    const Monomial mj = G[j].leading_monomial(ord);
    if (mi.coprime(mj)) continue;  // product criterion
    Poly r = normal_form(spoly(G[i], G[j], ord), G, ord, degree_cap).remainder;
    if (r.is_zero()) continue;
    G.push_back(r.monic(ord));
    push_pairs(static_cast<int>(G.size()) - 1);
  }

  // minimalize
  std::vector<Poly> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    const Monomial mi = G[i].leading_monomial(ord);
    bool redundant = false;
    for (size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      const Monomial mj = G[j].leading_monomial(ord);
      if (mj.divides(mi) && (mj != mi || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // tail-reduce each element against the others
  std::vector<Poly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = normal_form(minimal[i], others, ord, degree_cap).remainder;
    assert(!r.is_zero());
    reduced.push_back(r.monic(ord));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
    return ord.compare(a.leading_monomial(ord), b.leading_monomial(ord)) < 0;
  });
  return reduced;
}

namespace {

// deg(f) - deg(LM(f)): for the local order the leading monomial sits in the
// lowest-degree part, so the ecart measures how far the tail reaches up.
int ecart(const Poly& f, const MonomialOrder& ord) {
  return f.degree() - f.leading_monomial(ord).deg();
}

}  // namespace

Poly mora_normal_form(const Poly& p, std::span<const Poly> T, int degree_cap) {
  const MonomialOrder ord = MonomialOrder::negdegrevlex();
  std::vector<Poly> pool(T.begin(), T.end());
  std::erase_if(pool, [](const Poly& f) { return f.is_zero(); });
  Poly h = p;
  while (!h.is_zero()) {
    check_cap(h, degree_cap, "mora_normal_form");
    const auto [mh, ch] = h.leading_term(ord);
    int best = -1, best_ecart = 0;
    for (size_t i = 0; i < pool.size(); ++i) {
      if (!pool[i].leading_monomial(ord).divides(mh)) continue;
      const int e = ecart(pool[i], ord);
      if (best < 0 || e < best_ecart) {
        best = static_cast<int>(i);
        best_ecart = e;
      }
    }
    if (best < 0) return h;
    if (best_ecart > ecart(h, ord)) pool.push_back(h);
    const auto [mg, cg] = pool[best].leading_term(ord);
    h -= Poly::monomial(div(mh, mg), ch / cg) * pool[best];
  }
  return h;
}

std::vector<Poly> mora_standard_basis(std::vector<Poly> gens, int degree_cap) {
  const MonomialOrder ord = MonomialOrder::negdegrevlex();
  std::vector<Poly> G;
  for (Poly& g : gens)
    if (!g.is_zero()) G.push_back(g.monic(ord));
  if (G.empty()) return {};

  std::vector<std::pair<int, int>> pairs;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  };
  for (int j = 1; j < static_cast<int>(G.size()); ++j) push_pairs(j);

  auto pair_less = [&](const std::pair<int, int>& a, const std::pair<int, int>& b) {
    const Monomial la = lcm(G[a.first].leading_monomial(ord), G[a.second].leading_monomial(ord));
    const Monomial lb = lcm(G[b.first].leading_monomial(ord), G[b.second].leading_monomial(ord));
    if (la != lb) return ord.compare(la, lb) > 0;  // lowest-degree lcm first
    return std::tie(a.first, a.second) < std::tie(b.first, b.second);
  };

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    const auto [i, j] = *it;
    pairs.erase(it);
    Poly r = mora_normal_form(spoly(G[i], G[j], ord), G, degree_cap);
    if (r.is_zero()) continue;
    G.push_back(r.monic(ord));
    push_pairs(static_cast<int>(G.size()) - 1);
  }

  std::vector<Poly> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    const Monomial mi = G[i].leading_monomial(ord);
    bool redundant = false;
    for (size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      const Monomial mj = G[j].leading_monomial(ord);
      if (mj.divides(mi) && (mj != mi || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
    return ord.compare(a.leading_monomial(ord), b.leading_monomial(ord)) < 0;
  });
  return minimal;
}

}  // namespace lsw
