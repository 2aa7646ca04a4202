#include "lsw/ideal_ops.hpp"

#include <algorithm>
#include <cassert>

namespace lsw {

namespace {

const MonomialOrder kDrl = MonomialOrder::degrevlex();

Poly permute_vars(const Poly& p, const std::vector<int>& perm) {
  Poly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(p.nvars(), 0);
    for (int i = 0; i < p.nvars(); ++i) e[perm[i]] = m.exp(i);
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

}  // namespace

bool membership(const Poly& p, const Ideal& I) {
  if (p.is_zero()) return true;
  const Basis& gb = I.groebner_basis();
  return normal_form(p, gb.elements, kDrl).remainder.is_zero();
}

std::optional<MembershipCertificate> membership_certificate(const Poly& p, const Ideal& I) {
  const Basis& gb = I.groebner_basis();
  NormalFormResult nf = normal_form(p, gb.elements, kDrl);
  if (!nf.remainder.is_zero()) return std::nullopt;
  return MembershipCertificate{gb.elements, std::move(nf.cofactors)};
}

bool radical_membership(const Poly& p, const Ideal& I) {
  if (p.is_zero()) return true;
  const int n = I.nvars();
  std::vector<Poly> gens;
  for (const Poly& g : I.gens()) gens.push_back(lift(g, n + 1, 0));
  // 1 - z*p with z appended last
  Poly zp = lift(p, n + 1, 0) * Poly::variable(n + 1, n);
  gens.push_back(Poly::constant(n + 1, 1) - zp);
  return is_unit_ideal(Ideal(std::move(gens), n + 1));
}

bool is_unit_ideal(const Ideal& I) {
  const Basis& gb = I.groebner_basis();
  return gb.elements.size() == 1 && gb.elements[0].is_constant() && !gb.elements[0].is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  assert(I.nvars() == J.nvars());
  return I.groebner_basis().elements == J.groebner_basis().elements;
}

int dimension(const Ideal& I) {
  const Basis& gb = I.groebner_basis();
  if (is_unit_ideal(I)) throw std::invalid_argument("dimension of the unit ideal");
  const int n = I.nvars();
  std::vector<Monomial> lms;
  for (const Poly& g : gb.elements) lms.push_back(g.leading_monomial(kDrl));
  // Max |S| with no leading monomial supported inside S. Variable counts in
  // scope are small, so subsets are enumerated directly.
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const Monomial& m : lms) {
      bool inside = true;
      for (int i = 0; i < n && inside; ++i)
        if (m.exp(i) > 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  assert(I.nvars() == J.nvars());
  const int n = I.nvars();
  // t*I + (1-t)*J in Q[t, x], then eliminate t.
  std::vector<Poly> gens;
  const Poly t = Poly::variable(n + 1, 0);
  const Poly one_minus_t = Poly::constant(n + 1, 1) - t;
  for (const Poly& g : I.gens()) gens.push_back(lift(g, n + 1, 1) * t);
  for (const Poly& g : J.gens()) gens.push_back(lift(g, n + 1, 1) * one_minus_t);
  return eliminate(Ideal(std::move(gens), n + 1), 1);
}

Ideal quotient(const Ideal& I, const Poly& g) {
  assert(g.nvars() == I.nvars());
  if (g.is_zero()) return Ideal({Poly::constant(I.nvars(), 1)}, I.nvars());
  Ideal cap = intersect(I, Ideal({g}, I.nvars()));
  std::vector<Poly> gens;
  for (const Poly& h : cap.gens()) {
    auto q = divide_exact(h, g);
    assert(q.has_value());
    gens.push_back(std::move(*q));
  }
  return Ideal(std::move(gens), I.nvars());
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  if (J.zero()) return Ideal({Poly::constant(I.nvars(), 1)}, I.nvars());
  std::optional<Ideal> acc;
  for (const Poly& g : J.gens()) {
    Ideal qg = quotient(I, g);
    acc = acc ? intersect(*acc, qg) : qg;
  }
  return *acc;
}

Ideal quotient_saturate(const Ideal& I, const Ideal& J) {
  Ideal current = I;
  for (;;) {
    Ideal next = quotient(current, J);
    if (ideal_equal(next, current)) return current;
    current = next;
  }
}

Ideal eliminate(const Ideal& I, int head, int degree_cap) {
  const int n = I.nvars();
  assert(head > 0 && head < n);
  const Basis& gb = I.groebner_basis(MonomialOrder::elim_block(head), degree_cap);
  std::vector<Poly> kept;
  for (const Poly& g : gb.elements) {
    const Monomial lm = g.leading_monomial(MonomialOrder::elim_block(head));
    bool uses_head = false;
    for (int i = 0; i < head; ++i)
      if (lm.exp(i) > 0) uses_head = true;
    if (uses_head) continue;
    // block order: if the leading monomial avoids the head block, every term does
    Poly h = g;
    for (int i = head - 1; i >= 0; --i) h = drop_var(h, i);
    kept.push_back(std::move(h));
  }
  return Ideal(std::move(kept), n - head);
}

Ideal kernel_ideal(std::span<const Poly> images, int degree_cap) {
  assert(!images.empty());
  const int src = images[0].nvars();
  const int k = static_cast<int>(images.size());
  const int n = src + k;
  std::vector<Poly> gens;
  for (int i = 0; i < k; ++i) {
    assert(images[i].nvars() == src);
    gens.push_back(Poly::variable(n, src + i) - lift(images[i], n, 0));
  }
  return eliminate(Ideal(std::move(gens), n), src, degree_cap);
}

std::optional<Poly> divide_exact(const Poly& p, const Poly& g) {
  if (p.is_zero()) return Poly(p.nvars());
  if (g.is_zero()) return std::nullopt;
  NormalFormResult nf = normal_form(p, std::span<const Poly>(&g, 1), kDrl,
                                    std::max(kDefaultDegreeCap, p.degree() + 1));
  if (!nf.remainder.is_zero()) return std::nullopt;
  return nf.cofactors[0];
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.monic(kDrl);
  if (b.is_zero()) return a.monic(kDrl);
  Ideal cap = intersect(Ideal({a}, a.nvars()), Ideal({b}, b.nvars()));
  const Basis& gb = cap.groebner_basis();
  assert(gb.elements.size() == 1);  // intersection of principal ideals is principal
  const Poly& l = gb.elements[0];
  auto g = divide_exact(a * b, l);
  assert(g.has_value());
  return g->monic(kDrl);
}

Poly poly_gcd(std::span<const Poly> ps) {
  Poly d = ps.empty() ? Poly() : Poly(ps[0].nvars());
  for (const Poly& p : ps) {
    d = poly_gcd(d, p);
    if (!d.is_zero() && d.is_constant()) break;
  }
  return d;
}

bool squarefree(const Poly& g) {
  if (g.is_zero()) return false;
  if (g.is_constant()) return true;
  Poly d = g;
  for (int i = 0; i < g.nvars(); ++i) {
    d = poly_gcd(d, g.derivative(i));
    if (d.is_constant()) return true;
  }
  return d.is_constant();
}

Poly squarefree_part(const Poly& g) {
  assert(!g.is_zero());
  std::vector<Poly> list{g};
  for (int i = 0; i < g.nvars(); ++i) list.push_back(g.derivative(i));
  const Poly d = poly_gcd(list);
  auto part = divide_exact(g, d);
  assert(part.has_value());
  return part->monic(kDrl);
}

Poly minimal_univariate(const Ideal& I, int var) {
  const int n = I.nvars();
  Ideal uni = [&] {
    if (n == 1) return I;
    // move `var` last, eliminate the rest
    std::vector<int> perm(n);
    int next = 0;
    for (int i = 0; i < n; ++i)
      if (i != var) perm[i] = next++;
    perm[var] = n - 1;
    std::vector<Poly> gens;
    for (const Poly& g : I.gens()) gens.push_back(permute_vars(g, perm));
    return eliminate(Ideal(std::move(gens), n), n - 1);
  }();
  const Basis& gb = uni.groebner_basis();
  if (gb.elements.size() != 1)
    throw std::invalid_argument("no univariate generator; is the ideal zero-dimensional?");
  return gb.elements[0];
}

bool zero_dim_is_radical(const Ideal& I) {
  if (dimension(I) != 0)
    throw std::invalid_argument("zero_dim_is_radical requires a zero-dimensional ideal");
  for (int i = 0; i < I.nvars(); ++i) {
    if (!squarefree(minimal_univariate(I, i))) return false;
  }
  return true;
}

}  // namespace lsw
