#include "lsw/cone.hpp"

#include <cassert>
#include <random>

#include "lsw/ideal_ops.hpp"

namespace lsw {

SymplecticSpace::SymplecticSpace(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("symplectic space needs m >= 1");
}

DiffForm SymplecticSpace::omega() const {
  DiffForm w(dim(), 2);
  for (int i = 0; i < m_; ++i)
    w.add(std::vector<int>{m_ + i, i}, Poly::constant(dim(), 2));
  return w;
}

Poly poisson_bracket(const Poly& g, const Poly& h, const SymplecticSpace& V) {
  assert(g.nvars() == V.dim() && h.nvars() == V.dim());
  Poly r(V.dim());
  for (int k = 0; k < V.m(); ++k)
    r += g.derivative(V.m() + k) * h.derivative(k) - g.derivative(k) * h.derivative(V.m() + k);
  return r;
}

VectorField omega_dagger(const Poly& q, const SymplecticSpace& V) {
  if (q.nvars() != V.dim()) throw std::invalid_argument("omega_dagger: wrong variable count");
  if (!q.is_zero() && !(q.is_homogeneous() && q.degree() == 2))
    throw std::invalid_argument("omega_dagger: expected a homogeneous quadric");
  VectorField v(V.dim());
  for (int k = 0; k < V.m(); ++k) {
    v.component(k) = q.derivative(V.m() + k);
    v.component(V.m() + k) = -q.derivative(k);
  }
  return v;
}

HomIdeal::HomIdeal(Ideal I) : I_(std::move(I)) {
  for (const Poly& g : I_.gens())
    if (!g.is_homogeneous())
      throw std::invalid_argument("HomIdeal: generators must be homogeneous");
}

HomIdeal tangent_cone(const Ideal& I, int degree_cap) {
  for (const Poly& g : I.gens())
    if (!is_zero(g.constant_term()))
      throw std::invalid_argument("tangent_cone: generator does not vanish at 0");
  const Basis& sb = I.standard_basis(degree_cap);
  std::vector<Poly> init;
  for (const Poly& g : sb.elements) init.push_back(g.lowest_form());
  return HomIdeal(Ideal(std::move(init), I.nvars()));
}

const char* to_string(Reducedness r) {
  switch (r) {
    case Reducedness::Reduced:
      return "reduced";
    case Reducedness::NonReduced:
      return "non-reduced";
    case Reducedness::Unknown:
      return "unknown";
  }
  return "?";
}

namespace {

// try to certify a non-reduced verdict with an explicit element of sqrt(C)\C
std::optional<Poly> nonreduced_witness(const Ideal& C, const std::vector<Poly>& candidates) {
  for (const Poly& p : candidates) {
    if (p.is_zero() || p.is_constant()) continue;
    if (!membership(p, C) && radical_membership(p, C)) return p;
  }
  return std::nullopt;
}

Poly generic_slice_form(const Ideal& C, int attempt) {
  // deterministic coefficients; the attempt index offsets the seed
  std::mt19937_64 eng(0x51edce + attempt);
  std::uniform_int_distribution<int> d(-5, 5);
  Poly ell(C.nvars());
  for (int i = 0; i < C.nvars(); ++i) {
    int c = d(eng);
    if (c == 0) c = 1;
    ell += Poly::variable(C.nvars(), i) * Q(c);
  }
  return ell;
}

}  // namespace

ReducednessResult reducedness(const HomIdeal& C, const std::vector<Poly>* parametrization) {
  const Ideal& I = C.ideal();
  ReducednessResult res;
  if (I.zero()) {
    res.verdict = Reducedness::Reduced;
    res.tier = "zero-ideal";
    return res;
  }
  const Basis& gb = I.groebner_basis();

  if (gb.elements.size() == 1) {
    res.tier = "principal-squarefree";
    const Poly& g = gb.elements[0];
    if (squarefree(g)) {
      res.verdict = Reducedness::Reduced;
    } else {
      res.verdict = Reducedness::NonReduced;
      res.witness = nonreduced_witness(I, {squarefree_part(g)});
    }
    return res;
  }

  bool all_monomial = true;
  for (const Poly& g : gb.elements)
    if (g.nterms() != 1) all_monomial = false;
  if (all_monomial) {
    res.tier = "monomial";
    std::vector<Poly> candidates;
    bool ok = true;
    for (const Poly& g : gb.elements) {
      const Monomial m = g.terms().begin()->first;
      bool sf = true;
      std::vector<int> rad(I.nvars(), 0);
      for (int i = 0; i < I.nvars(); ++i) {
        if (m.exp(i) > 1) sf = false;
        rad[i] = m.exp(i) > 0 ? 1 : 0;
      }
      if (!sf) {
        ok = false;
        candidates.push_back(Poly::monomial(Monomial(std::move(rad)), 1));
      }
    }
    res.verdict = ok ? Reducedness::Reduced : Reducedness::NonReduced;
    if (!ok) res.witness = nonreduced_witness(I, candidates);
    return res;
  }

  const int dim = dimension(I);
  if (dim == 0) {
    res.tier = "dim0-radical";
    res.verdict = zero_dim_is_radical(I) ? Reducedness::Reduced : Reducedness::NonReduced;
    if (res.verdict == Reducedness::NonReduced) {
      std::vector<Poly> candidates;
      for (const Poly& g : gb.elements) candidates.push_back(squarefree_part(g));
      res.witness = nonreduced_witness(I, candidates);
    }
    return res;
  }

  if (dim == 1) {
    res.tier = "curve-saturation-slice";
    std::vector<Poly> iran;
    for (int i = 0; i < I.nvars(); ++i) iran.push_back(Poly::variable(I.nvars(), i));
    const Ideal irrelevant(iran, I.nvars());
    if (!ideal_equal(quotient_saturate(I, irrelevant), I)) {
      res.verdict = Reducedness::NonReduced;
      res.note = "not saturated at the irrelevant ideal";
      std::vector<Poly> candidates = quotient_saturate(I, irrelevant).gens();
      res.witness = nonreduced_witness(I, candidates);
      return res;
    }
    for (int attempt = 0; attempt < 5; ++attempt) {
      const Poly ell = generic_slice_form(I, attempt);
      std::vector<Poly> gens = I.gens();
      gens.push_back(ell - Poly::constant(I.nvars(), 1));
      const Ideal slice(gens, I.nvars());
      if (is_unit_ideal(slice) || dimension(slice) != 0) continue;  // degenerate slice
      if (zero_dim_is_radical(slice)) {
        res.verdict = Reducedness::Reduced;
      } else {
        res.verdict = Reducedness::NonReduced;
        std::vector<Poly> candidates;
        for (const Poly& g : gb.elements) candidates.push_back(squarefree_part(g));
        res.witness = nonreduced_witness(I, candidates);
      }
      res.note = "slice attempt " + std::to_string(attempt);
      return res;
    }
    res.note = "no usable affine slice in 5 attempts";
    // fall through to the parametric certificate when one is supplied
  }

  if (parametrization != nullptr) {
    res.tier = "parametric-prime";
    const Ideal kernel = kernel_ideal(*parametrization);
    if (kernel.nvars() == I.nvars() && ideal_equal(kernel, I)) {
      // kernel of a map into a polynomial ring is prime over Q, and
      // Q-radicality is stable under the extension to C in characteristic 0
      res.verdict = Reducedness::Reduced;
      return res;
    }
    res.verdict = Reducedness::Unknown;
    res.note = "supplied parametrization does not present this ideal";
    return res;
  }

  res.tier = "none";
  res.verdict = Reducedness::Unknown;
  return res;
}

namespace {

std::vector<std::vector<Poly>> jacobian_rows(const Ideal& I) {
  std::vector<std::vector<Poly>> rows;
  for (const Poly& g : I.gens()) {
    std::vector<Poly> row;
    for (int j = 0; j < I.nvars(); ++j) row.push_back(g.derivative(j));
    rows.push_back(std::move(row));
  }
  return rows;
}

bool next_subset(std::vector<int>& idx, int limit) {
  int i = static_cast<int>(idx.size()) - 1;
  while (i >= 0 && idx[i] == limit - (static_cast<int>(idx.size()) - i)) --i;
  if (i < 0) return false;
  ++idx[i];
  for (size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

// Kernel frame of an m-row submatrix via signed maximal minors: for a column
// set S of size m+1, the vector supported on S whose S[k]-entry is
// (-1)^k det(columns S minus S[k]).
VectorField cofactor_kernel_vector(const std::vector<std::vector<Poly>>& rows,
                                   const std::vector<int>& row_set,
                                   const std::vector<int>& col_set, int nvars) {
  const int m = static_cast<int>(row_set.size());
  VectorField v(nvars);
  for (int k = 0; k <= m; ++k) {
    std::vector<std::vector<Poly>> sub;
    for (int a = 0; a < m; ++a) {
      std::vector<Poly> r;
      for (int b = 0; b <= m; ++b) {
        if (b == k) continue;
        r.push_back(rows[row_set[a]][col_set[b]]);
      }
      sub.push_back(std::move(r));
    }
    Poly d = poly_det(sub);
    if (k % 2 == 1) d = -d;
    v.component(col_set[k]) = std::move(d);
  }
  return v;
}

Poly omega_pairing(const VectorField& a, const VectorField& b, int m) {
  Poly r(a.nvars());
  for (int k = 0; k < m; ++k)
    r += a.component(m + k) * b.component(k) - a.component(k) * b.component(m + k);
  return r;
}

}  // namespace

bool is_lagrangian_cone(const HomIdeal& C, const SymplecticSpace& V) {
  const Ideal& I = C.ideal();
  if (I.nvars() % 2 != 0) throw std::invalid_argument("is_lagrangian_cone: odd variable count");
  if (I.nvars() != V.dim())
    throw std::invalid_argument("is_lagrangian_cone: variable count does not match the space");
  const int m = V.m();
  if (I.zero()) return false;
  if (dimension(I) != m) return false;

  // coisotropy: bracket closure of generators modulo sqrt(C)
  const auto& gens = I.gens();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!radical_membership(poisson_bracket(gens[i], gens[j], V), I)) return false;

  // direct isotropy of the cofactor kernel frame
  const auto rows = jacobian_rows(I);
  const int nrows = static_cast<int>(rows.size());
  if (nrows < m) return false;
  std::vector<int> row_set(m);
  for (int i = 0; i < m; ++i) row_set[i] = i;
  do {
    std::vector<std::vector<int>> col_sets;
    std::vector<int> cols(m + 1);
    for (int i = 0; i <= m; ++i) cols[i] = i;
    do {
      col_sets.push_back(cols);
    } while (next_subset(cols, V.dim()));
    std::vector<VectorField> frame;
    for (const auto& cs : col_sets)
      frame.push_back(cofactor_kernel_vector(rows, row_set, cs, V.dim()));
    for (size_t a = 0; a < frame.size(); ++a)
      for (size_t b = a + 1; b < frame.size(); ++b) {
        const Poly pairing = omega_pairing(frame[a], frame[b], m);
        if (pairing.is_zero()) continue;
        if (!radical_membership(pairing, I)) return false;
      }
  } while (next_subset(row_set, nrows));
  return true;
}

QuadricTangencyReport quadric_tangency_check(const HomIdeal& C, const Poly& q,
                                             const SymplecticSpace& V) {
  QuadricTangencyReport rep;
  rep.in_radical = radical_membership(q, C.ideal());
  rep.tangent = is_tangent(omega_dagger(q, V), C.ideal());
  return rep;
}

const char* to_string(ConeClass c) {
  switch (c) {
    case ConeClass::LagrangianConeSingularity:
      return "lagrangian-cone-singularity";
    case ConeClass::NotACone:
      return "not-a-cone";
    case ConeClass::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

ClassifyResult classify_singularity(const Ideal& I, const ContactChart& chart,
                                    const std::vector<Poly>* parametrization) {
  const LegendrianVerdict lv = legendrian_implicit(I, chart);
  if (lv != LegendrianVerdict::Legendrian) throw classify_rejected(lv);

  ClassifyResult res;
  res.tc = tangent_cone(I);
  res.red = reducedness(*res.tc, parametrization);

  if (res.red.verdict == Reducedness::NonReduced) {
    res.verdict = ConeClass::NotACone;
    return res;
  }
  if (res.red.verdict == Reducedness::Unknown) {
    res.verdict = ConeClass::Inconclusive;
    res.note = "reducedness undecided";
    return res;
  }

  // consistency checks behind the reduced verdict: the cone sits inside D_0
  // and its image in the symplectic hyperplane is Lagrangian
  const int n = chart.nvars();
  res.tc_in_D0 = radical_membership(Poly::variable(n, n - 1), res.tc->ideal());
  if (res.tc_in_D0) {
    std::vector<Poly> image;
    for (const Poly& g : res.tc->ideal().gens()) {
      Poly h = drop_var(substitute_var(g, n - 1, Poly(n)), n - 1);
      if (!h.is_zero()) image.push_back(std::move(h));
    }
    res.tc_lagrangian =
        is_lagrangian_cone(HomIdeal(Ideal(image, n - 1)), SymplecticSpace(chart.m()));
  }
  if (res.tc_in_D0 && res.tc_lagrangian) {
    res.verdict = ConeClass::LagrangianConeSingularity;
  } else {
    res.verdict = ConeClass::Inconclusive;
    res.note = "reduced tangent cone failed a consistency check";
  }
  return res;
}

}  // namespace lsw
