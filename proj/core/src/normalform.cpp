#include "lsw/normalform.hpp"

#include <cassert>
#include <limits>

#include "lsw/linalg.hpp"

namespace lsw {

namespace {

// smallest coefficient degree + 1 over all terms; INT_MAX for the zero form
int form_order(const DiffForm& w) {
  int best = std::numeric_limits<int>::max();
  for (const auto& [k, p] : w.coeffs()) best = std::min(best, p.order() + 1);
  return best;
}

DiffForm theta_restricted(int m, int nvars) {
  // sum z_{m+i} dz_i - z_i dz_{m+i} on the hyperplane coordinates
  DiffForm th(nvars, 1);
  for (int i = 0; i < m; ++i) {
    th.add(std::vector<int>{i}, Poly::variable(nvars, m + i));
    th.add(std::vector<int>{m + i}, -Poly::variable(nvars, i));
  }
  return th;
}

}  // namespace

VectorField restricted_field(const Poly& h, const ContactChart& chart) {
  const int m = chart.m();
  const int twom = 2 * m;
  if (h.nvars() != twom)
    throw std::invalid_argument("restricted_field: h lives on the 2m hyperplane coordinates");
  if (!h.is_zero() && h.order() < 2)
    throw std::invalid_argument("restricted_field: h must have no constant or linear part");
  VectorField v(twom);
  for (int k = 0; k < m; ++k) {
    v.component(k) = h.derivative(m + k) + Poly::variable(twom, k);
    v.component(m + k) = -h.derivative(k) + Poly::variable(twom, m + k);
  }
  return v;
}

CoordChangeJet poincare_linearize(const VectorField& V, int order) {
  const int d = V.nvars();
  QMat A(d, QVec(d, Q(0)));
  for (int i = 0; i < d; ++i) {
    if (!is_zero(V.component(i).constant_term()))
      throw std::invalid_argument("poincare_linearize: field must vanish at 0");
    const Poly lin = V.component(i).homogeneous_part(1);
    for (const auto& [mono, c] : lin.terms())
      for (int j = 0; j < d; ++j)
        if (mono.exp(j) == 1) A[i][j] = c;
  }
  Q c(0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      if (!is_zero(A[i][j]))
        throw std::invalid_argument("poincare_linearize: linear part is not scalar");
    }
  c = A[0][0];
  for (int i = 1; i < d; ++i)
    if (A[i][i] != c)
      throw std::invalid_argument("poincare_linearize: linear part is not scalar");
  if (is_zero(c)) throw std::invalid_argument("poincare_linearize: zero linear part");

  std::vector<Poly> w;
  for (int i = 0; i < d; ++i) w.push_back(Poly::variable(d, i));
  for (int deg = 2; deg <= order; ++deg) {
    const Q factor = c * Q(deg - 1);
    for (int i = 0; i < d; ++i) {
      const Poly residual = (V.apply(w[i]) - w[i] * c).truncated(order);
      const Poly rd = residual.homogeneous_part(deg);
      if (!rd.is_zero()) w[i] -= rd / factor;
    }
  }
  // never trust the degree-by-degree solve: re-check the conjugation identity
  for (int i = 0; i < d; ++i)
    if (!(V.apply(w[i]) - w[i] * c).truncated(order).is_zero())
      throw std::logic_error("poincare_linearize: residual survived the solve");
  return CoordChangeJet(std::move(w), order);
}

namespace {

HyperplaneNormalization hyperplane_normalize_impl(const Poly& h, const ContactChart& chart,
                                                  int order) {
  const int m = chart.m();
  const int twom = 2 * m;
  const VectorField field = restricted_field(h, chart);
  const CoordChangeJet w = poincare_linearize(field, order);
  CoordChangeJet psi = w.inverse();

  const DiffForm theta_flat = theta_restricted(m, twom);
  const DiffForm theta_h = theta_flat - exterior_derivative(DiffForm::function(h));
  const DiffForm pulled = pullback(theta_h, psi.components());

  // solve the unit jet degree by degree: the (d+1)-slice of the identity
  // pulled = g * theta_flat only involves the degree-d part of g
  Poly g(twom);
  int failed_at = -1;
  for (int d = 0; d < order && failed_at < 0; ++d) {
    const std::vector<Monomial> unknowns = monomials_of_degree(twom, d);
    const std::vector<Monomial> rows_mono = monomials_of_degree(twom, d + 1);
    std::map<Monomial, int> row_of;
    for (size_t r = 0; r < rows_mono.size(); ++r) row_of.emplace(rows_mono[r], static_cast<int>(r));
    QMat Amat(rows_mono.size() * twom, QVec(unknowns.size(), Q(0)));
    QVec rhs(rows_mono.size() * twom, Q(0));
    for (int i = 0; i < twom; ++i) {
      const Poly lhs = pulled.coeff(std::vector<int>{i}).homogeneous_part(d + 1);
      for (const auto& [mono, cc] : lhs.terms())
        rhs[i * rows_mono.size() + row_of.at(mono)] = cc;
      // theta_flat coefficient i is +z_{m+i} or -z_{i-m}
      const int var = i < m ? m + i : i - m;
      const Q sign = i < m ? Q(1) : Q(-1);
      for (size_t u = 0; u < unknowns.size(); ++u) {
        const Monomial target = unknowns[u] * Monomial::var(twom, var);
        Amat[i * rows_mono.size() + row_of.at(target)][u] = sign;
      }
    }
    const auto sol = solve_linear(Amat, rhs);
    if (!sol) {
      failed_at = d + 1;
      break;
    }
    for (size_t u = 0; u < unknowns.size(); ++u) g.add_term(unknowns[u], (*sol)[u]);
  }

  HyperplaneNormalization res{std::move(psi), g, false, 0, order};
  const DiffForm residual = pulled - theta_flat * g;
  res.exact = residual.is_zero();
  res.residual_order = res.exact ? std::numeric_limits<int>::max() : form_order(residual);
  return res;
}

}  // namespace

HyperplaneNormalization hyperplane_normalize(const Poly& h, const ContactChart& chart,
                                             int order) {
  if (h.nvars() != 2 * chart.m())
    throw std::invalid_argument("hyperplane_normalize: h lives on the 2m hyperplane coordinates");
  if (!h.is_zero() && h.order() < 3)
    throw std::invalid_argument(
        "hyperplane_normalize: h must lie in m_0^3 (quadratic parts belong to the "
        "classification pipeline)");
  return hyperplane_normalize_impl(h, chart, order);
}

ContactJetCheck verify_contact_jet(const CoordChangeJet& psi, const ContactChart& chart,
                                   int order) {
  const int n = chart.nvars();
  if (psi.nvars() != n) throw std::invalid_argument("verify_contact_jet: wrong variable count");
  const DiffForm pulled = pullback(chart.theta(), psi.components());
  ContactJetCheck res;
  // theta's dx_{2m+1} coefficient is -1, so g reads off that slot
  res.g = (-pulled.coeff(std::vector<int>{n - 1})).truncated(order - 1);
  if (is_zero(res.g.constant_term())) return res;  // not a unit: fails
  const DiffForm residual = pulled - chart.theta() * res.g;
  res.ok = residual.is_zero() || form_order(residual) > order;
  return res;
}

}  // namespace lsw
