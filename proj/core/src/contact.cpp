#include "lsw/contact.hpp"

#include <cassert>
#include <stdexcept>

#include "lsw/ideal_ops.hpp"
#include "lsw/linalg.hpp"

namespace lsw {

DiffForm standard_theta(int m, int ambient_nvars) {
  assert(ambient_nvars >= 2 * m + 1);
  DiffForm th(ambient_nvars, 1);
  for (int i = 0; i < m; ++i) {
    th.add(std::vector<int>{i}, Poly::variable(ambient_nvars, m + i));
    th.add(std::vector<int>{m + i}, -Poly::variable(ambient_nvars, i));
  }
  th.add(std::vector<int>{2 * m}, Poly::constant(ambient_nvars, -1));
  return th;
}

DiffForm standard_dtheta(int m, int ambient_nvars) {
  return exterior_derivative(standard_theta(m, ambient_nvars));
}

ContactChart::ContactChart(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("contact chart needs m >= 1");
  theta_ = standard_theta(m, nvars());
  dtheta_ = exterior_derivative(theta_);
}

namespace {

VectorField hamiltonian_field_impl(const Poly& f, int m, int ambient) {
  const int n = 2 * m + 1;
  const Poly f_last = f.derivative(n - 1);
  VectorField v(ambient);
  Poly last(ambient);
  for (int k = 0; k < m; ++k) {
    const Poly fk = f.derivative(k);
    const Poly fmk = f.derivative(m + k);
    const Poly xk = Poly::variable(ambient, k);
    const Poly xmk = Poly::variable(ambient, m + k);
    v.component(k) = (fmk - f_last * xk) / Q(2);
    v.component(m + k) = (-fk - f_last * xmk) / Q(2);
    last += fk * xk + fmk * xmk;
  }
  v.component(n - 1) = (last - f * Q(2)) / Q(2);
  return v;
}

}  // namespace

VectorField hamiltonian_field(const Poly& f, const ContactChart& chart) {
  if (f.nvars() != chart.nvars())
    throw std::invalid_argument("hamiltonian_field: wrong variable count");
  return hamiltonian_field_impl(f, chart.m(), chart.nvars());
}

VectorField hamiltonian_field_param(const Poly& b, const ContactChart& chart) {
  if (b.nvars() != chart.nvars() + 1)
    throw std::invalid_argument("hamiltonian_field_param: expected ring (x_1..x_n, t)");
  return hamiltonian_field_impl(b, chart.m(), chart.nvars() + 1);
}

VfIdentityReport verify_vf_identities(const Poly& f, const ContactChart& chart) {
  const int n = chart.nvars();
  const VectorField v = hamiltonian_field(f, chart);
  const Poly f_last = f.derivative(n - 1);

  VfIdentityReport rep;
  rep.theta_of_vf = contract(v, chart.theta()) == DiffForm::function(f);
  rep.vf_of_f = v.apply(f) == -(f * f_last);
  rep.lie_theta = lie_derivative(v, chart.theta()) == chart.theta() * (-f_last);

  // pairing identity against a symbolic vector w in the ring (x_1..x_n, w_1..w_n)
  const int big = 2 * n;
  VectorField w(big);
  for (int i = 0; i < n; ++i) w.component(i) = Poly::variable(big, n + i);
  VectorField v_big(big);
  for (int i = 0; i < n; ++i) v_big.component(i) = lift(v.component(i), big, 0);
  const DiffForm theta_big = standard_theta(chart.m(), big);
  const DiffForm dtheta_big = standard_dtheta(chart.m(), big);
  const Poly lhs = contract(w, contract(v_big, dtheta_big)).coeff(std::span<const int>{});
  const Poly theta_w = contract(w, theta_big).coeff(std::span<const int>{});
  const Poly df_w = contract(w, exterior_derivative(DiffForm::function(lift(f, big, 0))))
                        .coeff(std::span<const int>{});
  rep.dtheta_pairing = lhs == -(lift(f_last, big, 0) * theta_w) - df_w;
  return rep;
}

bool is_tangent(const VectorField& v, const Ideal& I) {
  assert(v.nvars() == I.nvars());
  for (const Poly& g : I.gens())
    if (!membership(v.apply(g), I)) return false;
  return true;
}

LegendrianParam::LegendrianParam(int m, std::vector<Poly> components)
    : m_(m), comp_(std::move(components)) {
  if (static_cast<int>(comp_.size()) != 2 * m + 1)
    throw std::invalid_argument("LegendrianParam needs 2m+1 components");
  for (Poly& c : comp_) {
    if (c.is_zero()) c = Poly(m);
    if (c.nvars() != m)
      throw std::invalid_argument("LegendrianParam components live in u_1..u_m");
  }
}

bool legendrian_parametric(const LegendrianParam& phi) {
  const DiffForm th = standard_theta(phi.m(), phi.nvars());
  return pullback(th, phi.components()).is_zero();
}

const char* to_string(LegendrianVerdict v) {
  switch (v) {
    case LegendrianVerdict::Legendrian:
      return "legendrian";
    case LegendrianVerdict::NotLegendrian:
      return "not-legendrian";
    case LegendrianVerdict::WrongDimension:
      return "wrong-dimension";
    case LegendrianVerdict::NoSmoothWitness:
      return "wrong-dimension-or-nonreduced";
  }
  return "?";
}

Poly poly_det(const std::vector<std::vector<Poly>>& mat) {
  const int k = static_cast<int>(mat.size());
  assert(k > 0 && static_cast<int>(mat[0].size()) == k);
  const int nv = mat[0][0].nvars();
  if (k == 1) return mat[0][0];
  Poly acc(nv);
  for (int j = 0; j < k; ++j) {
    if (mat[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (int r = 1; r < k; ++r) {
      std::vector<Poly> row;
      for (int c = 0; c < k; ++c)
        if (c != j) row.push_back(mat[r][c]);
      minor.push_back(std::move(row));
    }
    const Poly cof = mat[0][j] * poly_det(minor);
    acc += (j % 2 == 0) ? cof : -cof;
  }
  return acc;
}

namespace {

// All k x k minors of `rows`, streamed through `fn`; returns false early when
// fn does.
template <typename Fn>
bool for_each_minor(const std::vector<std::vector<Poly>>& rows, int k, Fn&& fn) {
  const int nr = static_cast<int>(rows.size());
  const int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
  if (k > nr || k > nc) return true;
  std::vector<int> ri(k), ci(k);
  auto next = [](std::vector<int>& idx, int limit) {
    int i = static_cast<int>(idx.size()) - 1;
    while (i >= 0 && idx[i] == limit - (static_cast<int>(idx.size()) - i)) --i;
    if (i < 0) return false;
    ++idx[i];
    for (size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  for (int i = 0; i < k; ++i) ri[i] = i;
  do {
    for (int i = 0; i < k; ++i) ci[i] = i;
    do {
      std::vector<std::vector<Poly>> sub(k, std::vector<Poly>(k));
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) sub[a][b] = rows[ri[a]][ci[b]];
      if (!fn(poly_det(sub))) return false;
    } while (next(ci, nc));
  } while (next(ri, nr));
  return true;
}

std::vector<std::vector<Poly>> jacobian(const Ideal& I) {
  std::vector<std::vector<Poly>> rows;
  for (const Poly& g : I.gens()) {
    std::vector<Poly> row;
    for (int j = 0; j < I.nvars(); ++j) row.push_back(g.derivative(j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

LegendrianVerdict legendrian_implicit(const Ideal& I, const ContactChart& chart) {
  assert(I.nvars() == chart.nvars());
  if (is_unit_ideal(I)) throw std::invalid_argument("legendrian_implicit: unit ideal");
  const int m = chart.m();
  if (dimension(I) != m) return LegendrianVerdict::WrongDimension;

  std::vector<std::vector<Poly>> jac = jacobian(I);

  // generic smoothness witness: some (m+1)-minor of the Jacobian outside sqrt(I)
  bool witness = !for_each_minor(jac, m + 1, [&](const Poly& d) {
    return !(!d.is_zero() && !radical_membership(d, I));  // keep going until a witness
  });
  if (!witness) return LegendrianVerdict::NoSmoothWitness;

  // stack the theta coefficient row and require rank <= m+1 along Z
  std::vector<std::vector<Poly>> stacked = jac;
  std::vector<Poly> theta_row;
  for (int j = 0; j < I.nvars(); ++j)
    theta_row.push_back(chart.theta().coeff(std::vector<int>{j}));
  stacked.push_back(std::move(theta_row));

  const bool tangent = for_each_minor(stacked, m + 2, [&](const Poly& d) {
    return d.is_zero() || radical_membership(d, I);
  });
  return tangent ? LegendrianVerdict::Legendrian : LegendrianVerdict::NotLegendrian;
}

bool contains_D0(const Ideal& I, const ContactChart& chart) {
  const int n = chart.nvars();
  assert(I.nvars() == n);
  for (const Poly& g : I.gens()) {
    if (!is_zero(g.constant_term()))
      throw std::invalid_argument("contains_D0: generator does not vanish at 0");
    const Poly lin = g.homogeneous_part(1);
    for (const auto& [mono, c] : lin.terms())
      if (mono.exp(n - 1) == 0) return false;  // linear part sticks out of span(x_{2m+1})
  }
  return true;
}

Ideal implicitize(const LegendrianParam& phi, int degree_cap) {
  return kernel_ideal(phi.components(), degree_cap);
}

bool smooth_at_origin(const Ideal& I) {
  const int n = I.nvars();
  QMat jac0;
  for (const Poly& g : I.gens()) {
    if (!is_zero(g.constant_term()))
      throw std::invalid_argument("smooth_at_origin: generator does not vanish at 0");
    QVec row(n, Q(0));
    const Poly lin = g.homogeneous_part(1);
    for (const auto& [mono, c] : lin.terms())
      for (int j = 0; j < n; ++j)
        if (mono.exp(j) == 1) row[j] = c;
    jac0.push_back(std::move(row));
  }
  return rank(jac0) == n - dimension(I);
}

VectorField radial_field(int nvars) {
  VectorField v(nvars);
  for (int i = 0; i < nvars; ++i) v.component(i) = Poly::variable(nvars, i);
  return v;
}

VectorField restrict_to_hyperplane(const VectorField& v, int var) {
  const int n = v.nvars();
  const Poly zero(n);
  // tangency: the var-component must vanish on {x_var = 0}
  if (!substitute_var(v.component(var), var, zero).is_zero())
    throw std::invalid_argument("field is not tangent to the hyperplane");
  VectorField r(n - 1);
  int out = 0;
  for (int i = 0; i < n; ++i) {
    if (i == var) continue;
    r.component(out++) = drop_var(substitute_var(v.component(i), var, zero), var);
  }
  return r;
}

}  // namespace lsw
