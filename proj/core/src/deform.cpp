#include "lsw/deform.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>

#include "lsw/linalg.hpp"

namespace lsw {

namespace {

int degree_in(const Poly& p, int var) {
  int d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m.exp(var));
  return d;
}

Poly truncate_in(const Poly& p, int var, int maxdeg) {
  Poly r(p.nvars());
  for (const auto& [m, c] : p.terms())
    if (m.exp(var) <= maxdeg) r.add_term(m, c);
  return r;
}

// coefficient of var^k, with the var-slot zeroed out (same ring)
Poly coeff_of_power(const Poly& p, int var, int k) {
  Poly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m.exp(var) != k) continue;
    std::vector<int> e = m.exps();
    e[var] = 0;
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

Poly integrate_in(const Poly& p, int var) {
  Poly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e = m.exps();
    e[var] += 1;
    r.add_term(Monomial(std::move(e)), c / Q(e[var]));
  }
  return r;
}

int max_x_degree(const Poly& p, int tvar) {
  int d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m.deg() - m.exp(tvar));
  return d;
}

Poly truncate_x(const Poly& p, int tvar, int maxdeg) {
  Poly r(p.nvars());
  for (const auto& [m, c] : p.terms())
    if (m.deg() - m.exp(tvar) <= maxdeg) r.add_term(m, c);
  return r;
}

}  // namespace

FamilyParam::FamilyParam(int m, std::vector<Poly> components)
    : m_(m), comp_(std::move(components)) {
  if (static_cast<int>(comp_.size()) != 2 * m + 1)
    throw std::invalid_argument("FamilyParam needs 2m+1 components");
  for (Poly& c : comp_) {
    if (c.is_zero()) c = Poly(m + 1);
    if (c.nvars() != m + 1)
      throw std::invalid_argument("FamilyParam components live in (u_1..u_m, t)");
  }
}

std::vector<Poly> FamilyParam::images_with_t() const {
  std::vector<Poly> images = comp_;
  images.push_back(Poly::variable(m_ + 1, tvar()));
  return images;
}

bool family_check(const FamilyParam& F) {
  const DiffForm th = standard_theta(F.m(), F.nvars());
  // u-differential only: theta_i(Phi) paired with dPhi/du_j, t held fixed
  for (int j = 0; j < F.m(); ++j) {
    Poly acc(F.m() + 1);
    for (int i = 0; i < F.nvars(); ++i) {
      const Poly coeff = th.coeff(std::vector<int>{i}).substitute(F.components());
      acc += coeff * F.components()[i].derivative(j);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

Poly deformation_function(const FamilyParam& F) {
  if (!family_check(F))
    throw std::invalid_argument("deformation_function: not a Legendrian family");
  const DiffForm th = standard_theta(F.m(), F.nvars());
  Poly h(F.m() + 1);
  for (int i = 0; i < F.nvars(); ++i) {
    const Poly coeff = th.coeff(std::vector<int>{i}).substitute(F.components());
    h += coeff * F.components()[i].derivative(F.tvar());
  }
  return h;
}

std::optional<HamiltonianLift> hamiltonian_lift(const FamilyParam& F, int x_degree,
                                                int t_degree) {
  const int n = F.nvars();
  const Poly h = deformation_function(F);
  if (t_degree < 0) t_degree = degree_in(h, F.tvar());

  // unknown monomials x^a t^k, low x-degree first for a canonical solution
  std::vector<std::pair<Monomial, int>> unknowns;
  for (const Monomial& xm : monomials_up_to(n, x_degree))
    for (int k = 0; k <= t_degree; ++k) unknowns.emplace_back(xm, k);
  std::sort(unknowns.begin(), unknowns.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });

  const std::vector<Poly> images = F.images_with_t();
  auto xt_monomial = [&](const Monomial& xm, int k) {
    std::vector<int> e = xm.exps();
    e.push_back(k);
    return Monomial(std::move(e));
  };
  std::vector<Poly> composed;
  std::map<Monomial, int> row_of;
  auto touch = [&](const Poly& p) {
    for (const auto& [m, c] : p.terms()) row_of.emplace(m, 0);
  };
  for (const auto& [xm, k] : unknowns) {
    Poly e = Poly::monomial(xt_monomial(xm, k), 1).substitute(images);
    touch(e);
    composed.push_back(std::move(e));
  }
  touch(h);
  int next = 0;
  for (auto& [mono, idx] : row_of) idx = next++;

  QMat A(row_of.size(), QVec(unknowns.size(), Q(0)));
  QVec rhs(row_of.size(), Q(0));
  for (size_t u = 0; u < composed.size(); ++u)
    for (const auto& [mono, c] : composed[u].terms()) A[row_of.at(mono)][u] = c;
  for (const auto& [mono, c] : h.terms()) rhs[row_of.at(mono)] = c;

  const auto sol = solve_linear(A, rhs);
  if (!sol) return std::nullopt;

  Poly b(n + 1);
  for (size_t u = 0; u < unknowns.size(); ++u) {
    if (is_zero((*sol)[u])) continue;
    b.add_term(xt_monomial(unknowns[u].first, unknowns[u].second), (*sol)[u]);
  }
  return HamiltonianLift{std::move(b), x_degree, t_degree};
}

bool verify_lift_tangency(const FamilyParam& F, const HamiltonianLift& L) {
  const int n = F.nvars();
  const int m = F.m();
  const ContactChart chart(m);
  const VectorField v = hamiltonian_field_param(L.b, chart);
  const std::vector<Poly> images = F.images_with_t();

  // columns: dPhi/du_1 .. dPhi/du_m, then v^b(Phi) - dPhi/dt
  std::vector<std::vector<Poly>> cols;
  for (int j = 0; j < m; ++j) {
    std::vector<Poly> col;
    for (int i = 0; i < n; ++i) col.push_back(F.components()[i].derivative(j));
    cols.push_back(std::move(col));
  }
  std::vector<Poly> defect;
  for (int i = 0; i < n; ++i)
    defect.push_back(v.component(i).substitute(images) -
                     F.components()[i].derivative(F.tvar()));
  cols.push_back(std::move(defect));

  // every (m+1)x(m+1) row selection must be singular as a polynomial matrix
  std::vector<int> rows(m + 1);
  for (int i = 0; i <= m; ++i) rows[i] = i;
  auto advance = [&]() {
    int i = m;
    while (i >= 0 && rows[i] == n - (m + 1 - i)) --i;
    if (i < 0) return false;
    ++rows[i];
    for (int j = i + 1; j <= m; ++j) rows[j] = rows[j - 1] + 1;
    return true;
  };
  do {
    std::vector<std::vector<Poly>> sub;
    for (int a = 0; a <= m; ++a) {
      std::vector<Poly> r;
      for (int b = 0; b <= m; ++b) r.push_back(cols[b][rows[a]]);
      sub.push_back(std::move(r));
    }
    if (!poly_det(sub).is_zero()) return false;
  } while (advance());
  return true;
}

TrivializationResult trivialize_jet(const FamilyParam& F, const HamiltonianLift& L,
                                    int t_order, int x_degree_cap) {
  if (!verify_lift_tangency(F, L))
    throw std::invalid_argument("trivialize_jet: lift fails the tangency check");
  const int n = F.nvars();
  const int m = F.m();
  const int tv = n;  // t-slot in the (x,t) ring
  const ContactChart chart(m);
  const VectorField v = hamiltonian_field_param(L.b, chart);

  TrivializationResult res;
  res.t_order = t_order;

  // Picard iteration: Psi = x + int_0^t v(Psi(x,s), s) ds, as a t-jet
  std::vector<Poly> psi;
  for (int i = 0; i < n; ++i) psi.push_back(Poly::variable(n + 1, i));
  for (int iter = 0; iter <= t_order; ++iter) {
    std::vector<Poly> images = psi;
    images.push_back(Poly::variable(n + 1, tv));
    std::vector<Poly> next;
    bool stable = true;
    for (int i = 0; i < n; ++i) {
      Poly integrand = truncate_in(v.component(i).substitute(images), tv, t_order - 1);
      const Poly capped = truncate_x(integrand, tv, x_degree_cap);
      if (capped != integrand) res.x_cap_hit = true;
      Poly updated = Poly::variable(n + 1, i) + integrate_in(capped, tv);
      updated = truncate_in(updated, tv, t_order);
      stable = stable && updated == psi[i];
      next.push_back(std::move(updated));
    }
    psi = std::move(next);
    if (stable) break;
  }
  res.flow = psi;

  // window where truncated computations are exact
  int vdeg = 0;
  for (int i = 0; i < n; ++i) vdeg = std::max(vdeg, max_x_degree(v.component(i), tv));
  const int window = res.x_cap_hit ? x_degree_cap - vdeg : std::numeric_limits<int>::max();
  auto windowed = [&](const Poly& p) {
    return res.x_cap_hit ? truncate_x(p, tv, window) : p;
  };

  // flow property dPsi/dt = v(Psi, t) mod t^order
  {
    std::vector<Poly> images = psi;
    images.push_back(Poly::variable(n + 1, tv));
    res.flow_ok = true;
    for (int i = 0; i < n; ++i) {
      const Poly defect = truncate_in(
          psi[i].derivative(tv) - v.component(i).substitute(images), tv, t_order - 1);
      if (!windowed(defect).is_zero()) res.flow_ok = false;
    }
  }

  // contact property: pullback of theta in the x-slots equals g * theta
  {
    std::vector<Poly> theta_coeffs;
    for (int i = 0; i < n; ++i)
      theta_coeffs.push_back(lift(chart.theta().coeff(std::vector<int>{i}), n + 1, 0));
    std::vector<Poly> pulled(n, Poly(n + 1));
    for (int j = 0; j < n; ++j) {
      const Poly cj = theta_coeffs[j].substitute(
          [&] {
            std::vector<Poly> im = psi;
            im.push_back(Poly::variable(n + 1, tv));
            return im;
          }());
      for (int i = 0; i < n; ++i) {
        const Poly d = psi[j].derivative(i);
        if (!d.is_zero()) pulled[i] += cj * d;
      }
    }
    res.contact_factor = truncate_in(-pulled[n - 1], tv, t_order);
    res.contact_ok = !is_zero(res.contact_factor.constant_term());
    for (int i = 0; i < n && res.contact_ok; ++i) {
      const Poly defect =
          truncate_in(pulled[i] - res.contact_factor * theta_coeffs[i], tv, t_order);
      if (!windowed(defect).is_zero()) res.contact_ok = false;
    }
  }

  // reparametrization: Psi_t(Phi(u,0)) = Phi(sigma(u,t), t) mod t^{order+1}
  {
    const int pu = m + 1;  // parameter ring (u, t)
    std::vector<Poly> phi0;
    for (const Poly& c : F.components())
      phi0.push_back(substitute_var(c, F.tvar(), Poly(pu)));
    std::vector<Poly> target;  // T_i(u,t) = Psi_i(Phi(u,0), t)
    {
      std::vector<Poly> im = phi0;
      im.push_back(Poly::variable(pu, F.tvar()));
      for (int i = 0; i < n; ++i) target.push_back(psi[i].substitute(im));
    }
    std::vector<Poly> sigma;
    for (int j = 0; j < m; ++j) sigma.push_back(Poly::variable(pu, j));

    // Jacobian of Phi at t=0 in the u-ring
    std::vector<std::vector<Poly>> jac(n, std::vector<Poly>(m));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        jac[i][j] = drop_var(phi0[i].derivative(j), F.tvar());

    res.reparam_ok = true;
    for (int k = 1; k <= t_order && res.reparam_ok; ++k) {
      std::vector<Poly> im = sigma;
      im.push_back(Poly::variable(pu, F.tvar()));
      std::vector<Poly> rk;  // t^k coefficient of the defect, in the u-ring
      bool all_zero = true;
      for (int i = 0; i < n; ++i) {
        const Poly defect = target[i] - F.components()[i].substitute(im);
        Poly c = drop_var(coeff_of_power(truncate_in(defect, F.tvar(), k), F.tvar(), k),
                          F.tvar());
        all_zero = all_zero && c.is_zero();
        rk.push_back(std::move(c));
      }
      if (all_zero) continue;
      int rdeg = 0;
      for (const Poly& r : rk) rdeg = std::max(rdeg, r.degree());
      bool solved = false;
      for (int extra = 0; extra <= 2 && !solved; ++extra) {
        const int bound = rdeg + extra;
        const std::vector<Monomial> mons = monomials_up_to(m, bound);
        std::map<Monomial, int> row_of;
        auto touch = [&](const Poly& p) {
          for (const auto& [mo, c] : p.terms()) row_of.emplace(mo, 0);
        };
        for (int i = 0; i < n; ++i) {
          touch(rk[i]);
          for (int j = 0; j < m; ++j)
            for (const Monomial& mu : mons) touch(jac[i][j] * Poly::monomial(mu, 1));
        }
        int nextrow = 0;
        for (auto& [mo, idx] : row_of) idx = nextrow++;
        const int cols = m * static_cast<int>(mons.size());
        QMat A(row_of.size() * n, QVec(cols, Q(0)));
        QVec rhs(row_of.size() * n, Q(0));
        for (int i = 0; i < n; ++i) {
          for (const auto& [mo, c] : rk[i].terms())
            rhs[i * row_of.size() + row_of.at(mo)] = c;
          for (int j = 0; j < m; ++j)
            for (size_t s = 0; s < mons.size(); ++s) {
              const Poly prod = jac[i][j] * Poly::monomial(mons[s], 1);
              for (const auto& [mo, c] : prod.terms())
                A[i * row_of.size() + row_of.at(mo)][j * mons.size() + s] = c;
            }
        }
        const auto sol = solve_linear(A, rhs);
        if (!sol) continue;
        for (int j = 0; j < m; ++j) {
          Poly sk(pu);
          for (size_t s = 0; s < mons.size(); ++s) {
            if (is_zero((*sol)[j * mons.size() + s])) continue;
            std::vector<int> e = mons[s].exps();
            e.push_back(k);
            sk.add_term(Monomial(std::move(e)), (*sol)[j * mons.size() + s]);
          }
          sigma[j] += sk;
        }
        solved = true;
      }
      if (!solved) {
        res.reparam_ok = false;
        res.obstructed_order = k;
      }
    }
    if (res.reparam_ok) {
      // final direct verification of the reparametrization identity
      std::vector<Poly> im = sigma;
      im.push_back(Poly::variable(pu, F.tvar()));
      for (int i = 0; i < n && res.reparam_ok; ++i) {
        const Poly defect =
            truncate_in(target[i] - F.components()[i].substitute(im), F.tvar(), t_order);
        if (!defect.is_zero()) res.reparam_ok = false;
      }
    }
    res.sigma = std::move(sigma);
  }
  return res;
}

}  // namespace lsw
