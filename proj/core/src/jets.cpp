#include "lsw/jets.hpp"

#include <cassert>
#include <stdexcept>

namespace lsw {

CoordChangeJet::CoordChangeJet(std::vector<Poly> components, int order)
    : nv_(static_cast<int>(components.size())), order_(order), comp_(std::move(components)) {
  if (order_ < 1) throw std::invalid_argument("jet order must be >= 1");
  for (Poly& c : comp_) {
    if (c.is_zero()) c = Poly(nv_);
    if (c.nvars() != nv_)
      throw std::invalid_argument("coordinate change: component variable count mismatch");
    if (!is_zero(c.constant_term()))
      throw std::invalid_argument("coordinate change must fix the origin");
    c = c.truncated(order_);
  }
  if (!lsw::inverse(linear_matrix()))
    throw std::invalid_argument("coordinate change needs an invertible linear part");
}

CoordChangeJet CoordChangeJet::identity(int nvars, int order) {
  std::vector<Poly> comps;
  for (int i = 0; i < nvars; ++i) comps.push_back(Poly::variable(nvars, i));
  return CoordChangeJet(std::move(comps), order);
}

QMat CoordChangeJet::linear_matrix() const {
  QMat L(nv_, QVec(nv_, Q(0)));
  for (int i = 0; i < nv_; ++i) {
    const Poly lin = comp_[i].homogeneous_part(1);
    for (const auto& [m, c] : lin.terms())
      for (int j = 0; j < nv_; ++j)
        if (m.exp(j) == 1) L[i][j] = c;
  }
  return L;
}

CoordChangeJet CoordChangeJet::compose(const CoordChangeJet& inner) const {
  if (nv_ != inner.nv_ || order_ != inner.order_)
    throw std::invalid_argument("jet composition needs matching rings and orders");
  std::vector<Poly> comps;
  for (const Poly& c : comp_) comps.push_back(c.substitute_trunc(inner.comp_, order_));
  return CoordChangeJet(std::move(comps), order_);
}

Poly CoordChangeJet::apply(const Poly& p) const {
  assert(p.nvars() == nv_);
  return p.substitute_trunc(comp_, order_);
}

CoordChangeJet CoordChangeJet::inverse() const {
  const auto Linv = lsw::inverse(linear_matrix());
  assert(Linv.has_value());
  std::vector<Poly> inv(nv_, Poly(nv_));
  for (int i = 0; i < nv_; ++i)
    for (int j = 0; j < nv_; ++j)
      if (!is_zero((*Linv)[i][j])) inv[i] += Poly::variable(nv_, j) * (*Linv)[i][j];

  for (int iter = 0; iter < order_; ++iter) {
    std::vector<Poly> err(nv_, Poly(nv_));
    bool clean = true;
    for (int i = 0; i < nv_; ++i) {
      err[i] = comp_[i].substitute_trunc(inv, order_) - Poly::variable(nv_, i);
      clean = clean && err[i].is_zero();
    }
    if (clean) break;
    for (int i = 0; i < nv_; ++i) {
      Poly delta(nv_);
      for (int j = 0; j < nv_; ++j)
        if (!is_zero((*Linv)[i][j])) delta += err[j] * (*Linv)[i][j];
      inv[i] = (inv[i] - delta).truncated(order_);
    }
  }
  CoordChangeJet result(std::move(inv), order_);
  // the jet group has two-sided inverses; verify both compositions
  for (int i = 0; i < nv_; ++i) {
    assert(compose(result).components()[i] == Poly::variable(nv_, i));
    assert(result.compose(*this).components()[i] == Poly::variable(nv_, i));
  }
  return result;
}

VectorField pushforward(const VectorField& v, const CoordChangeJet& phi) {
  assert(v.nvars() == phi.nvars());
  const int n = phi.nvars();
  const CoordChangeJet inv = phi.inverse();
  VectorField out(n);
  for (int i = 0; i < n; ++i) {
    Poly acc(n);
    for (int j = 0; j < n; ++j) {
      const Poly d = phi.components()[i].derivative(j);
      if (!d.is_zero() && !v.component(j).is_zero()) acc += d * v.component(j);
    }
    out.component(i) = inv.apply(acc.truncated(phi.order()));
  }
  return out;
}

}  // namespace lsw
