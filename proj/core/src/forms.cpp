#include "lsw/forms.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lsw {

VectorField::VectorField(std::vector<Poly> components) : comp_(std::move(components)) {
  for (const Poly& p : comp_) assert(p.nvars() == nvars());
}

bool VectorField::is_zero() const {
  for (const Poly& p : comp_)
    if (!p.is_zero()) return false;
  return true;
}

VectorField VectorField::operator+(const VectorField& o) const {
  assert(nvars() == o.nvars());
  VectorField r(nvars());
  for (int i = 0; i < nvars(); ++i) r.comp_[i] = comp_[i] + o.comp_[i];
  return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
  assert(nvars() == o.nvars());
  VectorField r(nvars());
  for (int i = 0; i < nvars(); ++i) r.comp_[i] = comp_[i] - o.comp_[i];
  return r;
}

VectorField VectorField::operator*(const Q& c) const {
  VectorField r(nvars());
  for (int i = 0; i < nvars(); ++i) r.comp_[i] = comp_[i] * c;
  return r;
}

Poly VectorField::apply(const Poly& f) const {
  assert(f.nvars() == nvars());
  Poly r(nvars());
  for (int i = 0; i < nvars(); ++i) r += comp_[i] * f.derivative(i);
  return r;
}

DiffForm::DiffForm(int nvars, int degree) : nv_(nvars), deg_(degree) {
  if (degree < 0 || degree > 2) throw std::invalid_argument("form degree must be 0, 1 or 2");
}

DiffForm DiffForm::function(const Poly& f) {
  DiffForm w(f.nvars(), 0);
  if (!f.is_zero()) w.coeffs_.emplace(std::vector<int>{}, f);
  return w;
}

DiffForm DiffForm::dx(int nvars, int i) {
  DiffForm w(nvars, 1);
  w.add(std::vector<int>{i}, Poly::constant(nvars, 1));
  return w;
}

Poly DiffForm::coeff(std::span<const int> idx) const {
  assert(static_cast<int>(idx.size()) == deg_);
  auto it = coeffs_.find(std::vector<int>(idx.begin(), idx.end()));
  return it == coeffs_.end() ? Poly(nv_) : it->second;
}

void DiffForm::add(std::span<const int> idx, const Poly& p) {
  assert(static_cast<int>(idx.size()) == deg_);
  if (p.is_zero()) return;
  std::vector<int> key(idx.begin(), idx.end());
  Q sign(1);
  if (deg_ == 2) {
    if (key[0] == key[1]) return;  // dx_i ^ dx_i = 0
    if (key[0] > key[1]) {
      std::swap(key[0], key[1]);
      sign = -1;
    }
  }
  auto [it, inserted] = coeffs_.emplace(key, p * sign);
  if (!inserted) {
    it->second += p * sign;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

DiffForm DiffForm::operator+(const DiffForm& o) const {
  assert(nv_ == o.nv_ && deg_ == o.deg_);
  DiffForm r(*this);
  for (const auto& [k, p] : o.coeffs_) r.add(k, p);
  return r;
}

DiffForm DiffForm::operator-(const DiffForm& o) const {
  assert(nv_ == o.nv_ && deg_ == o.deg_);
  DiffForm r(*this);
  for (const auto& [k, p] : o.coeffs_) r.add(k, -p);
  return r;
}

DiffForm DiffForm::operator*(const Q& c) const {
  DiffForm r(nv_, deg_);
  if (lsw::is_zero(c)) return r;
  for (const auto& [k, p] : coeffs_) r.coeffs_.emplace(k, p * c);
  return r;
}

DiffForm DiffForm::operator*(const Poly& f) const {
  DiffForm r(nv_, deg_);
  for (const auto& [k, p] : coeffs_) r.add(k, p * f);
  return r;
}

DiffForm exterior_derivative(const DiffForm& form) {
  if (form.degree() >= 2)
    throw std::invalid_argument("exterior derivative of a 2-form needs degree-3 forms");
  const int n = form.nvars();
  DiffForm r(n, form.degree() + 1);
  for (const auto& [k, p] : form.coeffs()) {
    for (int i = 0; i < n; ++i) {
      const Poly dp = p.derivative(i);
      if (dp.is_zero()) continue;
      std::vector<int> idx;
      idx.push_back(i);
      idx.insert(idx.end(), k.begin(), k.end());
      r.add(idx, dp);
    }
  }
  return r;
}

DiffForm contract(const VectorField& v, const DiffForm& form) {
  if (form.degree() == 0) throw std::invalid_argument("cannot contract into a 0-form");
  assert(v.nvars() == form.nvars());
  const int n = form.nvars();
  DiffForm r(n, form.degree() - 1);
  if (form.degree() == 1) {
    Poly acc(n);
    for (const auto& [k, p] : form.coeffs()) acc += p * v.component(k[0]);
    return DiffForm::function(acc);
  }
  // i_v (p dx_i ^ dx_j) = p (v_i dx_j - v_j dx_i)
  for (const auto& [k, p] : form.coeffs()) {
    r.add(std::vector<int>{k[1]}, p * v.component(k[0]));
    r.add(std::vector<int>{k[0]}, -(p * v.component(k[1])));
  }
  return r;
}

DiffForm lie_derivative(const VectorField& v, const DiffForm& form) {
  if (form.degree() >= 2)
    throw std::invalid_argument("Lie derivative of a 2-form needs degree-3 forms");
  if (form.degree() == 0) return contract(v, exterior_derivative(form));
  return contract(v, exterior_derivative(form)) +
         exterior_derivative(contract(v, form));
}

std::optional<long long> weight(const Poly& p, std::span<const int> w) {
  if (p.is_zero()) return std::nullopt;
  std::optional<long long> best;
  for (const auto& [m, c] : p.terms()) {
    const long long t = m.weighted_deg(w);
    if (!best || t < *best) best = t;
  }
  return best;
}

std::optional<long long> weight(const DiffForm& form, std::span<const int> w) {
  std::optional<long long> best;
  for (const auto& [k, p] : form.coeffs()) {
    auto base = weight(p, w);
    if (!base) continue;
    long long t = *base;
    for (int i : k) t += w[i];
    if (!best || t < *best) best = t;
  }
  return best;
}

DiffForm pullback(const DiffForm& form, std::span<const Poly> images) {
  assert(static_cast<int>(images.size()) == form.nvars());
  if (form.degree() >= 2) throw std::invalid_argument("pullback implemented for degrees 0 and 1");
  const int src_nv = images.empty() ? 0 : images[0].nvars();
  if (form.degree() == 0) {
    Poly f = form.coeff(std::span<const int>{});
    return DiffForm::function(f.substitute(images));
  }
  DiffForm r(src_nv, 1);
  for (const auto& [k, p] : form.coeffs()) {
    const Poly a = p.substitute(images);  // coefficient composed with the map
    for (int j = 0; j < src_nv; ++j) {
      const Poly d = images[k[0]].derivative(j);
      if (!d.is_zero()) r.add(std::vector<int>{j}, a * d);
    }
  }
  return r;
}

}  // namespace lsw
