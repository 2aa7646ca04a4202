#include "lsw/poly.hpp"

#include <cassert>

namespace lsw {

Poly Poly::constant(int nvars, const Q& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  p.add_term(Monomial::var(nvars, i), 1);
  return p;
}

Poly Poly::monomial(const Monomial& m, const Q& c) {
  Poly p(m.nvars());
  p.add_term(m, c);
  return p;
}

Q Poly::coeff(const Monomial& m) const {
  auto it = ts_.find(m);
  return it == ts_.end() ? Q(0) : it->second;
}

Q Poly::constant_term() const { return coeff(Monomial(nv_)); }

bool Poly::is_constant() const {
  return ts_.empty() || (ts_.size() == 1 && ts_.begin()->first.is_one());
}

bool Poly::is_homogeneous() const {
  if (ts_.empty()) return true;
  const int d = ts_.begin()->first.deg();
  for (const auto& [m, c] : ts_)
    if (m.deg() != d) return false;
  return true;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : ts_) d = std::max(d, m.deg());
  return d;
}

int Poly::order() const {
  int d = std::numeric_limits<int>::max();
  for (const auto& [m, c] : ts_) d = std::min(d, m.deg());
  return d;
}

Poly Poly::homogeneous_part(int d) const {
  Poly r(nv_);
  for (const auto& [m, c] : ts_)
    if (m.deg() == d) r.add_term(m, c);
  return r;
}

Poly Poly::lowest_form() const {
  if (ts_.empty()) return Poly(nv_);
  return homogeneous_part(order());
}

Poly Poly::truncated(int maxdeg) const {
  Poly r(nv_);
  for (const auto& [m, c] : ts_)
    if (m.deg() <= maxdeg) r.add_term(m, c);
  return r;
}

Poly Poly::derivative(int i) const {
  Poly r(nv_);
  for (const auto& [m, c] : ts_) {
    const int e = m.exp(i);
    if (e == 0) continue;
    std::vector<int> exps = m.exps();
    exps[i] -= 1;
    r.add_term(Monomial(std::move(exps)), c * e);
  }
  return r;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  return substitute_trunc(images, std::numeric_limits<int>::max());
}

Poly Poly::substitute_trunc(std::span<const Poly> images, int maxdeg) const {
  assert(static_cast<int>(images.size()) == nv_);
  const int out_nv = nv_ == 0 ? 0 : images[0].nvars();
  for (const Poly& im : images) assert(im.nvars() == out_nv);
  Poly acc(out_nv);
  for (const auto& [m, c] : ts_) {
    Poly term = Poly::constant(out_nv, c);
    for (int i = 0; i < nv_ && !term.is_zero(); ++i) {
      for (int k = 0; k < m.exp(i); ++k) {
        term = term * images[i];
        if (maxdeg != std::numeric_limits<int>::max()) term = term.truncated(maxdeg);
      }
    }
    acc += term;
  }
  if (maxdeg != std::numeric_limits<int>::max()) acc = acc.truncated(maxdeg);
  return acc;
}

Q Poly::eval(std::span<const Q> point) const {
  assert(static_cast<int>(point.size()) == nv_);
  Q acc(0);
  for (const auto& [m, c] : ts_) {
    Q t = c;
    for (int i = 0; i < nv_; ++i)
      for (int k = 0; k < m.exp(i); ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly r(nv_);
  for (const auto& [m, c] : ts_) r.ts_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*this);
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r(*this);
  r -= o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  assert(nv_ == o.nv_ || is_zero() || o.is_zero());
  if (o.is_zero()) return *this;
  if (is_zero()) nv_ = o.nv_;
  for (const auto& [m, c] : o.ts_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  assert(nv_ == o.nv_ || is_zero() || o.is_zero());
  if (o.is_zero()) return *this;
  if (is_zero()) nv_ = o.nv_;
  for (const auto& [m, c] : o.ts_) add_term(m, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  assert(nv_ == o.nv_);
  Poly r(nv_);
  for (const auto& [ma, ca] : ts_)
    for (const auto& [mb, cb] : o.ts_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::operator*(const Q& c) const {
  Poly r(nv_);
  if (lsw::is_zero(c)) return r;
  for (const auto& [m, v] : ts_) r.ts_.emplace(m, v * c);
  return r;
}

Poly Poly::operator/(const Q& c) const {
  assert(!lsw::is_zero(c));
  Poly r(nv_);
  for (const auto& [m, v] : ts_) r.ts_.emplace(m, v / c);
  return r;
}

Poly Poly::pow(int k) const {
  assert(k >= 0);
  Poly r = Poly::constant(nv_, 1);
  for (int i = 0; i < k; ++i) r = r * (*this);
  return r;
}

std::pair<Monomial, Q> Poly::leading_term(const MonomialOrder& ord) const {
  assert(!ts_.empty());
  auto best = ts_.begin();
  for (auto it = std::next(ts_.begin()); it != ts_.end(); ++it)
    if (ord.compare(it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

Monomial Poly::leading_monomial(const MonomialOrder& ord) const {
  return leading_term(ord).first;
}

Poly Poly::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  return *this / leading_term(ord).second;
}

void Poly::add_term(const Monomial& m, const Q& c) {
  assert(m.nvars() == nv_);
  if (lsw::is_zero(c)) return;
  auto [it, inserted] = ts_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (lsw::is_zero(it->second)) ts_.erase(it);
  }
}

Poly lift(const Poly& p, int new_nvars, int offset) {
  assert(offset >= 0 && offset + p.nvars() <= new_nvars);
  Poly r(new_nvars);
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(new_nvars, 0);
    for (int i = 0; i < p.nvars(); ++i) e[offset + i] = m.exp(i);
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

Poly substitute_var(const Poly& p, int var, const Poly& value) {
  assert(value.nvars() == p.nvars());
  Poly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e = m.exps();
    const int k = e[var];
    e[var] = 0;
    Poly t = Poly::monomial(Monomial(std::move(e)), c);
    for (int i = 0; i < k; ++i) t = t * value;
    r += t;
  }
  return r;
}

Poly drop_var(const Poly& p, int var) {
  Poly r(p.nvars() - 1);
  for (const auto& [m, c] : p.terms()) {
    assert(m.exp(var) == 0);
    std::vector<int> e;
    e.reserve(p.nvars() - 1);
    for (int i = 0; i < p.nvars(); ++i)
      if (i != var) e.push_back(m.exp(i));
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

}  // namespace lsw
