#include "lsw/monomial.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace lsw {

int Monomial::deg() const { return std::accumulate(e_.begin(), e_.end(), 0); }

long long Monomial::weighted_deg(std::span<const int> w) const {
  assert(w.size() == e_.size());
  long long s = 0;
  for (size_t i = 0; i < e_.size(); ++i) s += static_cast<long long>(w[i]) * e_[i];
  return s;
}

bool Monomial::is_one() const {
  for (int x : e_)
    if (x != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  assert(nvars() == o.nvars());
  Monomial r(*this);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  assert(nvars() == o.nvars());
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  assert(nvars() == o.nvars());
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0 && o.e_[i] > 0) return false;
  return true;
}

Monomial div(const Monomial& a, const Monomial& b) {
  assert(b.divides(a));
  std::vector<int> e(a.nvars());
  for (int i = 0; i < a.nvars(); ++i) e[i] = a.exp(i) - b.exp(i);
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  assert(a.nvars() == b.nvars());
  std::vector<int> e(a.nvars());
  for (int i = 0; i < a.nvars(); ++i) e[i] = std::max(a.exp(i), b.exp(i));
  return Monomial(std::move(e));
}

namespace {

void enumerate(std::vector<int>& e, int pos, int remaining, bool exact,
               std::vector<Monomial>& out) {
  const int n = static_cast<int>(e.size());
  if (pos == n) {
    if (!exact || remaining == 0) out.emplace_back(e);
    return;
  }
  for (int d = 0; d <= remaining; ++d) {
    e[pos] = d;
    enumerate(e, pos + 1, remaining - d, exact, out);
  }
  e[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int deg) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  enumerate(e, 0, deg, true, out);
  return out;
}

std::vector<Monomial> monomials_up_to(int nvars, int maxdeg) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  enumerate(e, 0, maxdeg, false, out);
  return out;
}

MonomialOrder MonomialOrder::weighted(std::vector<int> w) {
  MonomialOrder o(Kind::Weighted);
  o.weights_ = std::move(w);
  return o;
}

MonomialOrder MonomialOrder::elim_block(int head) {
  if (head <= 0) throw std::invalid_argument("elimination block must be nonempty");
  MonomialOrder o(Kind::ElimBlock);
  o.head_ = head;
  return o;
}

namespace {

// +1 when a ranks above b by the reverse-lexicographic tiebreak: the
// rightmost differing exponent is smaller in a.
int revlex_tiebreak(const std::vector<int>& a, const std::vector<int>& b, int lo, int hi) {
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int degrevlex_cmp(const std::vector<int>& a, const std::vector<int>& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  return revlex_tiebreak(a, b, lo, hi);
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const auto& ea = a.exps();
  const auto& eb = b.exps();
  assert(ea.size() == eb.size());
  const int n = static_cast<int>(ea.size());
  switch (kind_) {
    case Kind::DegRevLex:
      return degrevlex_cmp(ea, eb, 0, n);
    case Kind::NegDegRevLex: {
      const int da = a.deg(), db = b.deg();
      if (da != db) return da < db ? 1 : -1;
      return revlex_tiebreak(ea, eb, 0, n);
    }
    case Kind::Weighted: {
      const long long wa = a.weighted_deg(weights_);
      const long long wb = b.weighted_deg(weights_);
      if (wa != wb) return wa < wb ? 1 : -1;
      const int da = a.deg(), db = b.deg();
      if (da != db) return da < db ? 1 : -1;
      return revlex_tiebreak(ea, eb, 0, n);
    }
    case Kind::ElimBlock: {
      if (int c = degrevlex_cmp(ea, eb, 0, head_); c != 0) return c;
      return degrevlex_cmp(ea, eb, head_, n);
    }
  }
  return 0;
}

std::string MonomialOrder::key() const {
  switch (kind_) {
    case Kind::DegRevLex:
      return "drl";
    case Kind::NegDegRevLex:
      return "ds";
    case Kind::Weighted: {
      std::string s = "w";
      for (int w : weights_) s += ":" + std::to_string(w);
      return s;
    }
    case Kind::ElimBlock:
      return "elim:" + std::to_string(head_);
  }
  return "?";
}

bool MonomialOrder::operator==(const MonomialOrder& o) const {
  return kind_ == o.kind_ && weights_ == o.weights_ && head_ == o.head_;
}

}  // namespace lsw
