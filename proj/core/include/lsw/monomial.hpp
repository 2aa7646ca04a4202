#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace lsw {

// Exponent vector of a power product. The ambient variable count is part of
// the value; operations on mismatched variable counts are programming errors.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

  static Monomial var(int nvars, int i, int power = 1) {
    Monomial m(nvars);
    m.e_[i] = power;
    return m;
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int exp(int i) const { return e_[i]; }
  const std::vector<int>& exps() const { return e_; }

  int deg() const;
  long long weighted_deg(std::span<const int> w) const;
  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  // Structural ordering (plain lexicographic on exponent vectors); used for
  // canonical storage, not as a monomial order.
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<int> e_;
};

// a / b, requires b.divides(a).
Monomial div(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

std::vector<Monomial> monomials_of_degree(int nvars, int deg);
std::vector<Monomial> monomials_up_to(int nvars, int maxdeg);

// Monomial orders. Global orders (degrevlex, elimination blocks) are
// well-orders and drive Buchberger; the local order negdegrevlex ranks lower
// total degree higher and drives Mora's algorithm; weighted orders rank lower
// weight higher and back the weight function.
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, NegDegRevLex, Weighted, ElimBlock };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex); }
  static MonomialOrder negdegrevlex() { return MonomialOrder(Kind::NegDegRevLex); }
  static MonomialOrder weighted(std::vector<int> w);
  // Eliminates the first `head` variables: any monomial involving them beats
  // any monomial that does not.
  static MonomialOrder elim_block(int head);

  Kind kind() const { return kind_; }
  bool global() const { return kind_ == Kind::DegRevLex || kind_ == Kind::ElimBlock; }
  const std::vector<int>& weights() const { return weights_; }
  int head() const { return head_; }

  // -1, 0, +1 with +1 meaning a ranks above b (a is "more leading").
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string key() const;  // stable identifier, used for basis caches
  bool operator==(const MonomialOrder& o) const;

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}
  Kind kind_;
  std::vector<int> weights_;
  int head_ = 0;
};

}  // namespace lsw
