#pragma once

#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lsw/monomial.hpp"
#include "lsw/rational.hpp"

namespace lsw {

// Multivariate polynomial over Q in canonical form: a term map with no stored
// zero coefficients. Equality is structural. All arithmetic is exact.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nv_(nvars) {}

  static Poly constant(int nvars, const Q& c);
  static Poly variable(int nvars, int i);
  static Poly monomial(const Monomial& m, const Q& c);

  int nvars() const { return nv_; }
  bool is_zero() const { return ts_.empty(); }
  int nterms() const { return static_cast<int>(ts_.size()); }
  const std::map<Monomial, Q>& terms() const { return ts_; }

  Q coeff(const Monomial& m) const;
  Q constant_term() const;
  bool is_constant() const;
  bool is_homogeneous() const;

  // Max/min total degree over terms; degree() is -1 and order() is INT_MAX
  // for the zero polynomial.
  int degree() const;
  int order() const;

  Poly homogeneous_part(int d) const;
  Poly lowest_form() const;
  Poly truncated(int maxdeg) const;  // keep terms of total degree <= maxdeg

  Poly derivative(int i) const;

  // Composition: images[i] replaces variable i. All images must share a
  // common variable count, which becomes the result's.
  Poly substitute(std::span<const Poly> images) const;
  Poly substitute_trunc(std::span<const Poly> images, int maxdeg) const;
  Q eval(std::span<const Q> point) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Q& c) const;
  Poly operator/(const Q& c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly pow(int k) const;

  std::pair<Monomial, Q> leading_term(const MonomialOrder& ord) const;
  Monomial leading_monomial(const MonomialOrder& ord) const;
  Poly monic(const MonomialOrder& ord) const;

  void add_term(const Monomial& m, const Q& c);

  bool operator==(const Poly&) const = default;

 private:
  int nv_ = 0;
  std::map<Monomial, Q> ts_;
};

inline Poly operator*(const Q& c, const Poly& p) { return p * c; }

// Variable reindexing helpers for ring extensions (Rabinowitsch variables,
// elimination blocks, symbolic vectors).
Poly lift(const Poly& p, int new_nvars, int offset);
// Substitute a single variable by `value` (a poly in the same ring).
Poly substitute_var(const Poly& p, int var, const Poly& value);
// Remove a variable the polynomial does not use, reindexing the rest.
Poly drop_var(const Poly& p, int var);

}  // namespace lsw
