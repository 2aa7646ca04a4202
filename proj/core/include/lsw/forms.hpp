#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lsw/poly.hpp"

namespace lsw {

// Polynomial vector field: one component per ambient variable.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(int nvars) : comp_(nvars, Poly(nvars)) {}
  explicit VectorField(std::vector<Poly> components);

  int nvars() const { return static_cast<int>(comp_.size()); }
  const Poly& component(int i) const { return comp_[i]; }
  Poly& component(int i) { return comp_[i]; }
  const std::vector<Poly>& components() const { return comp_; }

  bool is_zero() const;
  VectorField operator+(const VectorField& o) const;
  VectorField operator-(const VectorField& o) const;
  VectorField operator*(const Q& c) const;

  // Action as a derivation: v(f) = sum v_i df/dx_i.
  Poly apply(const Poly& f) const;

  bool operator==(const VectorField&) const = default;

 private:
  std::vector<Poly> comp_;
};

// Exterior form of degree 0, 1 or 2 with polynomial coefficients. Degree-2
// coefficients are stored on strictly increasing index pairs; insertion with
// unsorted indices is canonicalized with the antisymmetry sign. Degree 3 and
// up are not supported.
class DiffForm {
 public:
  DiffForm() = default;
  DiffForm(int nvars, int degree);

  static DiffForm function(const Poly& f);  // degree 0
  static DiffForm dx(int nvars, int i);     // degree 1

  int nvars() const { return nv_; }
  int degree() const { return deg_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of dx_{idx[0]} ^ ... (empty idx for degree 0).
  Poly coeff(std::span<const int> idx) const;
  const std::map<std::vector<int>, Poly>& coeffs() const { return coeffs_; }

  // Adds p * dx_{idx[0]} ^ ..., canonicalizing index order.
  void add(std::span<const int> idx, const Poly& p);

  DiffForm operator+(const DiffForm& o) const;
  DiffForm operator-(const DiffForm& o) const;
  DiffForm operator*(const Q& c) const;
  DiffForm operator*(const Poly& f) const;

  bool operator==(const DiffForm&) const = default;

 private:
  int nv_ = 0;
  int deg_ = 0;
  std::map<std::vector<int>, Poly> coeffs_;
};

// d on degrees 0 and 1; degree-2 input is rejected (degree-3 forms are out of
// scope).
DiffForm exterior_derivative(const DiffForm& form);

// Interior product; degree-0 input is rejected. For a 1-form returns the
// degree-0 form theta(v).
DiffForm contract(const VectorField& v, const DiffForm& form);

// Cartan formula d(i_v w) + i_v(dw); degree-2 input is rejected.
DiffForm lie_derivative(const VectorField& v, const DiffForm& form);

// Minimum weight over terms, with wt(dx_i) = w[i]; nullopt encodes +infinity
// for the zero element.
std::optional<long long> weight(const Poly& p, std::span<const int> w);
std::optional<long long> weight(const DiffForm& form, std::span<const int> w);

// Pullback along the map whose components are `images` (polynomials in the
// source ring); degrees 0 and 1.
DiffForm pullback(const DiffForm& form, std::span<const Poly> images);

}  // namespace lsw
