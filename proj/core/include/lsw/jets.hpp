#pragma once

#include <vector>

#include "lsw/forms.hpp"
#include "lsw/linalg.hpp"
#include "lsw/poly.hpp"

namespace lsw {

// Truncated coordinate change fixing the origin: components of degree <= N
// with invertible linear part. Composition and inversion are exact modulo
// degree N+1; the order is part of the value and never mixed silently.
class CoordChangeJet {
 public:
  CoordChangeJet(std::vector<Poly> components, int order);
  static CoordChangeJet identity(int nvars, int order);

  int nvars() const { return nv_; }
  int order() const { return order_; }
  const std::vector<Poly>& components() const { return comp_; }
  QMat linear_matrix() const;

  // this after inner; orders must match
  CoordChangeJet compose(const CoordChangeJet& inner) const;
  CoordChangeJet inverse() const;

  // p composed with the jet, truncated at the jet order
  Poly apply(const Poly& p) const;

  bool operator==(const CoordChangeJet&) const = default;

 private:
  int nv_;
  int order_;
  std::vector<Poly> comp_;
};

// (Dphi . v) composed with phi^{-1}, truncated at the jet order.
VectorField pushforward(const VectorField& v, const CoordChangeJet& phi);

}  // namespace lsw
