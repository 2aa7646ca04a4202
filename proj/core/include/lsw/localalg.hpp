#pragma once

#include <map>
#include <vector>

#include "lsw/contact.hpp"
#include "lsw/ideal.hpp"
#include "lsw/linalg.hpp"

namespace lsw {

// The truncated local ring O/m^N with its monomial basis (total degree < N).
// Multiplication truncates exactly; the grading is total degree.
class JetSpace {
 public:
  JetSpace(int nvars, int order);

  int nvars() const { return nv_; }
  int order() const { return order_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Monomial>& basis() const { return basis_; }

  // -1 when the monomial is truncated away.
  int index(const Monomial& m) const;

  Poly truncate(const Poly& p) const { return p.truncated(order_ - 1); }
  Poly mul(const Poly& a, const Poly& b) const { return truncate(a * b); }
  QVec vec(const Poly& p) const;

 private:
  int nv_;
  int order_;
  std::vector<Monomial> basis_;
  std::map<Monomial, int> index_;
};

struct TorsionWitnessEntry {
  int var;        // which dx slot
  Monomial mono;  // basis monomial of the truncated ring
  Q value;
};

// Verdict of the torsion-differential test. A nonzero verdict carries a
// functional on the truncated module that annihilates the submodule
// O dI + I*Omega (truncated) but not theta; it soundly certifies that
// theta|_Z is nonzero in the Kahler differentials. zero-up-to-order makes no
// claim beyond the truncation order.
struct TorsionVerdict {
  bool nonzero = false;
  int order = 0;
  std::vector<TorsionWitnessEntry> functional;
  bool witness_verified = false;  // re-checked by direct pairing, not via the elimination
  Q witness_pairing = Q(0);       // functional applied to theta
};

TorsionVerdict torsion_theta_class(const Ideal& I, const ContactChart& chart, int order);

// Fast path: when D_0 is contained in the Zariski tangent space at 0, every
// element of I and dI has weight >= 2 and every element of I*Omega has weight
// >= 3 under wt(x_i)=1, wt(x_{2m+1})=2, while theta's weight-2 part is
// homogeneous and not d-exact; the class is then nonzero. `obstructed` false
// means no conclusion.
struct WeightObstructionResult {
  bool obstructed = false;
  std::vector<long long> generator_weights;
  long long theta_weight = 2;
};

WeightObstructionResult weight_obstruction(const Ideal& I, const ContactChart& chart);

}  // namespace lsw
