#pragma once

#include <optional>
#include <vector>

#include "lsw/rational.hpp"

namespace lsw {

using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

// Incremental reduced row echelon accumulator over Q. Rows are kept fully
// reduced (Gauss-Jordan), which makes span membership, rank and separating
// functionals cheap and deterministic.
class EchelonBasis {
 public:
  explicit EchelonBasis(int width) : width_(width) {}

  int width() const { return width_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<QVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Reduces the row against the basis; inserts the residue if nonzero.
  // Returns true when the rank grew.
  bool insert(QVec row);

  QVec reduce(QVec row) const;
  bool in_span(const QVec& v) const;

  // A functional vanishing on the span but not on `target`; nullopt when
  // target lies in the span.
  std::optional<QVec> separating_functional(const QVec& target) const;

 private:
  int width_;
  std::vector<QVec> rows_;
  std::vector<int> pivots_;
};

// Solves A x = b exactly; returns any solution with free variables set to
// zero (deterministic), or nullopt when inconsistent.
std::optional<QVec> solve_linear(const QMat& A, const QVec& b);

int rank(const QMat& A);

// Inverse of a square matrix; nullopt when singular.
std::optional<QMat> inverse(const QMat& A);

Q dot(const QVec& a, const QVec& b);

}  // namespace lsw
