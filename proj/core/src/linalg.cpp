#include "lsw/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace lsw {

namespace {

int first_nonzero(const QVec& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) return static_cast<int>(i);
  return -1;
}

}  // namespace

bool EchelonBasis::insert(QVec row) {
  assert(static_cast<int>(row.size()) == width_);
  row = reduce(std::move(row));
  const int p = first_nonzero(row);
  if (p < 0) return false;
  const Q lead = row[p];
  for (Q& x : row) x /= lead;
  // keep older rows reduced against the new pivot
  for (QVec& r : rows_) {
    if (is_zero(r[p])) continue;
    const Q f = r[p];
    for (int j = 0; j < width_; ++j)
      if (!is_zero(row[j])) r[j] -= f * row[j];
  }
  // keep rows sorted by pivot column for determinism
  auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
  const auto at = it - pivots_.begin();
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + at, std::move(row));
  return true;
}

QVec EchelonBasis::reduce(QVec row) const {
  assert(static_cast<int>(row.size()) == width_);
  for (size_t k = 0; k < rows_.size(); ++k) {
    const int p = pivots_[k];
    if (is_zero(row[p])) continue;
    const Q f = row[p];
    const QVec& r = rows_[k];
    for (int j = 0; j < width_; ++j)
      if (!is_zero(r[j])) row[j] -= f * r[j];
  }
  return row;
}

bool EchelonBasis::in_span(const QVec& v) const { return first_nonzero(reduce(v)) < 0; }

std::optional<QVec> EchelonBasis::separating_functional(const QVec& target) const {
  QVec res = reduce(target);
  const int j = first_nonzero(res);
  if (j < 0) return std::nullopt;
  // Rows are fully reduced, so a functional supported on {j} and the pivot
  // columns annihilates every row once the pivot entries are balanced.
  QVec lambda(width_, Q(0));
  lambda[j] = 1;
  for (size_t k = 0; k < rows_.size(); ++k) lambda[pivots_[k]] = -rows_[k][j];
  return lambda;
}

std::optional<QVec> solve_linear(const QMat& A, const QVec& b) {
  const int rows = static_cast<int>(A.size());
  assert(static_cast<int>(b.size()) == rows);
  const int cols = rows == 0 ? 0 : static_cast<int>(A[0].size());
  QMat M = A;
  QVec rhs = b;
  std::vector<int> pivot_col;  // per pivot row
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(M[i][c])) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(M[sel], M[r]);
    std::swap(rhs[sel], rhs[r]);
    const Q inv = 1 / M[r][c];
    for (int j = c; j < cols; ++j) M[r][j] *= inv;
    rhs[r] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(M[i][c])) continue;
      const Q f = M[i][c];
      for (int j = c; j < cols; ++j)
        if (!is_zero(M[r][j])) M[i][j] -= f * M[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (!is_zero(rhs[i])) return std::nullopt;
  QVec x(cols, Q(0));
  for (int k = 0; k < r; ++k) x[pivot_col[k]] = rhs[k];
  return x;
}

int rank(const QMat& A) {
  if (A.empty()) return 0;
  EchelonBasis eb(static_cast<int>(A[0].size()));
  for (const QVec& row : A) eb.insert(row);
  return eb.rank();
}

std::optional<QMat> inverse(const QMat& A) {
  const int n = static_cast<int>(A.size());
  QMat M = A;
  QMat inv(n, QVec(n, Q(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (!is_zero(M[i][c])) {
        sel = i;
        break;
      }
    if (sel < 0) return std::nullopt;
    std::swap(M[sel], M[c]);
    std::swap(inv[sel], inv[c]);
    const Q f = 1 / M[c][c];
    for (int j = 0; j < n; ++j) {
      M[c][j] *= f;
      inv[c][j] *= f;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || is_zero(M[i][c])) continue;
      const Q g = M[i][c];
      for (int j = 0; j < n; ++j) {
        M[i][j] -= g * M[c][j];
        inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

Q dot(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  Q s(0);
  for (size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  return s;
}

}  // namespace lsw
