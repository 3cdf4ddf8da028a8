#include "lpa/linalg.hpp"

namespace lpa {

namespace {

// Reduce to RREF in place; returns pivot columns. `rhs` (optional,
// same row count) receives the same row operations.
std::vector<int> rref(ScalarMatrix& a, std::vector<Scalar>* rhs) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols && row < a.rows; ++col) {
    // prefer a +-1 pivot
    int pick = -1;
    for (int r = row; r < a.rows; ++r) {
      if (a.at(r, col).is_zero()) continue;
      if (pick == -1) pick = r;
      if (a.at(r, col).is_one() || (-a.at(r, col)).is_one()) {
        pick = r;
        break;
      }
    }
    if (pick == -1) continue;
    if (pick != row) {
      for (int c = 0; c < a.cols; ++c) std::swap(a.at(pick, c), a.at(row, c));
      if (rhs) std::swap((*rhs)[pick], (*rhs)[row]);
    }
    Scalar inv = a.at(row, col).inverse();
    for (int c = 0; c < a.cols; ++c) a.at(row, c) *= inv;
    if (rhs) (*rhs)[row] *= inv;
    for (int r = 0; r < a.rows; ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      Scalar factor = a.at(r, col);
      for (int c = 0; c < a.cols; ++c)
        a.at(r, c) -= factor * a.at(row, c);
      if (rhs) (*rhs)[r] -= factor * (*rhs)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

std::optional<std::vector<Scalar>> solve_exact(ScalarMatrix a,
                                               std::vector<Scalar> b) {
  Field f = a.data.empty() ? b.empty() ? Field::rationals() : b.front().field()
                           : a.data.front().field();
  auto pivots = rref(a, &b);
  int r = static_cast<int>(pivots.size());
  for (int row = r; row < a.rows; ++row)
    if (!b[row].is_zero()) return std::nullopt;
  std::vector<Scalar> x(a.cols, Scalar::zero(f));
  for (int i = 0; i < r; ++i) x[pivots[i]] = b[i];
  return x;
}

int rank_exact(ScalarMatrix a) {
  return static_cast<int>(rref(a, nullptr).size());
}

ScalarMatrix mat_mul(const ScalarMatrix& a, const ScalarMatrix& b) {
  Field f = a.data.empty() ? Field::rationals() : a.data.front().field();
  ScalarMatrix out(a.rows, b.cols, f);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols; ++j)
        out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

namespace {

ScalarMatrix transpose(const ScalarMatrix& m) {
  Field f = m.data.empty() ? Field::rationals() : m.data.front().field();
  ScalarMatrix out(m.cols, m.rows, f);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

std::optional<ScalarMatrix> invert(const ScalarMatrix& m) {
  Field f = m.data.empty() ? Field::rationals() : m.data.front().field();
  int n = m.rows;
  ScalarMatrix aug(n, 2 * n, f);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(f);
  }
  auto pivots = rref(aug, nullptr);
  if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
    return std::nullopt;
  ScalarMatrix out(n, n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

} // namespace

std::optional<ScalarMatrix> generalized_inverse(const ScalarMatrix& m) {
  Field f = m.data.empty() ? Field::rationals() : m.data.front().field();
  ScalarMatrix r = m;
  auto pivots = rref(r, nullptr);
  int rank = static_cast<int>(pivots.size());
  if (rank == 0) return transpose(m); // zero matrix: any G works, use M^T
  ScalarMatrix c(m.rows, rank, f), fmat(rank, m.cols, f);
  for (int i = 0; i < m.rows; ++i)
    for (int k = 0; k < rank; ++k) c.at(i, k) = m.at(i, pivots[k]);
  for (int k = 0; k < rank; ++k)
    for (int j = 0; j < m.cols; ++j) fmat.at(k, j) = r.at(k, j);
  auto gram1 = invert(mat_mul(fmat, transpose(fmat)));
  auto gram2 = invert(mat_mul(transpose(c), c));
  if (!gram1 || !gram2) return std::nullopt;
  return mat_mul(mat_mul(transpose(fmat), *gram1),
                 mat_mul(*gram2, transpose(c)));
}

} // namespace lpa
