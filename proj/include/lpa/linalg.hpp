#ifndef LPA_LINALG_HPP
#define LPA_LINALG_HPP

#include <optional>
#include <vector>

#include "lpa/scalar.hpp"

namespace lpa {

/// Dense matrix of exact scalars, row major.
struct ScalarMatrix {
  int rows = 0, cols = 0;
  std::vector<Scalar> data;

  ScalarMatrix(int r, int c, Field f)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, Scalar::zero(f)) {}
  Scalar& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const Scalar& at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
};

/// Solves A x = b exactly by Gaussian elimination; pivots prefer +-1
/// entries to keep rational growth down. Returns nullopt when
/// inconsistent; free variables are set to zero.
std::optional<std::vector<Scalar>> solve_exact(ScalarMatrix a,
                                               std::vector<Scalar> b);

int rank_exact(ScalarMatrix a);

ScalarMatrix mat_mul(const ScalarMatrix& a, const ScalarMatrix& b);

/// A generalized inverse G with M G M = M, via rank factorization
/// M = C F (C: full column rank, F: full row rank) and
/// G = F^T (F F^T)^{-1} (C^T C)^{-1} C^T. Exact over Q or F_p; may fail
/// over F_p when a Gram matrix is singular (nullopt).
std::optional<ScalarMatrix> generalized_inverse(const ScalarMatrix& m);

} // namespace lpa

#endif
