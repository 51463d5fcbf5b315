#include "wenoh/basis.hpp"

namespace wenoh {

namespace {

// Partial-pivot LU solve of A x = rhs for a 6x6 system, in place.
bool lu_solve6(std::array<std::array<double, 6>, 6>& A, std::array<double, 6>& x) {
  double scale = 0.0;
  for (const auto& row : A)
    for (double v : row) scale = std::fmax(scale, std::fabs(v));
  const double tiny = 1e-12 * (scale > 0.0 ? scale : 1.0);

  std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
  for (int k = 0; k < 6; ++k) {
    int piv = k;
    for (int i = k + 1; i < 6; ++i)
      if (std::fabs(A[perm[i]][k]) > std::fabs(A[perm[piv]][k])) piv = i;
    std::swap(perm[k], perm[piv]);
    const double akk = A[perm[k]][k];
    if (!std::isfinite(akk) || std::fabs(akk) < tiny) return false;
    for (int i = k + 1; i < 6; ++i) {
      const double m = A[perm[i]][k] / akk;
      A[perm[i]][k] = m;
      for (int j = k + 1; j < 6; ++j) A[perm[i]][j] -= m * A[perm[k]][j];
    }
  }

  std::array<double, 6> y{};
  for (int i = 0; i < 6; ++i) {
    double acc = x[perm[i]];
    for (int j = 0; j < i; ++j) acc -= A[perm[i]][j] * y[j];
    y[i] = acc;
  }
  std::array<double, 6> z{};
  for (int i = 5; i >= 0; --i) {
    double acc = y[i];
    for (int j = i + 1; j < 6; ++j) acc -= A[perm[i]][j] * z[j];
    z[i] = acc / A[perm[i]][i];
  }
  x = z;
  return true;
}

}  // namespace

DerivativeWeights lagrange_derivative_weights(BasisKind kind, double s2) {
  // Collocation system: row l holds phi_l at the six stencil boundary nodes; the
  // right-hand side is phi_l'(0), which the deflated normalization reduces to e_1.
  std::array<std::array<double, 6>, 6> A{};
  for (int n = 0; n < 6; ++n) {
    const auto phi = primitive_basis_values(kind, s2, kPrimitiveNodes[n]);
    for (int l = 0; l < 6; ++l) A[l][n] = phi[l];
  }
  DerivativeWeights out;
  std::array<double, 6> rhs{0.0, 1.0, 0.0, 0.0, 0.0, 0.0};
  if (lu_solve6(A, rhs)) {
    out.w = rhs;
  } else {
    out.w = kPolyDerivativeWeights;
    out.fallback = true;
  }
  return out;
}

}  // namespace wenoh
