#pragma once

#include <algorithm>
#include <stdexcept>

#include "rpolar/mat3.hpp"

namespace rpolar {

//! Eigendecomposition of a symmetric 3x3 matrix: S = V diag(values) V^T.
//! values are sorted descending; the columns of vectors are the matching
//! orthonormal eigenvectors (det may be -1; no orientation policy here).
struct SymEigen {
  std::array<double, 3> values{};
  Mat3 vectors;
};

// Cyclic Jacobi sweeps over the pairs (0,1), (0,2), (1,2). Convergence when the
// off-diagonal Frobenius norm drops below 1e-14 * |S|; a 3x3 needs only a
// handful of sweeps, 32 is a hard cap.
inline SymEigen sym_eigen(const Mat3& s_in) {
  const double scale = norm(s_in);
  if (norm(s_in - transpose(s_in)) > 1e-9 * scale)
    throw std::invalid_argument("sym_eigen: matrix is not symmetric");

  Mat3 a = sym(s_in);
  Mat3 v = Mat3::identity();
  const double tol = 1e-14 * scale;

  bool converged = false;
  for (int sweep = 0; sweep < 32; ++sweep) {
    const double off = std::sqrt(2.0 * (a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) +
                                        a(1, 2) * a(1, 2)));
    if (off <= tol) {
      converged = true;
      break;
    }
    static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pq : kPairs) {
      const int p = pq[0], q = pq[1];
      const double apq = a(p, q);
      if (apq == 0.0) continue;
      const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
      const double t = sign_pos(theta) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;
      const double tau = s / (1.0 + c);

      const double app = a(p, p), aqq = a(q, q);
      a(p, p) = app - t * apq;
      a(q, q) = aqq + t * apq;
      a(p, q) = 0.0;
      a(q, p) = 0.0;
      const int r = 3 - p - q;  // the remaining index
      const double arp = a(r, p), arq = a(r, q);
      a(r, p) = arp - s * (arq + tau * arp);
      a(p, r) = a(r, p);
      a(r, q) = arq + s * (arp - tau * arq);
      a(q, r) = a(r, q);
      for (int k = 0; k < 3; ++k) {
        const double vkp = v(k, p), vkq = v(k, q);
        v(k, p) = vkp - s * (vkq + tau * vkp);
        v(k, q) = vkq + s * (vkp - tau * vkq);
      }
    }
  }
  if (!converged) {
    const double off = std::sqrt(2.0 * (a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) +
                                        a(1, 2) * a(1, 2)));
    if (off > tol) throw std::runtime_error("sym_eigen: Jacobi failed to converge");
  }

  std::array<int, 3> order{0, 1, 2};
  const std::array<double, 3> d{a(0, 0), a(1, 1), a(2, 2)};
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return d[i] > d[j] || (d[i] == d[j] && i < j); });

  SymEigen out;
  for (int k = 0; k < 3; ++k) {
    out.values[k] = d[order[k]];
    out.vectors.set_col(k, v.col(order[k]));
  }
  return out;
}

}  // namespace rpolar
