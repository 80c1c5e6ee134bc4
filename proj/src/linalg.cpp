#include "anyon/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace anyon {

double wrap_angle(double angle) {
  double w = std::fmod(angle, 2 * kPi);
  if (w < 0) w += 2 * kPi;
  if (2 * kPi - w < 1e-12) w = 0;
  return w + 0.0;  // no negative zero
}

double angle_over_pi(cplx z) {
  double t = wrap_angle(std::arg(z)) / kPi;
  t = std::round(t * 1e12) / 1e12;
  if (t >= 2.0) t = 0.0;
  return t == 0.0 ? 0.0 : t;  // no negative zero
}

double max_abs(const Matrix& m) {
  double r = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

double unitarity_residual(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(m * m.adjoint() - Matrix::Identity(m.rows(), m.cols()));
}

Matrix permutation_matrix(const Permutation& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  Matrix p = Matrix::Zero(n, n);
  for (Eigen::Index y = 0; y < n; ++y) p(perm[y], y) = 1.0;
  return p;
}

Permutation identity_permutation(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Permutation inverse_permutation(const Permutation& perm) {
  Permutation inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

bool is_permutation(const Permutation& perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

cplx global_phase(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("global_phase: shape mismatch");
  Eigen::Index bi = 0, bj = 0;
  double best = -1;
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      if (std::abs(b(i, j)) > best) {
        best = std::abs(b(i, j));
        bi = i;
        bj = j;
      }
  if (best <= 0) return 1.0;
  cplx ratio = a(bi, bj) / b(bi, bj);
  double r = std::abs(ratio);
  return r > 0 ? ratio / r : cplx(1.0);
}

double projective_distance(const Matrix& a, const Matrix& b) {
  return max_abs(a - global_phase(a, b) * b);
}

bool is_monomial(const Matrix& m, double zero_threshold) {
  if (m.rows() != m.cols()) return false;
  const auto n = m.rows();
  std::vector<int> col_count(n, 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    int row_count = 0;
    for (Eigen::Index j = 0; j < n; ++j)
      if (std::abs(m(i, j)) >= zero_threshold) {
        ++row_count;
        ++col_count[j];
      }
    if (row_count != 1) return false;
  }
  for (int c : col_count)
    if (c != 1) return false;
  return true;
}

double monomial_residual(const Matrix& m) {
  double r = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    Eigen::Index top = 0;
    for (Eigen::Index i = 1; i < m.rows(); ++i)
      if (std::abs(m(i, j)) > std::abs(m(top, j))) top = i;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != top) r = std::max(r, std::abs(m(i, j)));
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Eigen::Index top = 0;
    for (Eigen::Index j = 1; j < m.cols(); ++j)
      if (std::abs(m(i, j)) > std::abs(m(i, top))) top = j;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (j != top) r = std::max(r, std::abs(m(i, j)));
  }
  return r;
}

}  // namespace anyon
