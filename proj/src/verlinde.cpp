#include "anyon/verlinde.hpp"

namespace anyon {

RegularRep regular_representation(const AnyonModel& m) {
  const int n = m.size();
  RegularRep rep;
  rep.f.assign(n, Matrix::Zero(n, n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) rep.f[a](c, b) = static_cast<double>(m.N(a, b, c));
  return rep;
}

IdempotentSet idempotents(const AnyonModel& m) {
  const int n = m.size();
  const RegularRep rep = regular_representation(m);
  IdempotentSet out;
  out.p.assign(n, Matrix::Zero(n, n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.p[a] += m.smatrix(0, a) * std::conj(m.smatrix(b, a)) * rep.f[b];
  return out;
}

RegularRep reconstruct_from_idempotents(const AnyonModel& m, const IdempotentSet& p) {
  const int n = m.size();
  RegularRep rep;
  rep.f.assign(n, Matrix::Zero(n, n));
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) rep.f[b] += (m.smatrix(b, a) / m.smatrix(0, a)) * p.p[a];
  return rep;
}

Matrix lambda_matrix(const AnyonModel& m, const Permutation& perm) {
  const int n = m.size();
  if (!is_permutation(perm, n)) throw std::invalid_argument("lambda_matrix: not a permutation of the labels");
  const auto d = quantum_dimensions(m);
  const Matrix pi = permutation_matrix(perm);
  const Matrix pi_inv = pi.transpose();
  Matrix dm = Matrix::Zero(n, n), dm_inv = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    dm(a, a) = d[a];
    dm_inv(a, a) = 1.0 / d[a];
  }
  const Matrix& s = m.smatrix;
  return s * pi_inv * dm * pi * dm_inv * pi_inv * s.adjoint();
}

Matrix abelian_lambda_matrix(const AnyonModel& m, const Permutation& perm) {
  const int n = m.size();
  if (!is_permutation(perm, n)) throw std::invalid_argument("abelian_lambda_matrix: not a permutation");
  Matrix out = Matrix::Zero(n, n);
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d)
      for (int a = 0; a < n; ++a) out(b, d) += m.smatrix(b, a) * std::conj(m.smatrix(d, perm[a]));
  return out;
}

}  // namespace anyon
