#include <doctest.h>

#include <cmath>

#include "anyon/verlinde.hpp"
#include "oracle.hpp"

using namespace anyon;

namespace {

std::vector<AnyonModel> builtins() {
  return {fibonacci(), ising(), zn_toric(2), zn_toric(3), zn_toric(4), dg_abelian({2, 2})};
}

}  // namespace

TEST_CASE("fibonacci regular representation") {
  const RegularRep r = regular_representation(fibonacci());
  Matrix f_tau(2, 2);
  f_tau << 0, 1, 1, 1;
  CHECK(max_abs(r.f[1] - f_tau) == 0.0);
  CHECK(max_abs(r.f[0] - Matrix::Identity(2, 2)) == 0.0);
}

TEST_CASE("ising sigma times sigma") {
  const RegularRep r = regular_representation(ising());
  CHECK(max_abs(r.f[1] * r.f[1] - r.f[0] - r.f[2]) < 1e-15);
}

TEST_CASE("regular representation invariants") {
  for (const auto& m : builtins()) {
    CAPTURE(m.id);
    const RegularRep r = regular_representation(m);
    const int n = m.size();
    CHECK(max_abs(r.f[0] - Matrix::Identity(n, n)) == 0.0);
    for (int a = 0; a < n; ++a) {
      CHECK(max_abs(r.f[a].adjoint() - r.f[m.dual[a]]) == 0.0);
      for (int b = 0; b < n; ++b) {
        Matrix rhs = Matrix::Zero(n, n);
        for (int c = 0; c < n; ++c) rhs += double(m.N(a, b, c)) * r.f[c];
        CHECK(max_abs(r.f[a] * r.f[b] - rhs) < 1e-12);
        CHECK(max_abs(r.f[a] * r.f[b] - r.f[b] * r.f[a]) < 1e-12);
      }
    }
  }
}

TEST_CASE("idempotents are orthogonal, complete and reconstruct the fusion matrices") {
  for (const auto& m : builtins()) {
    CAPTURE(m.id);
    const int n = m.size();
    const IdempotentSet p = idempotents(m);
    Matrix sum = Matrix::Zero(n, n);
    for (int a = 0; a < n; ++a) {
      sum += p.p[a];
      for (int b = 0; b < n; ++b) {
        const Matrix expected = a == b ? p.p[a] : Matrix(Matrix::Zero(n, n));
        CHECK(max_abs(p.p[a] * p.p[b] - expected) < 1e-9);
      }
    }
    CHECK(max_abs(sum - Matrix::Identity(n, n)) < 1e-9);
    const RegularRep back = reconstruct_from_idempotents(m, p);
    const RegularRep f = regular_representation(m);
    for (int a = 0; a < n; ++a) CHECK(max_abs(back.f[a] - f.f[a]) < 1e-9);
  }
}

TEST_CASE("idempotents agree with an eigendecomposition oracle") {
  for (const auto& m : {fibonacci(), ising(), zn_toric(2)}) {
    CAPTURE(m.id);
    const int n = m.size();
    const auto oracle_p = oracle::eigen_primitive_idempotents(m);
    REQUIRE(static_cast<int>(oracle_p.size()) == n);
    // every subset sum of the n eigenprojectors is idempotent, and only the singletons have rank one
    CHECK(oracle::count_idempotents(m) == (1 << n) - 1);
    const IdempotentSet p = idempotents(m);
    for (const auto& q : oracle_p) {
      int matches = 0;
      for (const auto& mine : p.p) matches += max_abs(mine - q) < 1e-9;
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("zn_toric(2) idempotents have rank one") {
  for (const auto& p : idempotents(zn_toric(2)).p) CHECK(std::abs(p.trace() - 1.0) < 1e-12);
}

TEST_CASE("lambda of the identity permutation is the identity") {
  for (const auto& m : builtins()) {
    CAPTURE(m.id);
    const int n = m.size();
    CHECK(max_abs(lambda_matrix(m, identity_permutation(n)) - Matrix::Identity(n, n)) < 1e-12);
  }
}

TEST_CASE("zn_toric(2) e-m swap exchanges the e and m strings") {
  const AnyonModel m = zn_toric(2);
  const Matrix lambda = lambda_matrix(m, {0, 2, 1, 3});
  CHECK(is_monomial(lambda));
  CHECK(std::abs(std::abs(lambda(1, 2)) - 1.0) < 1e-12);
  CHECK(std::abs(std::abs(lambda(2, 1)) - 1.0) < 1e-12);
  CHECK(max_abs(lambda - abelian_lambda_matrix(m, {0, 2, 1, 3})) < 1e-12);
}

TEST_CASE("fibonacci swap lambda transports idempotents by the permutation") {
  const AnyonModel m = fibonacci();
  const Permutation swap{1, 0};
  const Matrix lambda = lambda_matrix(m, swap);
  const IdempotentSet p = idempotents(m);
  const RegularRep f = regular_representation(m);
  // rho(f_b) = sum_a (S_ba / S_1a) p_{perm(a)} should equal sum_b' Lambda_{b,b'} f_b'
  for (int b = 0; b < 2; ++b) {
    Matrix direct = Matrix::Zero(2, 2), via_lambda = Matrix::Zero(2, 2);
    for (int a = 0; a < 2; ++a) direct += (m.smatrix(b, a) / m.smatrix(0, a)) * p.p[swap[a]];
    for (int c = 0; c < 2; ++c) via_lambda += lambda(b, c) * f.f[c];
    CHECK(max_abs(direct - via_lambda) < 1e-12);
  }
  // the quantum dimensions differ, so this Lambda is not unitary
  CHECK(unitarity_residual(lambda) > 0.1);
}

TEST_CASE("lambda is unitary when the permutation preserves quantum dimensions") {
  for (const auto& m : {ising(), zn_toric(2), zn_toric(3)}) {
    CAPTURE(m.id);
    const auto d = quantum_dimensions(m);
    Permutation p = identity_permutation(m.size());
    do {
      bool keeps = true;
      for (int a = 0; a < m.size(); ++a) keeps = keeps && std::abs(d[a] - d[p[a]]) < 1e-12;
      if (keeps) CHECK(unitarity_residual(lambda_matrix(m, p)) < 1e-9);
    } while (std::next_permutation(p.begin(), p.end()) && m.size() <= 4);
  }
}
