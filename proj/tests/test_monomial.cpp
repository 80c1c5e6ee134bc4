#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "anyon/monomial.hpp"
#include "oracle.hpp"

using namespace anyon;

namespace {

Matrix mat2(cplx a, cplx b, cplx c, cplx d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// True when some family in the list contains `expected` up to a global phase.
bool contains_projectively(const std::vector<GateFamily>& families, const Matrix& expected) {
  for (const auto& f : families) {
    const Matrix g = f.representative().dense();
    if (f.free_phases() == 1 && projective_distance(g, expected) < 1e-9) return true;
  }
  return false;
}

// Compares solver output with the brute-force oracle for one pair of matrices.
void check_against_oracle(const Matrix& left, const Matrix& right) {
  const auto solved = solve_intertwiner(left, right, std::nullopt, std::nullopt);
  const auto brute = oracle::brute_force_intertwiners(left, right);
  REQUIRE(solved.size() == brute.size());
  for (const auto& b : brute) {
    const auto it = std::find_if(solved.begin(), solved.end(), [&](const IntertwinerSolution& s) {
      return s.perm_in == b.perm_in && s.perm_out == b.perm_out;
    });
    REQUIRE(it != solved.end());
    for (const auto& p : b.points) {
      CHECK(p.nullity == it->free_phases());
      // the refined point lies in the solver's family
      for (std::size_t l = 0; l < p.d.size(); ++l) {
        const int rep = it->phase_class[l];
        CHECK(std::abs(p.d[l] / p.d[rep] - it->relative_phases[l]) < 1e-6);
      }
    }
  }
}

}  // namespace

TEST_CASE("monomial matrix algebra") {
  const MonomialMatrix a{{1, 0}, {cplx(0, 1), -1.0}};
  const Matrix da = a.dense();
  CHECK(da(1, 0) == cplx(0, 1));
  CHECK(da(0, 1) == -1.0);
  const MonomialMatrix sq = a * a;
  CHECK(max_abs(sq.dense() - da * da) < 1e-15);
  CHECK(max_abs(to_monomial(da).dense() - da) == 0.0);
  CHECK_THROWS(to_monomial(Matrix::Ones(2, 2)));
}

TEST_CASE("phase union-find detects inconsistent cycles") {
  PhaseUnionFind uf(3);
  CHECK(uf.relate(0, 1, unit_phase(0.3), 1e-12));
  CHECK(uf.relate(1, 2, unit_phase(0.4), 1e-12));
  CHECK(uf.relate(0, 2, unit_phase(0.7), 1e-12));
  CHECK_FALSE(uf.relate(2, 0, unit_phase(0.7), 1e-12));
  auto [r0, p0] = uf.find(0);
  auto [r2, p2] = uf.find(2);
  CHECK(r0 == r2);
  CHECK(std::abs(p0 / p2 - unit_phase(0.7)) < 1e-12);
}

TEST_CASE("fibonacci delta_s is the identity and the signed swap") {
  const AnyonModel f = fibonacci();
  const DeltaSet d = delta_set(f, SurfaceSpec::torus(), parse_word("s"));
  REQUIRE(d.families.size() == 2);
  CHECK(contains_projectively(d.families, Matrix::Identity(2, 2)));
  CHECK(contains_projectively(d.families, mat2(0, 1, -1, 0)));
}

TEST_CASE("fibonacci delta_st") {
  const AnyonModel f = fibonacci();
  const DeltaSet d = delta_set(f, SurfaceSpec::torus(), parse_word("st"));
  REQUIRE(d.families.size() == 2);
  CHECK(contains_projectively(d.families, Matrix::Identity(2, 2)));
  CHECK(contains_projectively(d.families, mat2(0, unit_phase(3 * kPi / 5), 1, 0)));
}

TEST_CASE("fibonacci delta_s intersect delta_st is the identity") {
  const AnyonModel f = fibonacci();
  const SurfaceSpec t = SurfaceSpec::torus();
  const DeltaSet both = intersect_delta({delta_set(f, t, parse_word("s")), delta_set(f, t, parse_word("st"))});
  REQUIRE(both.families.size() == 1);
  CHECK(both.families[0].perm == Permutation{0, 1});
  CHECK(both.families[0].free_phases() == 1);
  CHECK(max_abs(both.families[0].representative().dense() - Matrix::Identity(2, 2)) < 1e-12);
  CHECK(both.words.size() == 2);
}

TEST_CASE("ising F block intertwiners") {
  const AnyonModel m = ising();
  const Matrix w = f_block(m, 1, 1, 1, 1).matrix.transpose();
  const auto sols = solve_intertwiner(w, PermutationSet{{identity_permutation(2)}}, std::nullopt);
  REQUIRE(sols.size() == 2);
  std::vector<double> second;
  for (const auto& s : sols) {
    CHECK(s.free_phases() == 1);
    second.push_back(angle_over_pi(s.relative_phases[1]));
  }
  std::sort(second.begin(), second.end());
  CHECK(second == std::vector<double>{0.0, 1.0});
}

TEST_CASE("solutions satisfy the intertwining equation") {
  const AnyonModel f = fibonacci();
  const Matrix s = f.smatrix;
  for (const auto& sol : solve_intertwiner(s, std::nullopt, std::nullopt)) {
    const std::vector<cplx> free(sol.free_phases(), unit_phase(0.37));
    const Matrix g = sol.instantiate(free).dense();
    const Matrix h = sol.instantiate_out(free).dense();
    CHECK(max_abs(s * g - h * s) < 1e-12);
    CHECK(is_monomial(s * g * s.adjoint()));
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(solve_intertwiner(Matrix::Identity(2, 3), std::nullopt, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(solve_intertwiner(Matrix::Ones(2, 2), std::nullopt, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(solve_intertwiner(Matrix::Identity(2, 2), Matrix::Identity(3, 3), std::nullopt, std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_intertwiner(Matrix::Identity(9, 9), std::nullopt, std::nullopt), std::length_error);
  CHECK(solve_intertwiner(Matrix::Identity(9, 9), PermutationSet{{identity_permutation(9)}}, std::nullopt).size() ==
        1);
}

TEST_CASE("identity word leaves every permutation") {
  const auto sols = solve_intertwiner(Matrix::Identity(3, 3), std::nullopt, std::nullopt);
  CHECK(sols.size() == 6);
  for (const auto& s : sols) {
    CHECK(s.perm_in == s.perm_out);
    CHECK(s.free_phases() == 3);
  }
}

TEST_CASE("conjoin intersects phase constraints") {
  const GateFamily a{{0, 1, 2}, {0, 0, 2}, {1.0, -1.0, 1.0}, {}};
  const GateFamily b{{0, 1, 2}, {0, 1, 0}, {1.0, 1.0, cplx(0, 1)}, {}};
  const auto c = conjoin(a, b);
  REQUIRE(c.has_value());
  CHECK(c->free_phases() == 1);
  CHECK(std::abs(c->relative_phases[2] - cplx(0, 1)) < 1e-12);
  const GateFamily clash{{0, 1, 2}, {0, 0, 2}, {1.0, 1.0, 1.0}, {}};
  CHECK_FALSE(conjoin(a, clash).has_value());
  const GateFamily other{{1, 0, 2}, {0, 0, 2}, {1.0, -1.0, 1.0}, {}};
  CHECK_FALSE(conjoin(a, other).has_value());
}

TEST_CASE("equivalence classes and similarity-trivial gates") {
  Matrix block = Matrix::Zero(3, 3);
  block(0, 0) = 1;
  block.block(1, 1, 2, 2) = mat2(1, 1, 1, -1) / std::sqrt(2.0);
  const EquivalenceClasses e = equivalence_classes_from({block}, 3);
  CHECK(e.count == 2);
  CHECK(e.class_of[1] == e.class_of[2]);
  CHECK(e.class_of[0] != e.class_of[1]);
  CHECK(check_sim_trivial({{0, 1, 2}, {cplx(0, 1), -1.0, -1.0}}, e));
  CHECK_FALSE(check_sim_trivial({{0, 1, 2}, {1.0, -1.0, 1.0}}, e));
  CHECK_FALSE(check_sim_trivial({{0, 2, 1}, {1.0, 1.0, 1.0}}, e));

  const AnyonModel f = fibonacci();
  const SurfaceSpec s = SurfaceSpec::sphere(1, 6);
  CHECK(equivalence_classes(f, s, default_generators(s)).count == 1);
}

TEST_CASE("solver agrees with the brute-force oracle on small matrices") {
  const AnyonModel f = fibonacci(), is = ising(), z2 = zn_toric(2);
  SUBCASE("torus words") {
    for (const auto& m : {f, is, z2})
      for (const char* w : {"s", "t", "st", "ts't"}) {
        CAPTURE(m.id);
        CAPTURE(w);
        const Matrix v = evaluate_word(m, SurfaceSpec::torus(), parse_word(w)).matrix;
        check_against_oracle(v, v);
      }
  }
  SUBCASE("ising F block to itself") {
    const Matrix w = f_block(is, 1, 1, 1, 1).matrix.transpose();
    check_against_oracle(w, w);
  }
}
