#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anyon/model.hpp"
#include "anyon/monomial.hpp"

namespace anyon {

// Cyclic factors of the flux group G; labels are G x G^.
struct AbelianGroupSpec {
  std::vector<int> factors;
  // lcm of the factors
  int exponent() const;
};

// Reads the factors from a zn_toric or dg_abelian id.
AbelianGroupSpec abelian_group_spec(const AnyonModel& model);

// The unique fusion outcome of a x b; throws ModelError for non-abelian models.
int fuse(const AnyonModel& model, int a, int b);

// lcm of the orders of all labels under fusion.
int fusion_exponent(const AnyonModel& model);

// Label permutations preserving fusion, i.e. automorphisms of the label group.
std::vector<Permutation> fusion_automorphisms(const AnyonModel& model);

// Maps a -> c x phi(a) for every automorphism phi and label c.
std::vector<Permutation> affine_label_permutations(const AnyonModel& model);

// |S_ab| D = 1 everywhere and S_1a = 1/D.
bool smatrix_phase_check(const AnyonModel& model, double tol = kDefaultTol);

struct LambdaCheck {
  bool monomial = false;
  Permutation string_perm;
  std::vector<cplx> phases;
  Matrix lambda;
  // Every phase is an N-th root of unity, N the fusion exponent.
  bool root_of_unity_phases = false;
};

// Lambda_{b,d} = sum_a S_ba conj(S_{d,perm(a)}).
LambdaCheck check_lambda_monomial(const AnyonModel& model, const Permutation& perm, double tol = kDefaultTol);

// String operators on the torus in the label basis of loop C.
// Along C they are diagonal; along the intersecting loop C' they shift labels.
Matrix loop_operator(const AnyonModel& model, int label, bool along_dual_loop);

// Coefficients of U F_a U^dagger in the F_c basis of the same loop: row a, column c.
struct TransportedCoefficients {
  Matrix lambda;
  // Largest distance of U F_a U^dagger from the span of the F_c.
  double residual = 0;
};
TransportedCoefficients transported_coefficients(const AnyonModel& model, const Matrix& gate, bool along_dual_loop);

// max |S_cd - S_ab| over Lambda_{a,c} Lambda'_{b,d} != 0; zero when the condition holds exactly.
double string_commutation_residual(const AnyonModel& model, const Matrix& gate);

// Conjugation keeps each loop's string operators on the same loop, up to N-th roots of unity.
bool clifford_star_membership(const AnyonModel& model, const Matrix& gate, double tol = kDefaultTol);
bool clifford_star_membership(const AnyonModel& model, const MonomialMatrix& gate, double tol = kDefaultTol);

// Qudit Pauli string X^x Z^z on the lattice edges, times omega^phase.
struct PauliString {
  int phase = 0;
  std::vector<int> x;
  std::vector<int> z;

  bool operator==(const PauliString&) const = default;
  auto operator<=>(const PauliString&) const = default;
};

PauliString multiply(const PauliString& a, const PauliString& b, int N);
PauliString dagger(const PauliString& a, int N);
// omega exponent k with a b = omega^k b a
int commutation_exponent(const PauliString& a, const PauliString& b, int N);

// Z_N toric code on an L x L torus with horizontal and vertical edges.
struct ToricLattice {
  int N = 2;
  int L = 2;

  int edge_count() const { return 2 * L * L; }
  int horizontal(int i, int j) const { return 2 * (((i % L) * L) + (j % L)); }
  int vertical(int i, int j) const { return horizontal(i, j) + 1; }
  // X^a Z^a' string along loop 1 or loop 2.
  PauliString string_operator(int loop, int a, int a_dual) const;
};

struct LatticeReport {
  int N = 0;
  int L = 0;
  int tuples_checked = 0;
  int intersecting_failures = 0;
  int same_loop_failures = 0;
  int dagger_failures = 0;
  int fusion_failures = 0;
  // Distinct elements generated by the four loop strings and omega.
  long long group_order = 0;
  long long expected_group_order = 0;
  std::vector<std::string> violations;

  bool passed() const;
};

LatticeReport lattice_commutation_check(int N, int L);

}  // namespace anyon
