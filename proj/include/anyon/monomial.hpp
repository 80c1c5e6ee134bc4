#pragma once

#include <optional>
#include <vector>

#include "anyon/mcg.hpp"
#include "anyon/model.hpp"
#include "anyon/surface.hpp"

namespace anyon {

// |l> -> phases[l] |perm[l]>
struct MonomialMatrix {
  Permutation perm;
  std::vector<cplx> phases;

  int size() const { return static_cast<int>(perm.size()); }
  Matrix dense() const;
  MonomialMatrix operator*(const MonomialMatrix& rhs) const;
  static MonomialMatrix identity(int n);
};

// Throws std::invalid_argument unless m is monomial.
MonomialMatrix to_monomial(const Matrix& m);

// Unions over phase variables: value(x) = potential(x) * value(root(x)).
class PhaseUnionFind {
 public:
  explicit PhaseUnionFind(int n);
  std::pair<int, cplx> find(int x);
  // Impose value(x) = ratio * value(y); false on a contradiction beyond tol.
  bool relate(int x, int y, cplx ratio, double tol);

 private:
  std::vector<int> parent_;
  std::vector<cplx> potential_;
};

// Solutions of VL Pi D = Pi' D' VR, one family per (Pi, Pi').
struct IntertwinerSolution {
  Permutation perm_in;
  Permutation perm_out;
  // Smallest basis index of the constraint-graph component holding d_l.
  std::vector<int> phase_class;
  // d_l / d_{phase_class[l]}
  std::vector<cplx> relative_phases;
  // Component (named by its smallest d index) and relative phase of each d'_k.
  std::vector<int> out_class;
  std::vector<cplx> out_relative;

  std::vector<int> representatives() const;
  int free_phases() const { return static_cast<int>(representatives().size()); }
  // free[i] is the phase of the i-th representative.
  MonomialMatrix instantiate(const std::vector<cplx>& free) const;
  MonomialMatrix instantiate_out(const std::vector<cplx>& free) const;
};

using PermutationSet = std::optional<std::vector<Permutation>>;

inline constexpr int kWildcardLimit = 8;

// Wildcard perm_in (nullopt) searches all permutations and is limited to dimension kWildcardLimit.
std::vector<IntertwinerSolution> solve_intertwiner(const Matrix& left, const Matrix& right,
                                                   const PermutationSet& perm_in,
                                                   const std::optional<Permutation>& perm_out,
                                                   double tol = kDefaultTol);

inline std::vector<IntertwinerSolution> solve_intertwiner(const Matrix& v, const PermutationSet& perm_in,
                                                          const std::optional<Permutation>& perm_out,
                                                          double tol = kDefaultTol) {
  return solve_intertwiner(v, v, perm_in, perm_out, tol);
}

// Monomial gates Pi D with phases tied together as in an intertwiner solution.
struct GateFamily {
  Permutation perm;
  std::vector<int> phase_class;
  std::vector<cplx> relative_phases;
  // Image permutation under each constraint word, in constraint order.
  std::vector<Permutation> images;

  std::vector<int> representatives() const;
  int free_phases() const { return static_cast<int>(representatives().size()); }
  MonomialMatrix instantiate(const std::vector<cplx>& free) const;
  // All free phases set to 1.
  MonomialMatrix representative() const;
};

GateFamily to_gate_family(const IntertwinerSolution& s);

// Common refinement of two families sharing a permutation; nullopt when they are disjoint.
std::optional<GateFamily> conjoin(const GateFamily& a, const GateFamily& b, double tol = kCycleTol);

struct DeltaSet {
  std::vector<McgWord> words;
  int dimension = 0;
  std::vector<GateFamily> families;
};

DeltaSet delta_set(const AnyonModel& model, const SurfaceSpec& surface, const McgWord& word,
                   const PermutationSet& restrict_perms = std::nullopt, double tol = kDefaultTol);

DeltaSet intersect_delta(const std::vector<DeltaSet>& sets, double tol = kCycleTol);

struct EquivalenceClasses {
  std::vector<int> class_of;
  int count = 0;
};

EquivalenceClasses equivalence_classes_from(const std::vector<Matrix>& matrices, int dimension);
EquivalenceClasses equivalence_classes(const AnyonModel& model, const SurfaceSpec& surface,
                                       const std::vector<McgWord>& words);

bool check_sim_trivial(const MonomialMatrix& gate, const EquivalenceClasses& classes, double tol = kDefaultTol);

}  // namespace anyon
