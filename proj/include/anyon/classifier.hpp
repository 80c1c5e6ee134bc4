#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "anyon/mcg.hpp"
#include "anyon/model.hpp"
#include "anyon/monomial.hpp"
#include "anyon/surface.hpp"

namespace anyon {

// Raised when the requested surface has an empty state space.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CurvePermutationFamily {
  // Labels with nonzero cut dimension on each curve.
  std::vector<std::vector<int>> occurring;
  // Label permutations fixing every label outside occurring[j].
  std::vector<std::vector<Permutation>> per_curve;
};

CurvePermutationFamily allowed_curve_permutations(const AnyonModel& model, const SurfaceSpec& surface,
                                                  const DapDecomposition& dap);

struct PhaseFunction {
  // Radians in [0, 2pi) per channel label, zero on the first label of each component.
  std::vector<double> angles;
  std::vector<int> component;
  Permutation perm_out;
};

struct IsoPhaseSet {
  std::array<int, 4> boundary{};
  std::array<int, 4> targets{};
  Permutation perm;
  std::vector<int> labels;
  std::vector<int> target_labels;
  std::vector<PhaseFunction> functions;
};

IsoPhaseSet iso_phase_set(const AnyonModel& model, const std::array<int, 4>& boundary,
                          const std::array<int, 4>& targets, const Permutation& perm, double tol = kDefaultTol);

struct ClassifiedGate {
  GateFamily family;
  std::vector<Permutation> perm_per_curve;
  // Every similarity class lies inside one free-phase component.
  bool finite = true;
};

struct ClassificationReport {
  std::string model_id;
  std::string surface;
  int dimension = 0;
  std::vector<std::string> label_names;
  std::vector<std::string> basis_names;
  std::vector<std::string> words;
  int candidate_families = 0;
  int similarity_classes = 0;
  std::vector<ClassifiedGate> classes;
  std::string verdict;
  bool upper_bound = true;
  std::vector<std::string> notes;

  int group_order() const { return static_cast<int>(classes.size()); }
  bool finite() const;
};

ClassificationReport classify_punctured_sphere(const AnyonModel& model, int M, int z,
                                               const std::vector<McgWord>& mcg_words, double tol = kDefaultTol);

ClassificationReport classify_torus(const AnyonModel& model, const std::vector<McgWord>& mcg_words,
                                    double tol = kDefaultTol);

// Basis change of the standard sphere basis across curve `curve` (0-based).
struct CurveFMove {
  std::vector<Labeling> crossed;
  Matrix matrix;
};
CurveFMove curve_fmove(const AnyonModel& model, const SurfaceSpec& surface, int curve);

// Qubit Pauli string ("IXYZ" letters) proportional to g, qubit 0 first.
std::optional<std::string> match_pauli_string(const Matrix& g, double tol = kDefaultTol);

// Gate in qubit order for S^2(sigma^M), using the bit-string isomorphism.
Matrix ising_qubit_matrix(const AnyonModel& model, const BasisIndex& basis, const MonomialMatrix& gate);

// Smallest n <= max_power with gate^n similarity-trivial.
std::optional<int> gate_order(const MonomialMatrix& gate, const EquivalenceClasses& classes, int max_power,
                              double tol = kDefaultTol);

// Appends w_i w_{i+1} for each word (cyclically), doubling the list.
std::vector<McgWord> doubled_words(const std::vector<McgWord>& words);

std::string render_report_text(const ClassificationReport& report);
std::string render_report_json(const ClassificationReport& report);

}  // namespace anyon
