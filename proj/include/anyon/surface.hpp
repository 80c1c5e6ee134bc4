#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "anyon/model.hpp"

namespace anyon {

struct SurfaceSpec {
  enum class Kind { torus, punctured_sphere };
  Kind kind = Kind::torus;
  int punctures = 0;
  std::vector<int> boundary_labels;

  static SurfaceSpec torus() { return {}; }
  static SurfaceSpec sphere(int z, int M) { return {Kind::punctured_sphere, M, std::vector<int>(M, z)}; }
  static SurfaceSpec sphere(std::vector<int> labels) {
    const int M = static_cast<int>(labels.size());
    return {Kind::punctured_sphere, M, std::move(labels)};
  }

  bool is_torus() const { return kind == Kind::torus; }
  // "torus" or "sphere:<label>:<M>"; mixed boundaries list every label.
  std::string describe(const AnyonModel& model) const;
};

// "torus" | "sphere:<label>:<M>"
SurfaceSpec parse_surface(const AnyonModel& model, const std::string& text);

struct NeighborSlot {
  enum class Kind { curve, puncture, dual_puncture };
  Kind kind = Kind::curve;
  int index = 0;
};

// Neighbor slots of an internal curve, in the order (puncture, previous, next, puncture).
struct DapDecomposition {
  std::vector<std::string> curves;
  std::vector<std::array<NeighborSlot, 4>> neighbors;
  bool self_glued_annulus = false;

  int curve_count() const { return static_cast<int>(curves.size()); }
};

// One curve per internal pants seam; the torus uses a single self-glued annulus.
DapDecomposition standard_dap(const SurfaceSpec& surface);

using Labeling = std::vector<int>;

struct BasisIndex {
  std::vector<Labeling> labelings;
  std::map<Labeling, int> position;

  int size() const { return static_cast<int>(labelings.size()); }
  int index_of(const Labeling& l) const {
    auto it = position.find(l);
    return it == position.end() ? -1 : it->second;
  }
};

// Lexicographic in (curve order, label order).
BasisIndex enumerate_labelings(const AnyonModel& model, const SurfaceSpec& surface,
                               const DapDecomposition& dap);

// Dimension of the sphere with fewer than three punctures.
int degenerate_sphere_dimension(const AnyonModel& model, const std::vector<int>& boundary);

// Dimension by enumeration; works for any puncture count.
int sphere_dimension(const AnyonModel& model, const std::vector<int>& boundary);

// Count of labelings with the given curve carrying each label.
std::vector<int> cut_dimensions(const AnyonModel& model, const SurfaceSpec& surface,
                                const DapDecomposition& dap, int curve);

// Same count from the gluing factorization at curve C_{curve+1}.
int gluing_cut_dimension(const AnyonModel& model, const SurfaceSpec& surface, int curve, int label);

// Label carried by a neighbor slot of an internal curve.
int neighbor_label(const AnyonModel& model, const SurfaceSpec& surface, const Labeling& labeling,
                   const NeighborSlot& slot);

// Bit k is 0 for x_{2k+1} = 1 and 1 for x_{2k+1} = psi.
std::string ising_qubit_isomorphism(const AnyonModel& model, const Labeling& labeling);

std::string labeling_name(const AnyonModel& model, const Labeling& labeling);

}  // namespace anyon
