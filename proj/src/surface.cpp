#include "anyon/surface.hpp"

#include <algorithm>
#include <stdexcept>

namespace anyon {

std::string SurfaceSpec::describe(const AnyonModel& model) const {
  if (is_torus()) return "torus";
  const auto& b = boundary_labels;
  if (!b.empty() && std::all_of(b.begin(), b.end(), [&](int x) { return x == b[0]; }))
    return "sphere:" + model.label_name(b[0]) + ":" + std::to_string(punctures);
  std::string out = "sphere";
  for (int x : b) out += ":" + model.label_name(x);
  return out;
}

SurfaceSpec parse_surface(const AnyonModel& model, const std::string& text) {
  if (text == "torus") return SurfaceSpec::torus();
  const std::string prefix = "sphere:";
  if (text.rfind(prefix, 0) != 0) throw std::invalid_argument("surface must be 'torus' or 'sphere:<label>:<M>'");
  const std::string rest = text.substr(prefix.size());
  const auto colon = rest.rfind(':');
  if (colon == std::string::npos) throw std::invalid_argument("surface must be 'sphere:<label>:<M>'");
  const std::string label = rest.substr(0, colon);
  const std::string count = rest.substr(colon + 1);
  if (count.empty() || !std::all_of(count.begin(), count.end(), ::isdigit))
    throw std::invalid_argument("puncture count must be a non-negative integer");
  auto z = model.find_label(label);
  if (!z) throw std::invalid_argument("unknown label '" + label + "' in surface spec");
  return SurfaceSpec::sphere(*z, std::stoi(count));
}

DapDecomposition standard_dap(const SurfaceSpec& surface) {
  DapDecomposition dap;
  if (surface.is_torus()) {
    dap.curves = {"C"};
    dap.self_glued_annulus = true;
    return dap;
  }
  const int M = surface.punctures;
  if (M < 3) throw std::invalid_argument("standard decomposition needs at least three punctures");
  const int N = M - 3;
  for (int j = 0; j < N; ++j) {
    dap.curves.push_back("C" + std::to_string(j + 1));
    std::array<NeighborSlot, 4> nb;
    nb[0] = {NeighborSlot::Kind::puncture, j + 1};
    nb[1] = j == 0 ? NeighborSlot{NeighborSlot::Kind::puncture, 0} : NeighborSlot{NeighborSlot::Kind::curve, j - 1};
    nb[2] = j == N - 1 ? NeighborSlot{NeighborSlot::Kind::dual_puncture, M - 1}
                       : NeighborSlot{NeighborSlot::Kind::curve, j + 1};
    nb[3] = {NeighborSlot::Kind::puncture, j + 2};
    dap.neighbors.push_back(nb);
  }
  return dap;
}

int degenerate_sphere_dimension(const AnyonModel& m, const std::vector<int>& b) {
  switch (b.size()) {
    case 0:
      return 1;
    case 1:
      return b[0] == 0 ? 1 : 0;
    case 2:
      return m.dual[b[0]] == b[1] ? 1 : 0;
    default:
      throw std::invalid_argument("degenerate_sphere_dimension: three or more punctures");
  }
}

namespace {

void extend(const AnyonModel& m, const std::vector<int>& b, Labeling& prefix, std::vector<Labeling>& out) {
  const int M = static_cast<int>(b.size());
  const int N = M - 3;
  const int j = static_cast<int>(prefix.size());  // next slot x_{j+1}
  const int prev = j == 0 ? b[0] : prefix.back();
  if (j == N) {
    if (m.N(prev, b[M - 2], m.dual[b[M - 1]]) == 1) out.push_back(prefix);
    return;
  }
  for (int x = 0; x < m.size(); ++x) {
    if (m.N(prev, b[j + 1], x) != 1) continue;
    prefix.push_back(x);
    extend(m, b, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

BasisIndex enumerate_labelings(const AnyonModel& m, const SurfaceSpec& surface, const DapDecomposition& dap) {
  BasisIndex basis;
  if (surface.is_torus()) {
    for (int a = 0; a < m.size(); ++a) basis.labelings.push_back({a});
  } else {
    if (surface.punctures < 3) throw std::invalid_argument("enumerate_labelings: use degenerate_sphere_dimension");
    if (dap.curve_count() != surface.punctures - 3) throw std::invalid_argument("decomposition does not match surface");
    Labeling prefix;
    extend(m, surface.boundary_labels, prefix, basis.labelings);
  }
  for (int i = 0; i < basis.size(); ++i) basis.position[basis.labelings[i]] = i;
  return basis;
}

int sphere_dimension(const AnyonModel& m, const std::vector<int>& boundary) {
  if (boundary.size() < 3) return degenerate_sphere_dimension(m, boundary);
  const SurfaceSpec s = SurfaceSpec::sphere(boundary);
  return enumerate_labelings(m, s, standard_dap(s)).size();
}

std::vector<int> cut_dimensions(const AnyonModel& m, const SurfaceSpec& surface, const DapDecomposition& dap,
                                int curve) {
  if (curve < 0 || curve >= dap.curve_count()) throw std::out_of_range("curve not in decomposition");
  std::vector<int> dims(m.size(), 0);
  for (const auto& l : enumerate_labelings(m, surface, dap).labelings) ++dims[l[curve]];
  return dims;
}

int gluing_cut_dimension(const AnyonModel& m, const SurfaceSpec& surface, int curve, int label) {
  if (surface.is_torus()) return 1;
  const auto& b = surface.boundary_labels;
  std::vector<int> left(b.begin(), b.begin() + curve + 2);
  left.push_back(m.dual[label]);
  std::vector<int> right{label};
  right.insert(right.end(), b.begin() + curve + 2, b.end());
  return sphere_dimension(m, left) * sphere_dimension(m, right);
}

int neighbor_label(const AnyonModel& m, const SurfaceSpec& surface, const Labeling& labeling,
                   const NeighborSlot& slot) {
  switch (slot.kind) {
    case NeighborSlot::Kind::curve:
      return labeling.at(slot.index);
    case NeighborSlot::Kind::puncture:
      return surface.boundary_labels.at(slot.index);
    case NeighborSlot::Kind::dual_puncture:
      return m.dual[surface.boundary_labels.at(slot.index)];
  }
  return 0;
}

std::string ising_qubit_isomorphism(const AnyonModel& m, const Labeling& labeling) {
  if (m.id != "ising") throw std::invalid_argument("qubit isomorphism is defined for the Ising model only");
  const int sigma = 1, psi = 2;
  std::string bits;
  for (std::size_t k = 0; k < labeling.size(); ++k) {
    const int x = labeling[k];
    if (k % 2 == 1) {
      if (x != sigma) throw std::invalid_argument("even slots must carry sigma");
      continue;
    }
    if (x == 0)
      bits += '0';
    else if (x == psi)
      bits += '1';
    else
      throw std::invalid_argument("odd slots must carry 1 or psi");
  }
  return bits;
}

std::string labeling_name(const AnyonModel& m, const Labeling& labeling) {
  std::string out = "(";
  for (std::size_t i = 0; i < labeling.size(); ++i) out += (i ? "," : "") + m.label_name(labeling[i]);
  return out + ")";
}

}  // namespace anyon
