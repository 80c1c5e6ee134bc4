#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "anyon/linalg.hpp"

namespace anyon {

struct AnyonLabel {
  int index = 0;
  std::string name;
};

// Keys follow F^{abc}_{def}: a 4-holed sphere with boundary (a, b, d, e),
// c labels the channel pairing (a,b)|(d,e) and f the channel pairing (b,d)|(e,a).
using FKey = std::array<int, 6>;
using RKey = std::array<int, 3>;

struct AnyonModel {
  std::string id;
  std::vector<AnyonLabel> labels;
  std::vector<int> dual;
  // Flattened N^c_{ab}, index (a * n + b) * n + c.
  std::vector<int> fusion;
  Matrix smatrix;
  std::map<FKey, cplx> fsymbols;
  std::map<RKey, cplx> rsymbols;
  std::vector<cplx> twists;

  int size() const { return static_cast<int>(labels.size()); }
  int N(int a, int b, int c) const { return fusion[(a * size() + b) * size() + c]; }
  void set_N(int a, int b, int c, int value) { fusion[(a * size() + b) * size() + c] = value; }

  // Zero when absent.
  cplx F(int a, int b, int c, int d, int e, int f) const;
  cplx R(int a, int b, int c) const;

  // Accepts display names and ASCII spellings (sigma, tau, psi, eps).
  std::optional<int> find_label(std::string_view name) const;
  std::string label_name(int a) const { return labels.at(a).name; }

  // Every fusion product a x b has exactly one outcome.
  bool is_abelian() const;
  bool has_twists() const { return static_cast<int>(twists.size()) == size(); }
};

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

AnyonModel fibonacci();
AnyonModel ising();
AnyonModel zn_toric(int n);
AnyonModel dg_abelian(const std::vector<int>& factors);

// "fibonacci", "ising", "zn_toric:N", "dg_abelian:N1,N2,...".
AnyonModel load_builtin(std::string_view spec);
bool is_builtin_spec(std::string_view spec);

struct ValidationCheck {
  std::string name;
  bool mandatory = true;
  bool passed = false;
  double residual = 0;
  std::string detail;
};

struct ModelValidationReport {
  double tol = kDefaultTol;
  std::vector<ValidationCheck> checks;
  bool accepted() const;
  const ValidationCheck* find(std::string_view name) const;
};

ModelValidationReport validate(const AnyonModel& model, double tol = kDefaultTol);

// d_a = S_{1a} * D, so d_1 = 1.
std::vector<double> quantum_dimensions(const AnyonModel& model);
double total_dimension(const AnyonModel& model);

// Sum_x S_ax S_bx conj-dual(S_cx) / S_1x.
cplx verlinde_coefficient(const AnyonModel& model, int a, int b, int c);

// Channel sets of the 4-holed sphere with boundary (i, j, k, l):
// pairing (i,j)|(k,l) and pairing (j,k)|(l,i).
std::vector<int> channel_labels(const AnyonModel& model, int i, int j, int k, int l);
std::vector<int> crossed_channel_labels(const AnyonModel& model, int i, int j, int k, int l);

// Block F_{m,n} = F^{i j m}_{k l n}; rows over channel_labels, columns over crossed_channel_labels.
struct FBlock {
  std::vector<int> rows;
  std::vector<int> cols;
  Matrix matrix;
};
FBlock f_block(const AnyonModel& model, int i, int j, int k, int l);

}  // namespace anyon
