#include "anyon/abelian.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace anyon {

namespace {

void require_abelian(const AnyonModel& m) {
  if (!m.is_abelian()) throw ModelError("model '" + m.id + "' is not abelian");
}

int mod(int v, int N) { return ((v % N) + N) % N; }

bool is_root_of_unity(cplx z, int N, double tol) {
  if (std::abs(std::abs(z) - 1.0) > tol) return false;
  return std::abs(std::pow(z, N) - 1.0) <= tol * N;
}

}  // namespace

int AbelianGroupSpec::exponent() const {
  return std::accumulate(factors.begin(), factors.end(), 1, [](int a, int b) { return std::lcm(a, b); });
}

AbelianGroupSpec abelian_group_spec(const AnyonModel& m) {
  std::string_view id = m.id;
  std::string_view rest;
  if (id.rfind("zn_toric:", 0) == 0)
    rest = id.substr(9);
  else if (id.rfind("dg_abelian:", 0) == 0)
    rest = id.substr(11);
  else
    throw ModelError("model '" + m.id + "' is not a built-in abelian model");
  AbelianGroupSpec spec;
  std::istringstream is{std::string(rest)};
  std::string item;
  while (std::getline(is, item, ',')) spec.factors.push_back(std::stoi(item));
  return spec;
}

int fuse(const AnyonModel& m, int a, int b) {
  int found = -1;
  for (int c = 0; c < m.size(); ++c) {
    if (m.N(a, b, c) == 0) continue;
    if (found >= 0 || m.N(a, b, c) != 1) throw ModelError("fusion " + m.label_name(a) + " x " + m.label_name(b) +
                                                          " has more than one outcome");
    found = c;
  }
  if (found < 0) throw ModelError("fusion " + m.label_name(a) + " x " + m.label_name(b) + " is empty");
  return found;
}

namespace {

int label_order(const AnyonModel& m, int a) {
  int power = a;
  int k = 1;
  while (power != 0) {
    power = fuse(m, power, a);
    if (++k > m.size()) throw ModelError("fusion rules do not form a group");
  }
  return k;
}

}  // namespace

int fusion_exponent(const AnyonModel& m) {
  require_abelian(m);
  int N = 1;
  for (int a = 0; a < m.size(); ++a) N = std::lcm(N, label_order(m, a));
  return N;
}

std::vector<Permutation> fusion_automorphisms(const AnyonModel& m) {
  require_abelian(m);
  const int n = m.size();
  // greedy generating set; each element reached from a parent by one generator
  std::vector<int> gens;
  std::vector<int> parent(n, -1), via(n, -1), order_reached;
  std::vector<bool> reached(n, false);
  reached[0] = true;
  order_reached.push_back(0);
  for (int a = 0; a < n; ++a) {
    if (reached[a]) continue;
    gens.push_back(a);
    const int g = static_cast<int>(gens.size()) - 1;
    for (std::size_t i = 0; i < order_reached.size(); ++i) {
      const int x = order_reached[i];
      for (int h = 0; h <= g; ++h) {
        const int y = fuse(m, x, gens[h]);
        if (reached[y]) continue;
        reached[y] = true;
        parent[y] = x;
        via[y] = h;
        order_reached.push_back(y);
      }
    }
  }

  std::vector<int> gen_order;
  for (int g : gens) gen_order.push_back(label_order(m, g));
  std::vector<int> orders(n);
  for (int a = 0; a < n; ++a) orders[a] = label_order(m, a);

  std::vector<Permutation> out;
  std::vector<int> images(gens.size(), 0);
  // odometer over generator images with matching order
  std::function<void(std::size_t)> assign = [&](std::size_t g) {
    if (g == gens.size()) {
      Permutation phi(n, -1);
      phi[0] = 0;
      for (std::size_t i = 1; i < order_reached.size(); ++i) {
        const int y = order_reached[i];
        phi[y] = fuse(m, phi[parent[y]], images[via[y]]);
      }
      if (!is_permutation(phi, n)) return;
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
          if (phi[fuse(m, a, b)] != fuse(m, phi[a], phi[b])) return;
      out.push_back(std::move(phi));
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (orders[c] != gen_order[g]) continue;
      images[g] = c;
      assign(g + 1);
    }
  };
  assign(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> affine_label_permutations(const AnyonModel& m) {
  std::vector<Permutation> out;
  for (const auto& phi : fusion_automorphisms(m))
    for (int c = 0; c < m.size(); ++c) {
      Permutation p(m.size());
      for (int a = 0; a < m.size(); ++a) p[a] = fuse(m, c, phi[a]);
      out.push_back(std::move(p));
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool smatrix_phase_check(const AnyonModel& m, double tol) {
  require_abelian(m);
  const double D = total_dimension(m);
  for (int a = 0; a < m.size(); ++a) {
    if (std::abs(m.smatrix(0, a) - 1.0 / D) > tol) return false;
    for (int b = 0; b < m.size(); ++b)
      if (std::abs(std::abs(m.smatrix(a, b)) * D - 1.0) > tol) return false;
  }
  return true;
}

LambdaCheck check_lambda_monomial(const AnyonModel& m, const Permutation& perm, double tol) {
  require_abelian(m);
  const int n = m.size();
  if (!is_permutation(perm, n)) throw std::invalid_argument("check_lambda_monomial: not a label permutation");
  LambdaCheck out;
  out.lambda = Matrix::Zero(n, n);
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d)
      for (int a = 0; a < n; ++a) out.lambda(b, d) += m.smatrix(b, a) * std::conj(m.smatrix(d, perm[a]));
  out.monomial = is_monomial(out.lambda);
  if (!out.monomial) return out;
  const int N = fusion_exponent(m);
  out.string_perm.assign(n, -1);
  out.phases.assign(n, 0.0);
  out.root_of_unity_phases = true;
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d)
      if (std::abs(out.lambda(b, d)) >= kZeroThreshold) {
        out.string_perm[b] = d;
        out.phases[b] = out.lambda(b, d);
        if (!is_root_of_unity(out.lambda(b, d), N, tol)) out.root_of_unity_phases = false;
      }
  return out;
}

Matrix loop_operator(const AnyonModel& m, int label, bool along_dual_loop) {
  const int n = m.size();
  Matrix diag = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a) diag(a, a) = m.smatrix(label, a) / m.smatrix(0, a);
  if (!along_dual_loop) return diag;
  return m.smatrix.adjoint() * diag * m.smatrix;
}

TransportedCoefficients transported_coefficients(const AnyonModel& m, const Matrix& gate, bool along_dual_loop) {
  require_abelian(m);
  const int n = m.size();
  if (gate.rows() != n || gate.cols() != n) throw std::invalid_argument("gate does not act on the torus basis");
  std::vector<Matrix> basis;
  for (int c = 0; c < n; ++c) basis.push_back(loop_operator(m, c, along_dual_loop));
  TransportedCoefficients out;
  out.lambda = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    const Matrix x = gate * basis[a] * gate.adjoint();
    Matrix rebuilt = Matrix::Zero(n, n);
    for (int c = 0; c < n; ++c) {
      // the loop operators of an abelian model are orthogonal with norm^2 = n
      out.lambda(a, c) = (basis[c].adjoint() * x).trace() / static_cast<double>(n);
      rebuilt += out.lambda(a, c) * basis[c];
    }
    out.residual = std::max(out.residual, max_abs(x - rebuilt));
  }
  return out;
}

double string_commutation_residual(const AnyonModel& m, const Matrix& gate) {
  const auto along = transported_coefficients(m, gate, false);
  const auto across = transported_coefficients(m, gate, true);
  double residual = std::max(along.residual, across.residual);
  const int n = m.size();
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (std::abs(along.lambda(a, c)) < kZeroThreshold) continue;
      for (int b = 0; b < n; ++b)
        for (int d = 0; d < n; ++d) {
          if (std::abs(across.lambda(b, d)) < kZeroThreshold) continue;
          residual = std::max(residual, std::abs(m.smatrix(c, d) - m.smatrix(a, b)));
        }
    }
  return residual;
}

bool clifford_star_membership(const AnyonModel& m, const Matrix& gate, double tol) {
  require_abelian(m);
  const int n = m.size();
  if (gate.rows() != n || gate.cols() != n) throw std::invalid_argument("gate does not act on the torus basis");
  const int N = fusion_exponent(m);
  for (bool dual_loop : {false, true}) {
    std::vector<Matrix> basis;
    for (int c = 0; c < n; ++c) basis.push_back(loop_operator(m, c, dual_loop));
    for (int a = 0; a < n; ++a) {
      const Matrix x = gate * basis[a] * gate.adjoint();
      bool matched = false;
      for (int c = 0; c < n && !matched; ++c) {
        const cplx lambda = (basis[c].adjoint() * x).trace() / static_cast<double>(n);
        if (std::abs(std::abs(lambda) - 1.0) > tol) continue;
        matched = max_abs(x - lambda * basis[c]) <= tol && is_root_of_unity(lambda, N, tol);
      }
      if (!matched) return false;
    }
  }
  return true;
}

bool clifford_star_membership(const AnyonModel& m, const MonomialMatrix& gate, double tol) {
  return clifford_star_membership(m, gate.dense(), tol);
}

PauliString multiply(const PauliString& a, const PauliString& b, int N) {
  // X^x Z^z X^x' Z^z' = omega^{z.x'} X^{x+x'} Z^{z+z'}, using Z X = omega X Z
  PauliString out;
  out.x.resize(a.x.size());
  out.z.resize(a.z.size());
  long long phase = a.phase + b.phase;
  for (std::size_t e = 0; e < a.x.size(); ++e) {
    phase += static_cast<long long>(a.z[e]) * b.x[e];
    out.x[e] = mod(a.x[e] + b.x[e], N);
    out.z[e] = mod(a.z[e] + b.z[e], N);
  }
  out.phase = static_cast<int>(((phase % N) + N) % N);
  return out;
}

PauliString dagger(const PauliString& a, int N) {
  // (X^x Z^z)^dagger = Z^-z X^-x = omega^{z.x} X^-x Z^-z
  PauliString out;
  long long phase = -a.phase;
  out.x.resize(a.x.size());
  out.z.resize(a.z.size());
  for (std::size_t e = 0; e < a.x.size(); ++e) {
    phase += static_cast<long long>(a.z[e]) * a.x[e];
    out.x[e] = mod(-a.x[e], N);
    out.z[e] = mod(-a.z[e], N);
  }
  out.phase = static_cast<int>(((phase % N) + N) % N);
  return out;
}

int commutation_exponent(const PauliString& a, const PauliString& b, int N) {
  const PauliString ab = multiply(a, b, N);
  const PauliString ba = multiply(b, a, N);
  return mod(ab.phase - ba.phase, N);
}

PauliString ToricLattice::string_operator(int loop, int a, int a_dual) const {
  PauliString s;
  s.x.assign(edge_count(), 0);
  s.z.assign(edge_count(), 0);
  for (int t = 0; t < L; ++t) {
    if (loop == 1) {
      s.x[horizontal(t, 0)] = mod(a, N);
      s.z[vertical(t, 0)] = mod(a_dual, N);
    } else {
      // opposite orientation so that loop 1 crosses loop 2 with intersection number +1
      s.x[vertical(0, t)] = mod(-a, N);
      s.z[horizontal(0, t)] = mod(-a_dual, N);
    }
  }
  return s;
}

bool LatticeReport::passed() const {
  return intersecting_failures == 0 && same_loop_failures == 0 && dagger_failures == 0 && fusion_failures == 0 &&
         group_order == expected_group_order;
}

LatticeReport lattice_commutation_check(int N, int L) {
  if (N < 2 || L < 2) throw std::invalid_argument("lattice check needs N >= 2 and L >= 2");
  const ToricLattice lattice{N, L};
  LatticeReport report;
  report.N = N;
  report.L = L;
  auto note = [&](const std::string& what, int a, int ad, int b, int bd) {
    if (report.violations.size() < 20)
      report.violations.push_back(what + " (" + std::to_string(a) + "," + std::to_string(ad) + "," +
                                  std::to_string(b) + "," + std::to_string(bd) + ")");
  };
  for (int a = 0; a < N; ++a)
    for (int ad = 0; ad < N; ++ad)
      for (int b = 0; b < N; ++b)
        for (int bd = 0; bd < N; ++bd) {
          ++report.tuples_checked;
          const PauliString p1 = lattice.string_operator(1, a, ad);
          const PauliString p2 = lattice.string_operator(2, b, bd);
          if (commutation_exponent(p1, p2, N) != mod(a * bd - ad * b, N)) {
            ++report.intersecting_failures;
            note("intersecting loops", a, ad, b, bd);
          }
          for (int loop : {1, 2}) {
            const PauliString q1 = lattice.string_operator(loop, a, ad);
            const PauliString q2 = lattice.string_operator(loop, b, bd);
            if (commutation_exponent(q1, q2, N) != 0) {
              ++report.same_loop_failures;
              note("same loop " + std::to_string(loop), a, ad, b, bd);
            }
            if (multiply(q1, q2, N) != lattice.string_operator(loop, a + b, ad + bd)) {
              ++report.fusion_failures;
              note("fusion on loop " + std::to_string(loop), a, ad, b, bd);
            }
          }
        }
  for (int loop : {1, 2})
    for (int a = 0; a < N; ++a)
      for (int ad = 0; ad < N; ++ad)
        if (dagger(lattice.string_operator(loop, a, ad), N) != lattice.string_operator(loop, -a, -ad)) {
          ++report.dagger_failures;
          note("dagger on loop " + std::to_string(loop), a, ad, 0, 0);
        }

  // closure of <X(C1), Z(C1), X(C2), Z(C2), omega>
  std::vector<PauliString> gens = {lattice.string_operator(1, 1, 0), lattice.string_operator(1, 0, 1),
                                   lattice.string_operator(2, 1, 0), lattice.string_operator(2, 0, 1)};
  PauliString omega = lattice.string_operator(1, 0, 0);
  omega.phase = 1;
  gens.push_back(omega);
  std::set<PauliString> seen;
  std::deque<PauliString> queue;
  PauliString identity = lattice.string_operator(1, 0, 0);
  seen.insert(identity);
  queue.push_back(identity);
  while (!queue.empty()) {
    const PauliString cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      PauliString next = multiply(cur, g, N);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  report.group_order = static_cast<long long>(seen.size());
  report.expected_group_order = 1;
  for (int i = 0; i < 5; ++i) report.expected_group_order *= N;
  return report;
}

}  // namespace anyon
