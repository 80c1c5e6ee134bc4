#include "anyon/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace anyon {

Matrix MonomialMatrix::dense() const {
  const int n = size();
  Matrix m = Matrix::Zero(n, n);
  for (int l = 0; l < n; ++l) m(perm[l], l) = phases[l];
  return m;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& rhs) const {
  MonomialMatrix out;
  out.perm = compose(perm, rhs.perm);
  out.phases.resize(rhs.perm.size());
  for (std::size_t l = 0; l < rhs.perm.size(); ++l) out.phases[l] = phases[rhs.perm[l]] * rhs.phases[l];
  return out;
}

MonomialMatrix MonomialMatrix::identity(int n) { return {identity_permutation(n), std::vector<cplx>(n, 1.0)}; }

MonomialMatrix to_monomial(const Matrix& m) {
  if (!is_monomial(m)) throw std::invalid_argument("matrix is not monomial");
  MonomialMatrix out;
  const int n = static_cast<int>(m.cols());
  out.perm.resize(n);
  out.phases.resize(n);
  for (int l = 0; l < n; ++l)
    for (int r = 0; r < n; ++r)
      if (std::abs(m(r, l)) >= kZeroThreshold) {
        out.perm[l] = r;
        out.phases[l] = m(r, l);
      }
  return out;
}

PhaseUnionFind::PhaseUnionFind(int n) : parent_(n), potential_(n, 1.0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

std::pair<int, cplx> PhaseUnionFind::find(int x) {
  std::vector<int> path;
  while (parent_[x] != x) {
    path.push_back(x);
    x = parent_[x];
  }
  const int root = x;
  // compress from the node nearest the root outwards
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const int node = *it;
    const int p = parent_[node];
    if (p != root) potential_[node] *= potential_[p];
    parent_[node] = root;
  }
  return {root, path.empty() ? cplx(1.0) : potential_[path.front()]};
}

bool PhaseUnionFind::relate(int x, int y, cplx ratio, double tol) {
  ratio /= std::abs(ratio);
  auto [rx, px] = find(x);
  auto [ry, py] = find(y);
  if (rx == ry) return std::abs(px - ratio * py) <= tol;
  cplx link = ratio * py / px;
  link /= std::abs(link);
  parent_[rx] = ry;
  potential_[rx] = link;
  return true;
}

namespace {

std::vector<int> reps_of(const std::vector<int>& phase_class) {
  std::vector<int> reps;
  for (std::size_t l = 0; l < phase_class.size(); ++l)
    if (phase_class[l] == static_cast<int>(l)) reps.push_back(static_cast<int>(l));
  return reps;
}

cplx free_phase_for(const std::vector<int>& reps, const std::vector<cplx>& free, int rep) {
  const auto pos = std::lower_bound(reps.begin(), reps.end(), rep) - reps.begin();
  return free.at(pos);
}

// Component naming by smallest index among the first `named` nodes; relative phases to that node.
void canonical_components(PhaseUnionFind& uf, int named, int total, std::vector<int>& cls, std::vector<cplx>& rel) {
  std::vector<int> root_rep(total, -1);
  std::vector<cplx> root_pot(total, 1.0);
  cls.assign(total, -1);
  rel.assign(total, 1.0);
  for (int x = 0; x < named; ++x) {
    auto [root, pot] = uf.find(x);
    if (root_rep[root] < 0) {
      root_rep[root] = x;
      root_pot[root] = pot;
    }
  }
  for (int x = 0; x < total; ++x) {
    auto [root, pot] = uf.find(x);
    cls[x] = root_rep[root];
    cplx r = pot / root_pot[root];
    rel[x] = r / std::abs(r);
  }
}

struct SearchContext {
  int n = 0;
  const Matrix* right = nullptr;
  Matrix left_perm;  // left with columns permuted
  Eigen::MatrixXd mod_left, mod_right;
  double tol = kDefaultTol;
  std::optional<Permutation> fixed_out_inv;
  std::vector<int> row_for;  // row of right assigned to each row of left_perm
  std::vector<bool> used;
  std::vector<std::pair<Permutation, PhaseUnionFind>> leaves;
};

bool rows_match(const SearchContext& c, int m, int k) {
  for (int l = 0; l < c.n; ++l) {
    const double a = c.mod_left(m, l), b = c.mod_right(k, l);
    const bool za = a < kZeroThreshold, zb = b < kZeroThreshold;
    if (za != zb) return false;
    if (!za && std::abs(a - b) > kCycleTol) return false;
  }
  return true;
}

void search(SearchContext& c, int m, const PhaseUnionFind& uf) {
  if (m == c.n) {
    Permutation out_inv = c.row_for;
    c.leaves.emplace_back(inverse_permutation(out_inv), uf);
    return;
  }
  for (int k = 0; k < c.n; ++k) {
    if (c.used[k]) continue;
    if (c.fixed_out_inv && (*c.fixed_out_inv)[m] != k) continue;
    if (!rows_match(c, m, k)) continue;
    PhaseUnionFind next = uf;
    bool ok = true;
    for (int l = 0; l < c.n && ok; ++l) {
      if (c.mod_left(m, l) < kZeroThreshold) continue;
      // left_perm(m,l) d_l = d'_k right(k,l)
      ok = next.relate(c.n + k, l, c.left_perm(m, l) / (*c.right)(k, l), kCycleTol);
    }
    if (!ok) continue;
    c.used[k] = true;
    c.row_for[m] = k;
    search(c, m + 1, next);
    c.used[k] = false;
  }
}

}  // namespace

std::vector<int> IntertwinerSolution::representatives() const { return reps_of(phase_class); }

MonomialMatrix IntertwinerSolution::instantiate(const std::vector<cplx>& free) const {
  const auto reps = representatives();
  MonomialMatrix g{perm_in, std::vector<cplx>(perm_in.size())};
  for (std::size_t l = 0; l < perm_in.size(); ++l)
    g.phases[l] = relative_phases[l] * free_phase_for(reps, free, phase_class[l]);
  return g;
}

MonomialMatrix IntertwinerSolution::instantiate_out(const std::vector<cplx>& free) const {
  const auto reps = representatives();
  MonomialMatrix g{perm_out, std::vector<cplx>(perm_out.size())};
  for (std::size_t k = 0; k < perm_out.size(); ++k)
    g.phases[k] = out_relative[k] * free_phase_for(reps, free, out_class[k]);
  return g;
}

std::vector<IntertwinerSolution> solve_intertwiner(const Matrix& left, const Matrix& right,
                                                   const PermutationSet& perm_in,
                                                   const std::optional<Permutation>& perm_out, double tol) {
  if (left.rows() != left.cols() || right.rows() != right.cols() || left.rows() != right.rows())
    throw std::invalid_argument("solve_intertwiner: matrices must be square and of equal size");
  const double unit_tol = std::max(tol, kCycleTol);
  if (unitarity_residual(left) > unit_tol || unitarity_residual(right) > unit_tol)
    throw std::invalid_argument("solve_intertwiner: matrix is not unitary");
  const int n = static_cast<int>(left.rows());
  if (perm_out && !is_permutation(*perm_out, n)) throw std::invalid_argument("perm_out is not a permutation");

  std::vector<Permutation> candidates;
  if (perm_in) {
    for (const auto& p : *perm_in)
      if (!is_permutation(p, n)) throw std::invalid_argument("perm_in candidate is not a permutation");
    candidates = *perm_in;
  } else {
    if (n > kWildcardLimit)
      throw std::length_error("wildcard permutation search is limited to dimension " +
                              std::to_string(kWildcardLimit));
    Permutation p = identity_permutation(n);
    do candidates.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }

  SearchContext ctx;
  ctx.n = n;
  ctx.right = &right;
  ctx.tol = tol;
  ctx.mod_right = right.cwiseAbs();
  if (perm_out) ctx.fixed_out_inv = inverse_permutation(*perm_out);

  std::vector<IntertwinerSolution> out;
  for (const auto& pi : candidates) {
    ctx.left_perm = Matrix(n, n);
    for (int l = 0; l < n; ++l) ctx.left_perm.col(l) = left.col(pi[l]);
    ctx.mod_left = ctx.left_perm.cwiseAbs();
    ctx.row_for.assign(n, -1);
    ctx.used.assign(n, false);
    ctx.leaves.clear();
    search(ctx, 0, PhaseUnionFind(2 * n));
    for (auto& [pout, uf] : ctx.leaves) {
      IntertwinerSolution s;
      s.perm_in = pi;
      s.perm_out = pout;
      std::vector<int> cls;
      std::vector<cplx> rel;
      canonical_components(uf, n, 2 * n, cls, rel);
      s.phase_class.assign(cls.begin(), cls.begin() + n);
      s.relative_phases.assign(rel.begin(), rel.begin() + n);
      s.out_class.assign(cls.begin() + n, cls.end());
      s.out_relative.assign(rel.begin() + n, rel.end());
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<int> GateFamily::representatives() const { return reps_of(phase_class); }

MonomialMatrix GateFamily::instantiate(const std::vector<cplx>& free) const {
  const auto reps = representatives();
  MonomialMatrix g{perm, std::vector<cplx>(perm.size())};
  for (std::size_t l = 0; l < perm.size(); ++l)
    g.phases[l] = relative_phases[l] * free_phase_for(reps, free, phase_class[l]);
  return g;
}

MonomialMatrix GateFamily::representative() const {
  return instantiate(std::vector<cplx>(representatives().size(), 1.0));
}

GateFamily to_gate_family(const IntertwinerSolution& s) {
  return {s.perm_in, s.phase_class, s.relative_phases, {s.perm_out}};
}

std::optional<GateFamily> conjoin(const GateFamily& a, const GateFamily& b, double tol) {
  if (a.perm != b.perm) return std::nullopt;
  const int n = static_cast<int>(a.perm.size());
  PhaseUnionFind uf(n);
  for (const GateFamily* f : {&a, &b})
    for (int l = 0; l < n; ++l)
      if (f->phase_class[l] != l && !uf.relate(l, f->phase_class[l], f->relative_phases[l], tol))
        return std::nullopt;
  GateFamily out;
  out.perm = a.perm;
  canonical_components(uf, n, n, out.phase_class, out.relative_phases);
  out.images = a.images;
  out.images.insert(out.images.end(), b.images.begin(), b.images.end());
  return out;
}

DeltaSet delta_set(const AnyonModel& model, const SurfaceSpec& surface, const McgWord& word,
                   const PermutationSet& restrict_perms, double tol) {
  const RepMatrix v = evaluate_word(model, surface, word);
  DeltaSet out;
  out.words = {word};
  out.dimension = static_cast<int>(v.matrix.rows());
  for (const auto& s : solve_intertwiner(v.matrix, restrict_perms, std::nullopt, tol))
    out.families.push_back(to_gate_family(s));
  return out;
}

DeltaSet intersect_delta(const std::vector<DeltaSet>& sets, double tol) {
  if (sets.empty()) throw std::invalid_argument("intersect_delta needs at least one set");
  DeltaSet out = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) {
    if (sets[i].dimension != out.dimension) throw std::invalid_argument("intersect_delta: basis mismatch");
    std::vector<GateFamily> next;
    for (const auto& f : out.families)
      for (const auto& g : sets[i].families)
        if (auto h = conjoin(f, g, tol)) next.push_back(std::move(*h));
    out.families = std::move(next);
    out.words.insert(out.words.end(), sets[i].words.begin(), sets[i].words.end());
  }
  return out;
}

EquivalenceClasses equivalence_classes_from(const std::vector<Matrix>& matrices, int n) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& v : matrices)
    for (int r = 0; r < n; ++r) {
      int first = -1;
      for (int c = 0; c < n; ++c) {
        if (std::abs(v(r, c)) < kZeroThreshold) continue;
        if (first < 0) {
          first = c;
        } else {
          int a = root(first), b = root(c);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
  EquivalenceClasses out;
  out.class_of.assign(n, -1);
  std::vector<int> id_of_root(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = root(x);
    if (id_of_root[r] < 0) id_of_root[r] = out.count++;
    out.class_of[x] = id_of_root[r];
  }
  return out;
}

EquivalenceClasses equivalence_classes(const AnyonModel& model, const SurfaceSpec& surface,
                                       const std::vector<McgWord>& words) {
  std::vector<Matrix> mats;
  int n = surface.is_torus() ? model.size() : enumerate_labelings(model, surface, standard_dap(surface)).size();
  for (const auto& w : words) mats.push_back(evaluate_word(model, surface, w).matrix);
  return equivalence_classes_from(mats, n);
}

bool check_sim_trivial(const MonomialMatrix& gate, const EquivalenceClasses& classes, double tol) {
  const int n = gate.size();
  if (static_cast<int>(classes.class_of.size()) != n) throw std::invalid_argument("check_sim_trivial: basis mismatch");
  if (gate.perm != identity_permutation(n)) return false;
  std::vector<int> first(classes.count, -1);
  for (int l = 0; l < n; ++l) {
    int& f = first[classes.class_of[l]];
    if (f < 0)
      f = l;
    else if (std::abs(gate.phases[l] - gate.phases[f]) > tol)
      return false;
  }
  return true;
}

}  // namespace anyon
