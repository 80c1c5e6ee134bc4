#include "anyon/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "anyon/abelian.hpp"

namespace anyon {

namespace {

constexpr std::size_t kMaxCurvePermutations = 40320;

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

// Permutations of `labels` (within blocks of equal key) extended by the identity elsewhere.
std::vector<Permutation> blockwise_permutations(int n, const std::vector<std::vector<int>>& blocks) {
  std::size_t count = 1;
  for (const auto& b : blocks)
    for (std::size_t k = 2; k <= b.size(); ++k) {
      count *= k;
      if (count > kMaxCurvePermutations)
        throw std::length_error("too many dimension-compatible label permutations on one curve");
    }
  std::vector<Permutation> out;
  Permutation cur = identity_permutation(n);
  std::function<void(std::size_t)> rec = [&](std::size_t bi) {
    if (bi == blocks.size()) {
      out.push_back(cur);
      return;
    }
    std::vector<int> images = blocks[bi];
    do {
      for (std::size_t i = 0; i < images.size(); ++i) cur[blocks[bi][i]] = images[i];
      rec(bi + 1);
    } while (std::next_permutation(images.begin(), images.end()));
    for (int l : blocks[bi]) cur[l] = l;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

// Components named by their smallest member, with phases relative to it.
void name_components(PhaseUnionFind& uf, int n, std::vector<int>& cls, std::vector<cplx>& rel) {
  std::map<int, std::pair<int, cplx>> first;
  cls.assign(n, -1);
  rel.assign(n, 1.0);
  for (int x = 0; x < n; ++x) {
    auto [root, pot] = uf.find(x);
    auto it = first.find(root);
    if (it == first.end()) it = first.emplace(root, std::make_pair(x, pot)).first;
    cls[x] = it->second.first;
    cplx r = pot / it->second.second;
    rel[x] = r / std::abs(r);
  }
}

bool refines(const EquivalenceClasses& classes, const std::vector<int>& phase_class) {
  std::vector<int> first(classes.count, -1);
  for (std::size_t l = 0; l < phase_class.size(); ++l) {
    int& f = first[classes.class_of[l]];
    if (f < 0)
      f = static_cast<int>(l);
    else if (phase_class[l] != phase_class[f])
      return false;
  }
  return true;
}

bool same_family(const GateFamily& a, const GateFamily& b, double tol) {
  if (a.perm != b.perm || a.phase_class != b.phase_class) return false;
  for (std::size_t l = 0; l < a.relative_phases.size(); ++l)
    if (std::abs(a.relative_phases[l] - b.relative_phases[l]) > tol) return false;
  return true;
}

// Finite families are equivalent when their ratio is constant on every similarity class.
bool similar(const ClassifiedGate& a, const ClassifiedGate& b, const EquivalenceClasses& classes, double tol) {
  if (a.family.perm != b.family.perm) return false;
  if (!a.finite || !b.finite) return a.finite == b.finite && same_family(a.family, b.family, tol);
  std::vector<int> first(classes.count, -1);
  const auto& ra = a.family.relative_phases;
  const auto& rb = b.family.relative_phases;
  for (std::size_t l = 0; l < ra.size(); ++l) {
    int& f = first[classes.class_of[l]];
    if (f < 0) {
      f = static_cast<int>(l);
      continue;
    }
    if (std::abs(rb[l] / ra[l] - rb[f] / ra[f]) > tol) return false;
  }
  return true;
}

std::vector<ClassifiedGate> quotient(std::vector<ClassifiedGate> candidates, const EquivalenceClasses& classes,
                                     double tol) {
  std::vector<ClassifiedGate> out;
  for (auto& c : candidates) {
    c.finite = refines(classes, c.family.phase_class);
    const bool seen = std::any_of(out.begin(), out.end(), [&](const ClassifiedGate& o) {
      return similar(o, c, classes, tol);
    });
    if (!seen) out.push_back(std::move(c));
  }
  return out;
}

// Restricts every candidate to gates that stay monomial under conjugation by v.
std::vector<ClassifiedGate> constrain(const std::vector<ClassifiedGate>& candidates, const Matrix& v, double tol) {
  std::map<Permutation, std::vector<GateFamily>> by_perm;
  std::vector<ClassifiedGate> out;
  for (const auto& c : candidates) {
    auto it = by_perm.find(c.family.perm);
    if (it == by_perm.end()) {
      std::vector<GateFamily> fams;
      for (const auto& s : solve_intertwiner(v, PermutationSet{{c.family.perm}}, std::nullopt, tol))
        fams.push_back(to_gate_family(s));
      it = by_perm.emplace(c.family.perm, std::move(fams)).first;
    }
    for (const auto& f : it->second)
      if (auto h = conjoin(c.family, f)) {
        ClassifiedGate g{std::move(*h), c.perm_per_curve, true};
        const bool dup = std::any_of(out.begin(), out.end(), [&](const ClassifiedGate& o) {
          return same_family(o.family, g.family, kCycleTol);
        });
        if (!dup) out.push_back(std::move(g));
      }
  }
  return out;
}

std::vector<std::string> word_texts(const std::vector<McgWord>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.text());
  return out;
}

// t^a s t^b: conjugation by it is monomial exactly when conjugation by S is.
bool is_fourier_word(const McgWord& w) {
  int s_count = 0;
  for (const auto& l : w.letters) {
    if (l.kind == McgLetter::Kind::s) ++s_count;
    if (l.kind == McgLetter::Kind::braid) return false;
  }
  return s_count == 1;
}

int count_non_identity(const std::vector<ClassifiedGate>& gates) {
  return static_cast<int>(std::count_if(gates.begin(), gates.end(), [](const ClassifiedGate& g) {
    return std::any_of(g.perm_per_curve.begin(), g.perm_per_curve.end(),
                       [](const Permutation& p) { return !is_identity(p); });
  }));
}

}  // namespace

bool ClassificationReport::finite() const {
  return std::all_of(classes.begin(), classes.end(), [](const ClassifiedGate& c) { return c.finite; });
}

CurvePermutationFamily allowed_curve_permutations(const AnyonModel& model, const SurfaceSpec& surface,
                                                  const DapDecomposition& dap) {
  CurvePermutationFamily out;
  const int n = model.size();
  for (int j = 0; j < dap.curve_count(); ++j) {
    std::vector<int> dims;
    if (surface.is_torus())
      dims.assign(n, 1);
    else
      dims = cut_dimensions(model, surface, dap, j);
    std::map<int, std::vector<int>> by_dim;
    std::vector<int> occurring;
    for (int a = 0; a < n; ++a)
      if (dims[a] > 0) {
        occurring.push_back(a);
        by_dim[dims[a]].push_back(a);
      }
    std::vector<std::vector<int>> blocks;
    for (auto& [d, labels] : by_dim) blocks.push_back(labels);
    out.occurring.push_back(occurring);
    out.per_curve.push_back(blockwise_permutations(n, blocks));
  }
  return out;
}

IsoPhaseSet iso_phase_set(const AnyonModel& model, const std::array<int, 4>& boundary,
                          const std::array<int, 4>& targets, const Permutation& perm, double tol) {
  const FBlock src = f_block(model, boundary[0], boundary[1], boundary[2], boundary[3]);
  const FBlock tgt = f_block(model, targets[0], targets[1], targets[2], targets[3]);
  if (src.rows.empty() || src.rows.size() != src.cols.size() || tgt.rows.size() != tgt.cols.size() ||
      src.rows.size() != tgt.rows.size())
    throw std::invalid_argument("iso_phase_set: channel spaces differ in size, no isomorphism is possible");
  if (!is_permutation(perm, model.size())) throw std::invalid_argument("iso_phase_set: not a label permutation");

  IsoPhaseSet out;
  out.boundary = boundary;
  out.targets = targets;
  out.perm = perm;
  out.labels = src.rows;
  out.target_labels = tgt.rows;

  const int q = static_cast<int>(src.rows.size());
  Permutation positions(q);
  for (int l = 0; l < q; ++l) {
    const auto it = std::find(tgt.rows.begin(), tgt.rows.end(), perm[src.rows[l]]);
    if (it == tgt.rows.end()) return out;
    positions[l] = static_cast<int>(it - tgt.rows.begin());
  }
  const Matrix source = src.matrix.transpose();
  const Matrix target = tgt.matrix.transpose();
  for (const auto& s : solve_intertwiner(target, source, PermutationSet{{positions}}, std::nullopt, tol)) {
    PhaseFunction f;
    f.component = s.phase_class;
    f.perm_out = s.perm_out;
    for (const auto& r : s.relative_phases) f.angles.push_back(wrap_angle(std::arg(r)));
    const bool dup = std::any_of(out.functions.begin(), out.functions.end(), [&](const PhaseFunction& g) {
      if (g.component != f.component) return false;
      for (int l = 0; l < q; ++l)
        if (std::abs(unit_phase(g.angles[l]) - unit_phase(f.angles[l])) > kCycleTol) return false;
      return true;
    });
    if (!dup) out.functions.push_back(std::move(f));
  }
  return out;
}

ClassificationReport classify_punctured_sphere(const AnyonModel& model, int M, int z,
                                               const std::vector<McgWord>& mcg_words, double tol) {
  if (M < 4) throw std::invalid_argument("sphere classification needs at least four punctures");
  if (z < 0 || z >= model.size()) throw std::invalid_argument("puncture label out of range");
  if (model.dual[z] != z) throw ModelError("unsupported decomposition: the puncture label must be self-dual");
  const SurfaceSpec surface = SurfaceSpec::sphere(z, M);
  const DapDecomposition dap = standard_dap(surface);
  const BasisIndex basis = enumerate_labelings(model, surface, dap);
  const int n = basis.size();
  if (n == 0) throw DomainError("dimension of " + surface.describe(model) + " is 0");
  for (const auto& w : mcg_words) check_word(surface, w);

  ClassificationReport report;
  report.model_id = model.id;
  report.surface = surface.describe(model);
  report.dimension = n;
  for (const auto& l : model.labels) report.label_names.push_back(l.name);
  for (const auto& x : basis.labelings) report.basis_names.push_back(labeling_name(model, x));
  report.words = word_texts(mcg_words);

  const CurvePermutationFamily allowed = allowed_curve_permutations(model, surface, dap);
  const int curves = dap.curve_count();

  // Each curve's labelings grouped by neighbor labels and by the rest of the labeling.
  struct Context {
    int curve;
    std::array<int, 4> boundary;
    std::vector<std::vector<std::pair<int, int>>> groups;  // (basis index, slot label)
  };
  std::vector<Context> contexts;
  for (int j = 0; j < curves; ++j) {
    std::map<std::array<int, 4>, std::map<Labeling, std::vector<std::pair<int, int>>>> grouped;
    for (int i = 0; i < n; ++i) {
      const Labeling& x = basis.labelings[i];
      std::array<int, 4> b{};
      for (int s = 0; s < 4; ++s) b[s] = neighbor_label(model, surface, x, dap.neighbors[j][s]);
      Labeling rest = x;
      rest[j] = -1;
      grouped[b][rest].emplace_back(i, x[j]);
    }
    for (auto& [b, by_rest] : grouped) {
      Context c{j, b, {}};
      for (auto& [rest, members] : by_rest) c.groups.push_back(members);
      contexts.push_back(std::move(c));
    }
  }

  std::vector<ClassifiedGate> candidates;
  std::vector<std::size_t> pick(curves, 0);
  while (true) {
    std::vector<Permutation> combo;
    for (int j = 0; j < curves; ++j) combo.push_back(allowed.per_curve[j][pick[j]]);

    Permutation global(n, -1);
    bool inside = true;
    for (int i = 0; i < n && inside; ++i) {
      Labeling y = basis.labelings[i];
      for (int j = 0; j < curves; ++j) y[j] = combo[j][y[j]];
      global[i] = basis.index_of(y);
      inside = global[i] >= 0;
    }

    std::vector<IsoPhaseSet> isos;
    for (std::size_t k = 0; k < contexts.size() && inside; ++k) {
      const Context& c = contexts[k];
      std::array<int, 4> targets = c.boundary;
      for (int s = 0; s < 4; ++s)
        if (dap.neighbors[c.curve][s].kind == NeighborSlot::Kind::curve)
          targets[s] = combo[dap.neighbors[c.curve][s].index][c.boundary[s]];
      isos.push_back(iso_phase_set(model, c.boundary, targets, combo[c.curve], tol));
      inside = !isos.back().functions.empty();
    }

    if (inside) {
      // Phases of labelings sharing a context differ by f(q) - f(q0) when q, q0 share an f-component.
      std::function<void(std::size_t, const PhaseUnionFind&)> choose = [&](std::size_t k, const PhaseUnionFind& uf) {
        if (k == contexts.size()) {
          PhaseUnionFind leaf = uf;
          GateFamily fam;
          fam.perm = global;
          name_components(leaf, n, fam.phase_class, fam.relative_phases);
          candidates.push_back({std::move(fam), combo, true});
          return;
        }
        const IsoPhaseSet& iso = isos[k];
        std::map<int, int> pos;
        for (std::size_t l = 0; l < iso.labels.size(); ++l) pos[iso.labels[l]] = static_cast<int>(l);
        for (const auto& f : iso.functions) {
          PhaseUnionFind next = uf;
          bool ok = true;
          for (const auto& group : contexts[k].groups) {
            const auto [i0, q0] = group.front();
            for (std::size_t g = 1; g < group.size() && ok; ++g) {
              const auto [i, q] = group[g];
              if (f.component[pos.at(q)] != f.component[pos.at(q0)]) continue;
              ok = next.relate(i, i0, unit_phase(f.angles[pos.at(q)] - f.angles[pos.at(q0)]), kCycleTol);
            }
            if (!ok) break;
          }
          if (ok) choose(k + 1, next);
        }
      };
      choose(0, PhaseUnionFind(n));
    }

    int j = 0;
    while (j < curves && ++pick[j] == allowed.per_curve[j].size()) pick[j++] = 0;
    if (j == curves) break;
  }

  report.candidate_families = static_cast<int>(candidates.size());
  const int permuted_before = count_non_identity(candidates);

  std::vector<Matrix> mats;
  for (const auto& w : mcg_words) {
    mats.push_back(evaluate_word(model, surface, w).matrix);
    candidates = constrain(candidates, mats.back(), tol);
  }
  const EquivalenceClasses classes = equivalence_classes_from(mats, n);
  report.similarity_classes = classes.count;
  report.classes = quotient(std::move(candidates), classes, kCycleTol);

  if (permuted_before > 0 && count_non_identity(report.classes) == 0)
    report.notes.push_back(
        "non-identity curve permutations pass the fusion, gluing and F-move constraints and are excluded only by "
        "the supplied words; a finite word list approximates the full mapping class group");

  const bool ising_sigma = model.id == "ising" && model.label_name(z) == "σ";
  if (mcg_words.empty()) {
    report.verdict = "upper_bound_only";
    report.notes.push_back("no mapping class words supplied; only fusion, gluing and F-move constraints applied");
  } else if (!report.finite()) {
    report.verdict = "upper_bound_only";
    report.notes.push_back("free phases are not pinned down by the supplied words");
  } else if (report.classes.size() == 1 && check_sim_trivial(report.classes[0].family.representative(), classes, tol)) {
    report.verdict = "trivial";
  } else if (ising_sigma) {
    std::set<std::string> strings;
    bool all_pauli = true;
    for (const auto& c : report.classes) {
      const auto s = match_pauli_string(ising_qubit_matrix(model, basis, c.family.representative()), kCycleTol);
      if (!s) all_pauli = false;
      else strings.insert(*s);
    }
    const std::size_t expected = std::size_t{1} << (2 * (M / 2 - 1));
    report.verdict = all_pauli && strings.size() == expected && report.classes.size() == expected ? "pauli_group"
                                                                                                 : "finite_group";
  } else {
    report.verdict = "finite_group";
  }
  report.upper_bound = report.verdict != "trivial" && report.verdict != "pauli_group";
  return report;
}

ClassificationReport classify_torus(const AnyonModel& model, const std::vector<McgWord>& mcg_words, double tol) {
  const SurfaceSpec surface = SurfaceSpec::torus();
  for (const auto& w : mcg_words) check_word(surface, w);
  const int n = model.size();

  ClassificationReport report;
  report.model_id = model.id;
  report.surface = surface.describe(model);
  report.dimension = n;
  for (const auto& l : model.labels) {
    report.label_names.push_back(l.name);
    report.basis_names.push_back(l.name);
  }
  report.words = word_texts(mcg_words);

  PermutationSet perms = std::nullopt;
  if (n > kWildcardLimit) {
    if (!model.is_abelian())
      throw std::length_error("torus dimension " + std::to_string(n) + " exceeds the permutation search limit");
    if (std::none_of(mcg_words.begin(), mcg_words.end(), is_fourier_word))
      throw std::length_error("torus dimension " + std::to_string(n) +
                              " needs a word of the form t..s..t to restrict the permutation search");
    perms = affine_label_permutations(model);
    report.notes.push_back("permutations restricted to affine maps of the label group, which contain every "
                           "permutation allowed by an s-type word");
  }

  std::vector<ClassifiedGate> candidates;
  std::vector<Matrix> mats;
  for (const auto& w : mcg_words) mats.push_back(evaluate_word(model, surface, w).matrix);
  const Matrix first = mats.empty() ? Matrix(Matrix::Identity(n, n)) : mats.front();
  for (const auto& s : solve_intertwiner(first, perms, std::nullopt, tol)) {
    const GateFamily f = to_gate_family(s);
    candidates.push_back({f, {f.perm}, true});
  }
  for (std::size_t i = 1; i < mats.size(); ++i) candidates = constrain(candidates, mats[i], tol);
  report.candidate_families = static_cast<int>(candidates.size());

  const EquivalenceClasses classes = equivalence_classes_from(mats, n);
  report.similarity_classes = classes.count;
  report.classes = quotient(std::move(candidates), classes, kCycleTol);

  if (mcg_words.empty()) {
    report.verdict = "upper_bound_only";
    report.notes.push_back("no mapping class words supplied; every monomial gate is listed");
  } else if (!report.finite()) {
    report.verdict = "upper_bound_only";
    report.notes.push_back("free phases are not pinned down by the supplied words");
  } else if (report.classes.size() == 1 && check_sim_trivial(report.classes[0].family.representative(), classes, tol)) {
    report.verdict = "trivial";
  } else if (model.is_abelian() && std::all_of(report.classes.begin(), report.classes.end(), [&](const ClassifiedGate& c) {
               return clifford_star_membership(model, c.family.representative(), kCycleTol);
             })) {
    report.verdict = "clifford_star_subgroup";
  } else {
    report.verdict = "finite_group";
  }
  report.upper_bound = report.verdict != "trivial";
  return report;
}

CurveFMove curve_fmove(const AnyonModel& model, const SurfaceSpec& surface, int curve) {
  const DapDecomposition dap = standard_dap(surface);
  if (curve < 0 || curve >= dap.curve_count()) throw std::invalid_argument("curve index out of range");
  const BasisIndex basis = enumerate_labelings(model, surface, dap);
  struct Entry {
    Labeling crossed;
    int column;
    cplx value;
  };
  std::vector<Entry> entries;
  std::set<Labeling> crossed;
  for (int i = 0; i < basis.size(); ++i) {
    const Labeling& x = basis.labelings[i];
    std::array<int, 4> b{};
    for (int s = 0; s < 4; ++s) b[s] = neighbor_label(model, surface, x, dap.neighbors[curve][s]);
    const FBlock fb = f_block(model, b[0], b[1], b[2], b[3]);
    const auto from = std::find(fb.rows.begin(), fb.rows.end(), x[curve]) - fb.rows.begin();
    for (std::size_t to = 0; to < fb.cols.size(); ++to) {
      Labeling y = x;
      y[curve] = fb.cols[to];
      crossed.insert(y);
      entries.push_back({y, i, fb.matrix(from, to)});
    }
  }
  CurveFMove out;
  out.crossed.assign(crossed.begin(), crossed.end());
  out.matrix = Matrix::Zero(static_cast<Eigen::Index>(out.crossed.size()), basis.size());
  for (const auto& e : entries) {
    const auto row = std::lower_bound(out.crossed.begin(), out.crossed.end(), e.crossed) - out.crossed.begin();
    out.matrix(row, e.column) = e.value;
  }
  return out;
}

std::optional<std::string> match_pauli_string(const Matrix& g, double tol) {
  const auto dim = g.rows();
  int qubits = 0;
  while ((Eigen::Index{1} << qubits) < dim) ++qubits;
  if ((Eigen::Index{1} << qubits) != dim || g.cols() != dim) return std::nullopt;
  Matrix single[4];
  single[0] = Matrix::Identity(2, 2);
  single[1] = Matrix::Zero(2, 2);
  single[1](0, 1) = single[1](1, 0) = 1.0;
  single[2] = Matrix::Zero(2, 2);
  single[2](0, 1) = cplx(0, -1);
  single[2](1, 0) = cplx(0, 1);
  single[3] = Matrix::Identity(2, 2);
  single[3](1, 1) = -1.0;
  const char letters[] = "IXYZ";
  const int total = 1 << (2 * qubits);
  for (int code = 0; code < total; ++code) {
    Matrix p = Matrix::Identity(1, 1);
    std::string name;
    for (int q = 0; q < qubits; ++q) {
      const int k = (code >> (2 * (qubits - 1 - q))) & 3;
      name += letters[k];
      Matrix next(p.rows() * 2, p.cols() * 2);
      for (Eigen::Index r = 0; r < p.rows(); ++r)
        for (Eigen::Index c = 0; c < p.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = p(r, c) * single[k];
      p = next;
    }
    const cplx overlap = (p.adjoint() * g).trace() / static_cast<double>(dim);
    if (std::abs(std::abs(overlap) - 1.0) > tol) continue;
    if (max_abs(g - overlap * p) <= tol) return name;
  }
  return std::nullopt;
}

Matrix ising_qubit_matrix(const AnyonModel& model, const BasisIndex& basis, const MonomialMatrix& gate) {
  const int n = basis.size();
  std::vector<int> qubit_index(n);
  for (int i = 0; i < n; ++i) {
    const std::string bits = ising_qubit_isomorphism(model, basis.labelings[i]);
    int v = 0;
    for (char b : bits) v = 2 * v + (b == '1');
    qubit_index[i] = v;
  }
  const Matrix dense = gate.dense();
  Matrix out = Matrix::Zero(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out(qubit_index[r], qubit_index[c]) = dense(r, c);
  return out;
}

std::optional<int> gate_order(const MonomialMatrix& gate, const EquivalenceClasses& classes, int max_power,
                              double tol) {
  MonomialMatrix power = gate;
  for (int k = 1; k <= max_power; ++k) {
    if (check_sim_trivial(power, classes, tol)) return k;
    power = gate * power;
  }
  return std::nullopt;
}

std::vector<McgWord> doubled_words(const std::vector<McgWord>& words) {
  std::vector<McgWord> out = words;
  for (std::size_t i = 0; i < words.size(); ++i) out.push_back(words[i] * words[(i + 1) % words.size()]);
  return out;
}

}  // namespace anyon
