// Prints one PASS/FAIL line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "anyon/abelian.hpp"
#include "anyon/classifier.hpp"
#include "anyon/verlinde.hpp"
#include "oracle.hpp"

using namespace anyon;

namespace {

// Collects failure reasons for one criterion.
struct Checker {
  std::ostringstream why;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    else if (!cond) why << "; " << what;
    ok = ok && cond;
  }
};

std::vector<AnyonModel> builtins() {
  return {fibonacci(), ising(), zn_toric(2), zn_toric(3), zn_toric(4), dg_abelian({2, 2}), dg_abelian({3})};
}

long fib(int k) {
  long a = 1, b = 1;
  for (int i = 2; i < k; ++i) {
    const long c = a + b;
    a = b;
    b = c;
  }
  return k <= 2 ? 1 : b;
}

bool has_family(const DeltaSet& d, const Matrix& expected) {
  for (const auto& f : d.families)
    if (f.free_phases() == 1 && projective_distance(f.representative().dense(), expected) < 1e-9) return true;
  return false;
}

std::set<std::string> pauli_strings(const AnyonModel& m, int M, const ClassificationReport& r, Checker& c) {
  const SurfaceSpec s = SurfaceSpec::sphere(1, M);
  const BasisIndex basis = enumerate_labelings(m, s, standard_dap(s));
  std::set<std::string> out;
  for (const auto& g : r.classes) {
    const auto p = match_pauli_string(ising_qubit_matrix(m, basis, g.family.representative()));
    c.expect(p.has_value(), "class is not a Pauli string");
    if (p) out.insert(*p);
  }
  return out;
}

void criterion1(Checker& c) {
  for (const auto& m : {fibonacci(), ising(), zn_toric(2), zn_toric(3), zn_toric(4)}) {
    double worst = 0;
    for (int a = 0; a < m.size(); ++a)
      for (int b = 0; b < m.size(); ++b)
        for (int x = 0; x < m.size(); ++x)
          worst = std::max(worst, std::abs(verlinde_coefficient(m, a, b, x) - double(m.N(a, b, x))));
    c.expect(worst < 1e-9, m.id + " Verlinde residual " + std::to_string(worst));
  }
}

void criterion2(Checker& c) {
  for (const auto& m : builtins()) {
    const int n = m.size();
    const IdempotentSet p = idempotents(m);
    Matrix sum = Matrix::Zero(n, n);
    double worst = 0;
    for (int a = 0; a < n; ++a) {
      sum += p.p[a];
      for (int b = 0; b < n; ++b)
        worst = std::max(worst, max_abs(p.p[a] * p.p[b] - (a == b ? p.p[a] : Matrix(Matrix::Zero(n, n)))));
    }
    worst = std::max(worst, max_abs(sum - Matrix::Identity(n, n)));
    c.expect(worst < 1e-9, m.id + " idempotent residual " + std::to_string(worst));
    if (n <= 4) {
      const auto brute = oracle::eigen_primitive_idempotents(m);
      c.expect(static_cast<int>(brute.size()) == n, m.id + " brute-force primitive count");
      for (const auto& q : brute) {
        int matches = 0;
        for (const auto& mine : p.p) matches += max_abs(mine - q) < 1e-9;
        c.expect(matches == 1, m.id + " brute-force idempotent not unique");
      }
    }
  }
}

void criterion3(Checker& c) {
  const AnyonModel f = fibonacci();
  const SurfaceSpec t = SurfaceSpec::torus();
  const DeltaSet ds = delta_set(f, t, parse_word("s"));
  const DeltaSet dst = delta_set(f, t, parse_word("st"));
  Matrix swap(2, 2), twisted(2, 2);
  swap << 0, 1, -1, 0;
  twisted << 0, unit_phase(3 * kPi / 5), 1, 0;
  c.expect(ds.families.size() == 2 && has_family(ds, Matrix::Identity(2, 2)) && has_family(ds, swap), "Delta_s");
  c.expect(dst.families.size() == 2 && has_family(dst, Matrix::Identity(2, 2)) && has_family(dst, twisted),
           "Delta_st");
  const DeltaSet both = intersect_delta({ds, dst});
  c.expect(both.families.size() == 1 && has_family(both, Matrix::Identity(2, 2)), "intersection is not lambda I");
  c.expect(classify_torus(f, parse_word_list("s,st")).verdict == "trivial", "torus verdict");
}

void criterion4(Checker& c) {
  const AnyonModel m = ising();
  for (const Permutation& p : {Permutation{0, 1, 2}, Permutation{2, 1, 0}}) {
    std::set<std::pair<double, double>> got;
    for (const auto& fn : iso_phase_set(m, {1, 1, 1, 1}, {1, 1, 1, 1}, p).functions)
      got.insert({fn.angles.at(0), fn.angles.at(1)});
    c.expect(got == std::set<std::pair<double, double>>{{0.0, 0.0}, {0.0, kPi}}, "iso_phase_set");
  }
  const auto r = classify_punctured_sphere(m, 4, 1, default_generators(SurfaceSpec::sphere(1, 4)));
  c.expect(r.group_order() == 4 && r.verdict == "pauli_group", "class count " + std::to_string(r.group_order()));
  c.expect(pauli_strings(m, 4, r, c) == std::set<std::string>{"I", "X", "Y", "Z"}, "not the single-qubit Paulis");
}

void criterion5(Checker& c) {
  const AnyonModel m = ising();
  for (int M : {6, 8}) {
    const auto r = classify_punctured_sphere(m, M, 1, default_generators(SurfaceSpec::sphere(1, M)));
    const int expected = 1 << (2 * (M / 2 - 1));
    c.expect(r.group_order() == expected, "M=" + std::to_string(M) + " classes " + std::to_string(r.group_order()));
    std::set<std::string> product = {""};
    for (int q = 0; q < M / 2 - 1; ++q) {
      std::set<std::string> next;
      for (const auto& prefix : product)
        for (const char* letter : {"I", "X", "Y", "Z"}) next.insert(prefix + letter);
      product = next;
    }
    c.expect(pauli_strings(m, M, r, c) == product, "M=" + std::to_string(M) + " does not tensor-factorize");
  }
}

void criterion6(Checker& c) {
  const AnyonModel m = fibonacci();
  for (int M = 5; M <= 8; ++M) {
    const auto start = std::chrono::steady_clock::now();
    const std::string tag = "M=" + std::to_string(M);
    const SurfaceSpec s = SurfaceSpec::sphere(1, M);
    const DapDecomposition dap = standard_dap(s);
    const auto fam = allowed_curve_permutations(m, s, dap);
    for (int j = 0; j < dap.curve_count(); ++j) {
      c.expect(fam.per_curve[j].size() == 1 && fam.per_curve[j][0] == identity_permutation(2),
               tag + " non-identity curve permutation");
      const auto cuts = cut_dimensions(m, s, dap, j);
      c.expect(cuts[0] == fib(j + 1) * fib(M - j - 3) && cuts[1] == fib(j + 2) * fib(M - j - 2) && cuts[0] < cuts[1],
               tag + " cut dimension inequality");
    }
    const auto words = default_generators(s);
    c.expect(equivalence_classes(m, s, words).count == 1, tag + " equivalence classes");
    c.expect(classify_punctured_sphere(m, M, 1, words).verdict == "trivial", tag + " verdict");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < 60, tag + " took " + std::to_string(secs) + " s");
  }
}

void criterion7(Checker& c) {
  for (int M = 4; M <= 12; ++M) {
    const SurfaceSpec s = SurfaceSpec::sphere(1, M);
    const DapDecomposition dap = standard_dap(s);
    c.expect(enumerate_labelings(fibonacci(), s, dap).size() == fib(M - 1), "Fibonacci M=" + std::to_string(M));
    const int expected = M % 2 == 0 ? 1 << (M / 2 - 1) : 0;
    c.expect(enumerate_labelings(ising(), s, dap).size() == expected, "Ising M=" + std::to_string(M));
  }
}

void criterion8(Checker& c) {
  for (const auto& m : {fibonacci(), ising()})
    for (int M = 4; M <= 8; ++M) {
      if (m.id == "ising" && M % 2) continue;
      std::vector<Matrix> gens;
      for (int k = 1; k < M; ++k) gens.push_back(braid_generator(m, M, 1, k).matrix);
      double yb = 0, far = 0;
      for (int i = 0; i + 1 < M - 1; ++i)
        yb = std::max(yb, projective_distance(gens[i] * gens[i + 1] * gens[i], gens[i + 1] * gens[i] * gens[i + 1]));
      for (int i = 0; i < M - 1; ++i)
        for (int j = i + 2; j < M - 1; ++j) far = std::max(far, max_abs(gens[i] * gens[j] - gens[j] * gens[i]));
      const std::string tag = m.id + " M=" + std::to_string(M);
      c.expect(yb < 1e-8, tag + " Yang-Baxter " + std::to_string(yb));
      c.expect(far < 1e-9, tag + " far commutation " + std::to_string(far));
    }
}

void criterion9(Checker& c) {
  for (int N : {2, 3, 4}) {
    const AnyonModel m = zn_toric(N);
    const auto r = classify_torus(m, parse_word_list("s,st"));
    const std::string tag = m.id;
    for (const auto& g : r.classes) {
      const LambdaCheck l = check_lambda_monomial(m, g.family.perm);
      c.expect(l.monomial && l.root_of_unity_phases, tag + " Lambda not monomial with N-th root phases");
      const double res = string_commutation_residual(m, g.family.representative().dense());
      c.expect(res < 1e-9, tag + " string commutation residual " + std::to_string(res));
      if (!c.ok) break;
    }
  }
  for (int N = 2; N <= 5; ++N) {
    const LatticeReport l = lattice_commutation_check(N, 3);
    c.expect(l.passed() && l.tuples_checked == N * N * N * N, "lattice N=" + std::to_string(N));
  }
}

void compare_with_oracle(const Matrix& v, const std::string& tag, Checker& c) {
  const auto solved = solve_intertwiner(v, std::nullopt, std::nullopt);
  const auto brute = oracle::brute_force_intertwiners(v, v);
  c.expect(solved.size() == brute.size(), tag + " family count");
  for (const auto& b : brute) {
    const auto it = std::find_if(solved.begin(), solved.end(), [&](const IntertwinerSolution& s) {
      return s.perm_in == b.perm_in && s.perm_out == b.perm_out;
    });
    c.expect(it != solved.end(), tag + " missing permutation pair");
    if (it == solved.end()) continue;
    for (const auto& p : b.points) {
      c.expect(p.nullity == it->free_phases(), tag + " free phase count");
      for (std::size_t l = 0; l < p.d.size(); ++l)
        c.expect(std::abs(p.d[l] / p.d[it->phase_class[l]] - it->relative_phases[l]) < 1e-6, tag + " phase");
    }
  }
}

void criterion10(Checker& c) {
  const SurfaceSpec torus = SurfaceSpec::torus();
  for (const auto& m : {fibonacci(), ising(), zn_toric(2)})
    for (const auto& w : parse_word_list("s,t,st"))
      compare_with_oracle(evaluate_word(m, torus, w).matrix, m.id + " torus " + w.text(), c);
  for (const auto& [m, M] : {std::pair{fibonacci(), 4}, std::pair{fibonacci(), 5}, std::pair{ising(), 4},
                             std::pair{ising(), 6}}) {
    const SurfaceSpec s = SurfaceSpec::sphere(1, M);
    for (const auto& w : default_generators(s))
      compare_with_oracle(evaluate_word(m, s, w).matrix, m.id + " M=" + std::to_string(M) + " " + w.text(), c);
  }
}

void criterion11(Checker& c) {
  auto stable = [&](const std::string& tag, const std::function<ClassificationReport(const std::vector<McgWord>&)>& run,
                    const std::vector<McgWord>& words) {
    const auto r = run(words);
    const auto d = run(doubled_words(words));
    c.expect(r.finite() && d.finite(), tag + " not finite");
    c.expect(r.group_order() == d.group_order(), tag + " changes under doubling");
  };
  for (const auto& m : {fibonacci(), zn_toric(2), zn_toric(3)})
    stable(m.id + " torus", [&](const auto& w) { return classify_torus(m, w); }, parse_word_list("s,st"));
  for (const auto& [m, M] : {std::pair{ising(), 4}, std::pair{ising(), 6}, std::pair{ising(), 8},
                             std::pair{fibonacci(), 5}, std::pair{fibonacci(), 6}, std::pair{fibonacci(), 7},
                             std::pair{fibonacci(), 8}}) {
    stable(m.id + " M=" + std::to_string(M), [&](const auto& w) { return classify_punctured_sphere(m, M, 1, w); },
           default_generators(SurfaceSpec::sphere(1, M)));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Checker&)>> criteria = {
      {"Verlinde reconstruction", criterion1},
      {"idempotents", criterion2},
      {"Fibonacci torus", criterion3},
      {"Ising four punctures", criterion4},
      {"Ising six and eight punctures", criterion5},
      {"Fibonacci spheres", criterion6},
      {"dimension formulas", criterion7},
      {"braid relations", criterion8},
      {"abelian models", criterion9},
      {"oracle equivalence", criterion10},
      {"empirical finiteness", criterion11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !c.ok;
    std::cout << "criterion " << i + 1 << ": " << (c.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << std::fixed << std::setprecision(2) << secs << " s)" << std::defaultfloat;
    if (!c.ok) std::cout << "  " << c.why.str();
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
