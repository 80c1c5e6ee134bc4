#include <doctest.h>

#include <cmath>
#include <string>

#include "anyon/model.hpp"
#include "anyon/model_io.hpp"

using namespace anyon;

namespace {

const double phi = (1 + std::sqrt(5.0)) / 2;

std::vector<AnyonModel> builtins() {
  return {fibonacci(), ising(), zn_toric(2), zn_toric(3), zn_toric(4), dg_abelian({2, 2})};
}

}  // namespace

TEST_CASE("fibonacci S and T match the quoted matrices") {
  const AnyonModel m = fibonacci();
  const double norm = 1 / std::sqrt(phi + 2);
  CHECK(std::abs(m.smatrix(0, 0) - norm) < 1e-15);
  CHECK(std::abs(m.smatrix(0, 1) - norm * phi) < 1e-15);
  CHECK(std::abs(m.smatrix(1, 0) - norm * phi) < 1e-15);
  CHECK(std::abs(m.smatrix(1, 1) + norm) < 1e-15);
  CHECK(std::abs(m.twists[0] - 1.0) < 1e-15);
  CHECK(std::abs(m.twists[1] - unit_phase(4 * kPi / 5)) < 1e-15);
}

TEST_CASE("ising duals, fusion and F block") {
  const AnyonModel m = ising();
  const int sigma = *m.find_label("σ"), psi = *m.find_label("ψ");
  CHECK(m.dual[sigma] == sigma);
  CHECK(m.dual[psi] == psi);
  CHECK(m.N(sigma, sigma, 0) == 1);
  CHECK(m.N(sigma, sigma, psi) == 1);
  CHECK(m.N(sigma, sigma, sigma) == 0);
  CHECK(m.N(psi, psi, 0) == 1);
  CHECK(m.N(psi, sigma, sigma) == 1);

  const FBlock fb = f_block(m, sigma, sigma, sigma, sigma);
  REQUIRE(fb.rows == std::vector<int>{0, psi});
  const double h = 1 / std::sqrt(2.0);
  Matrix expected(2, 2);
  expected << h, h, h, -h;
  CHECK(max_abs(fb.matrix - expected) < 1e-15);
}

TEST_CASE("zn_toric(2) labels and group fusion") {
  const AnyonModel m = zn_toric(2);
  REQUIRE(m.size() == 4);
  CHECK(m.label_name(0) == "1");
  CHECK(m.label_name(1) == "e");
  CHECK(m.label_name(2) == "m");
  CHECK(m.label_name(3) == "ε");
  CHECK(m.N(1, 2, 3) == 1);
  CHECK(m.N(1, 1, 0) == 1);
  CHECK(m.N(3, 3, 0) == 1);
  CHECK(m.is_abelian());
  CHECK_FALSE(ising().is_abelian());
}

TEST_CASE("label lookup accepts ascii spellings and indices") {
  const AnyonModel f = fibonacci();
  CHECK(f.find_label("tau") == 1);
  CHECK(f.find_label("τ") == 1);
  CHECK(f.find_label("1") == 0);
  const AnyonModel i = ising();
  CHECK(i.find_label("sigma") == 1);
  CHECK(i.find_label("psi") == 2);
  CHECK_FALSE(i.find_label("tau").has_value());
  CHECK(zn_toric(2).find_label("eps") == 3);
}

TEST_CASE("every built-in passes validation") {
  for (const auto& m : builtins()) {
    CAPTURE(m.id);
    const auto report = validate(m, kDefaultTol);
    CHECK(report.accepted());
    for (const auto& c : report.checks) {
      CAPTURE(c.name);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("ising validates at 1e-12") { CHECK(validate(ising(), 1e-12).accepted()); }

TEST_CASE("fusion tensor invariants") {
  for (const auto& m : builtins()) {
    CAPTURE(m.id);
    const int n = m.size();
    for (int a = 0; a < n; ++a) {
      CHECK(m.dual[m.dual[a]] == a);
      CHECK(m.N(a, m.dual[a], 0) == 1);
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          CHECK(m.N(a, b, c) == m.N(b, a, c));
          if (a == 0) CHECK(m.N(a, b, c) == (b == c ? 1 : 0));
        }
    }
  }
}

TEST_CASE("verlinde coefficients round to the fusion table") {
  for (const auto& m : builtins()) {
    CAPTURE(m.id);
    double worst = 0;
    for (int a = 0; a < m.size(); ++a)
      for (int b = 0; b < m.size(); ++b)
        for (int c = 0; c < m.size(); ++c)
          worst = std::max(worst, std::abs(verlinde_coefficient(m, a, b, c) - double(m.N(a, b, c))));
    CHECK(worst < 1e-9);
  }
  CHECK(std::abs(verlinde_coefficient(fibonacci(), 1, 1, 1) - 1.0) < 1e-12);
}

TEST_CASE("quantum dimensions") {
  const auto fd = quantum_dimensions(fibonacci());
  CHECK(fd[0] == doctest::Approx(1.0));
  CHECK(fd[1] == doctest::Approx(phi).epsilon(1e-14));
  const auto id = quantum_dimensions(ising());
  CHECK(id[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(id[2] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(total_dimension(ising()) == doctest::Approx(2.0).epsilon(1e-14));
  for (double d : quantum_dimensions(zn_toric(3))) CHECK(d == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("perturbed S fails unitarity") {
  AnyonModel m = fibonacci();
  m.smatrix(0, 1) += 1e-3;
  m.smatrix(1, 0) += 1e-3;
  const auto report = validate(m, kDefaultTol);
  CHECK_FALSE(report.accepted());
  const ValidationCheck* unitary = report.find("smatrix_unitary");
  REQUIRE(unitary != nullptr);
  CHECK_FALSE(unitary->passed);
  CHECK(unitary->residual > 1e-4);
}

TEST_CASE("F blocks of the built-ins are unitary") {
  for (const auto& m : builtins()) {
    CAPTURE(m.id);
    const int n = m.size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            const FBlock fb = f_block(m, i, j, k, l);
            if (fb.rows.empty()) continue;
            REQUIRE(fb.rows.size() == fb.cols.size());
            CHECK(unitarity_residual(fb.matrix) < 1e-12);
          }
  }
}

TEST_CASE("serialization round trip") {
  for (const auto& m : builtins()) {
    CAPTURE(m.id);
    const AnyonModel back = parse_model(serialize_model(m));
    CHECK(models_equal(m, back));
  }
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(parse_model("{\"labels\": [\"1\"], \"dual\": [0], \"fusion\": [[0,0,0]]}"), SchemaError);
  CHECK_THROWS_AS(parse_model("not json"), SchemaError);
  CHECK_THROWS_AS(parse_model("{\"labels\": [\"1\"], \"dual\": [3], \"fusion\": [], \"smatrix\": [1]}"),
                  SchemaError);
  // a repeated fusion triple would mean N = 2
  CHECK_THROWS_AS(
      parse_model("{\"labels\": [\"1\"], \"dual\": [0], \"fusion\": [[0,0,0],[0,0,0]], \"smatrix\": [1]}"),
      SchemaError);
  CHECK_THROWS_AS(load_model("/nonexistent/model.json"), std::runtime_error);
}

TEST_CASE("load_builtin specs") {
  CHECK(load_builtin("zn_toric:3").size() == 9);
  CHECK(load_builtin("dg_abelian:2,3").size() == 36);
  CHECK(load_builtin("dg_abelian:2,3").id == "dg_abelian:2,3");
  CHECK_THROWS(load_builtin("zn_toric:1"));
  CHECK_THROWS(load_builtin("zn_toric:x"));
  CHECK_THROWS(load_builtin("toric"));
}
