#include "anyon/cli.hpp"

#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "anyon/abelian.hpp"
#include "anyon/classifier.hpp"
#include "anyon/model_io.hpp"

namespace anyon {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string model = "fibonacci";
  std::string surface = "torus";
  std::string words;
  bool words_given = false;
  double tol = kDefaultTol;
  std::string format = "text";
};

using ordered_json = nlohmann::ordered_json;

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const AnyonModel model = load_model(cfg.model);
  const ModelValidationReport report = validate(model, cfg.tol);
  if (cfg.format == "json") {
    ordered_json j;
    j["model"] = model.id;
    j["tol"] = cfg.tol;
    j["accepted"] = report.accepted();
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name},
                        {"mandatory", c.mandatory},
                        {"passed", c.passed},
                        {"residual", c.residual},
                        {"detail", c.detail}});
    j["checks"] = checks;
    out << j.dump(2) << "\n";
  } else {
    out << "model " << model.id << " (tol " << cfg.tol << ")\n";
    for (const auto& c : report.checks) {
      out << "  " << std::left << std::setw(26) << c.name << (c.passed ? "pass" : "FAIL")
          << (c.mandatory ? "" : " (advisory)") << "  residual " << std::scientific << std::setprecision(2)
          << c.residual << std::defaultfloat;
      if (!c.detail.empty()) out << "  " << c.detail;
      out << "\n";
    }
    out << (report.accepted() ? "accepted" : "rejected") << "\n";
  }
  return report.accepted() ? kExitOk : kExitFailed;
}

std::vector<McgWord> config_words(const RunConfig& cfg, const SurfaceSpec& surface) {
  return cfg.words_given ? parse_word_list(cfg.words) : default_generators(surface);
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const AnyonModel model = load_model(cfg.model);
  const SurfaceSpec surface = parse_surface(model, cfg.surface);
  const auto words = config_words(cfg, surface);
  ClassificationReport report;
  if (surface.is_torus()) {
    report = classify_torus(model, words, cfg.tol);
  } else {
    const auto& b = surface.boundary_labels;
    if (std::any_of(b.begin(), b.end(), [&](int x) { return x != b[0]; }))
      throw ModelError("classification needs identical puncture labels");
    report = classify_punctured_sphere(model, surface.punctures, b[0], words, cfg.tol);
  }
  out << (cfg.format == "json" ? render_report_json(report) : render_report_text(report));
  return kExitOk;
}

int cmd_delta(const RunConfig& cfg, const std::string& word_text, std::ostream& out) {
  const AnyonModel model = load_model(cfg.model);
  const SurfaceSpec surface = parse_surface(model, cfg.surface);
  const McgWord word = parse_word(word_text);
  if (word.letters.empty()) {
    out << "empty word: every monomial matrix intertwines with the identity, so Delta is the full monomial group\n";
    return kExitOk;
  }
  check_word(surface, word);
  const int n = static_cast<int>(evaluate_word(model, surface, word).matrix.rows());
  if (n == 0) throw DomainError("dimension of " + surface.describe(model) + " is 0");
  PermutationSet perms = std::nullopt;
  if (n > kWildcardLimit && surface.is_torus() && model.is_abelian()) perms = affine_label_permutations(model);
  const DeltaSet delta = delta_set(model, surface, word, perms, cfg.tol);

  std::vector<std::string> names;
  if (surface.is_torus()) {
    for (const auto& l : model.labels) names.push_back(l.name);
  } else {
    for (const auto& x : enumerate_labelings(model, surface, standard_dap(surface)).labelings)
      names.push_back(labeling_name(model, x));
  }

  if (cfg.format == "json") {
    ordered_json j;
    j["model"] = model.id;
    j["surface"] = surface.describe(model);
    j["word"] = word.text();
    j["dimension"] = delta.dimension;
    j["affine_restriction"] = perms.has_value();
    ordered_json fams = ordered_json::array();
    for (const auto& f : delta.families) {
      ordered_json entry;
      ordered_json perm = ordered_json::array(), image = ordered_json::array(), phases = ordered_json::array();
      for (int l = 0; l < n; ++l) {
        perm.push_back(names[f.perm[l]]);
        image.push_back(names[f.images.front()[l]]);
        phases.push_back({{"basis", names[l]},
                          {"component", names[f.phase_class[l]]},
                          {"phase_over_pi", angle_over_pi(f.relative_phases[l])}});
      }
      entry["perm"] = perm;
      entry["image_perm"] = image;
      entry["phases"] = phases;
      entry["free_phases"] = f.free_phases();
      fams.push_back(entry);
    }
    j["families"] = fams;
    out << j.dump(2) << "\n";
  } else {
    out << "Delta_" << word.text() << " on " << surface.describe(model) << " of " << model.id << ": "
        << delta.families.size() << " families" << (perms ? " (affine permutations only)" : "") << "\n";
    for (std::size_t k = 0; k < delta.families.size(); ++k) {
      const auto& f = delta.families[k];
      out << "family " << k + 1 << "  free phases " << f.free_phases() << "\n";
      for (int l = 0; l < n; ++l)
        out << "  " << names[l] << " -> " << names[f.perm[l]] << "  phase " << angle_over_pi(f.relative_phases[l])
            << " pi (component " << names[f.phase_class[l]] << ")\n";
    }
  }
  return kExitOk;
}

int cmd_lattice(int qudit, int size, const std::string& format, std::ostream& out) {
  const LatticeReport r = lattice_commutation_check(qudit, size);
  if (format == "json") {
    ordered_json j;
    j["qudit"] = r.N;
    j["size"] = r.L;
    j["tuples_checked"] = r.tuples_checked;
    j["intersecting_failures"] = r.intersecting_failures;
    j["same_loop_failures"] = r.same_loop_failures;
    j["dagger_failures"] = r.dagger_failures;
    j["fusion_failures"] = r.fusion_failures;
    j["group_order"] = r.group_order;
    j["expected_group_order"] = r.expected_group_order;
    j["violations"] = r.violations;
    j["passed"] = r.passed();
    out << j.dump(2) << "\n";
  } else {
    out << "Z_" << r.N << " toric code on a " << r.L << "x" << r.L << " torus\n"
        << "  tuples checked        " << r.tuples_checked << "\n"
        << "  intersecting failures " << r.intersecting_failures << "\n"
        << "  same-loop failures    " << r.same_loop_failures << "\n"
        << "  dagger failures       " << r.dagger_failures << "\n"
        << "  fusion failures       " << r.fusion_failures << "\n"
        << "  loop group order      " << r.group_order << " (expected " << r.expected_group_order << ")\n";
    for (const auto& v : r.violations) out << "  violation: " << v << "\n";
    out << (r.passed() ? "pass" : "FAIL") << "\n";
  }
  return r.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Protected gate classification for anyon models", "anyon-gates"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string word;
  int qudit = 2;
  int size = 3;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "numerical tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* validate_cmd = app.add_subcommand("validate", "check a model's consistency equations");
  validate_cmd->add_option("--model", cfg.model, "built-in name or JSON file")->required();
  add_common(validate_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "classify protected gates on a surface");
  classify_cmd->add_option("--model", cfg.model, "built-in name or JSON file")->required();
  classify_cmd->add_option("--surface", cfg.surface, "torus | sphere:<label>:<M>");
  auto* words_opt = classify_cmd->add_option("--words", cfg.words, "comma-separated mapping class words");
  add_common(classify_cmd);

  auto* delta_cmd = app.add_subcommand("delta", "monomial matrices kept monomial by one word");
  delta_cmd->add_option("--model", cfg.model, "built-in name or JSON file");
  delta_cmd->add_option("--surface", cfg.surface, "torus | sphere:<label>:<M>");
  delta_cmd->add_option("--word", word, "mapping class word")->required();
  add_common(delta_cmd);

  auto* lattice_cmd = app.add_subcommand("lattice", "string-operator commutation on the Z_N toric code lattice");
  lattice_cmd->add_option("--qudit", qudit, "qudit dimension N")->check(CLI::Range(2, 64));
  lattice_cmd->add_option("--size", size, "lattice size L")->check(CLI::Range(2, 256));
  lattice_cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* export_cmd = app.add_subcommand("export", "print a model as JSON");
  export_cmd->add_option("--model", cfg.model, "built-in name or JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  cfg.words_given = words_opt->count() > 0;

  try {
    if (validate_cmd->parsed()) return cmd_validate(cfg, out);
    if (classify_cmd->parsed()) return cmd_classify(cfg, out);
    if (delta_cmd->parsed()) return cmd_delta(cfg, word, out);
    if (lattice_cmd->parsed()) return cmd_lattice(qudit, size, cfg.format, out);
    if (export_cmd->parsed()) {
      out << serialize_model(load_model(cfg.model));
      return kExitOk;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace anyon
