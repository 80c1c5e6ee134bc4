#include <sstream>

#include <json.hpp>

#include "anyon/classifier.hpp"

namespace anyon {

namespace {

std::vector<std::string> perm_images(const ClassificationReport& r, const Permutation& p) {
  std::vector<std::string> out;
  for (int a : p) out.push_back(r.label_names.at(a));
  return out;
}

// Pads to a display width, counting UTF-8 code points rather than bytes.
std::string pad(const std::string& text, std::size_t width) {
  std::size_t chars = 0;
  for (unsigned char ch : text) chars += (ch & 0xC0) != 0x80;
  return text + std::string(width > chars ? width - chars : 0, ' ');
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string format_perm(const ClassificationReport& r, const Permutation& p) {
  std::vector<std::string> moved;
  for (std::size_t a = 0; a < p.size(); ++a)
    if (p[a] != static_cast<int>(a)) moved.push_back(r.label_names[a] + "->" + r.label_names[p[a]]);
  return moved.empty() ? "id" : join(moved, " ");
}

}  // namespace

std::string render_report_json(const ClassificationReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["model"] = r.model_id;
  j["surface"] = r.surface;
  j["dimension"] = r.dimension;
  j["words"] = r.words;
  j["labels"] = r.label_names;
  j["basis"] = r.basis_names;
  j["candidate_families"] = r.candidate_families;
  j["similarity_classes"] = r.similarity_classes;
  ordered_json classes = ordered_json::array();
  for (const auto& c : r.classes) {
    ordered_json entry;
    ordered_json perms = ordered_json::array();
    for (const auto& p : c.perm_per_curve) perms.push_back(perm_images(r, p));
    entry["perm_per_curve"] = perms;
    ordered_json phases = ordered_json::array();
    for (std::size_t l = 0; l < c.family.perm.size(); ++l) {
      ordered_json ph;
      ph["labeling"] = r.basis_names[l];
      ph["image"] = r.basis_names[c.family.perm[l]];
      ph["component"] = r.basis_names[c.family.phase_class[l]];
      ph["phase_over_pi"] = angle_over_pi(c.family.relative_phases[l]);
      phases.push_back(ph);
    }
    entry["phase_function"] = phases;
    entry["free_phases"] = c.family.free_phases();
    entry["finite"] = c.finite;
    classes.push_back(entry);
  }
  j["classes"] = classes;
  j["verdict"] = r.verdict;
  j["group_order"] = r.group_order();
  j["upper_bound"] = r.upper_bound;
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

std::string render_report_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "model:       " << r.model_id << "\n"
     << "surface:     " << r.surface << "\n"
     << "dimension:   " << r.dimension << "\n"
     << "words:       " << (r.words.empty() ? "(none)" : join(r.words, ",")) << "\n"
     << "verdict:     " << r.verdict << (r.upper_bound ? " (upper bound)" : "") << "\n"
     << "group order: " << r.group_order() << " classes up to similarity\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  os << "\n";
  for (std::size_t k = 0; k < r.classes.size(); ++k) {
    const auto& c = r.classes[k];
    std::vector<std::string> curves;
    for (const auto& p : c.perm_per_curve) curves.push_back(format_perm(r, p));
    os << "class " << k + 1 << "  curves [" << join(curves, " | ") << "]  free phases " << c.family.free_phases()
       << (c.finite ? "" : "  (not finite)") << "\n";
    for (std::size_t l = 0; l < c.family.perm.size(); ++l)
      os << "  " << pad(r.basis_names[l], 24) << " -> " << pad(r.basis_names[c.family.perm[l]], 24) << " phase " << angle_over_pi(c.family.relative_phases[l]) << " pi\n";
  }
  return os.str();
}

}  // namespace anyon
