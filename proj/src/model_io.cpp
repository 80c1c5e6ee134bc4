#include "anyon/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace anyon {

using nlohmann::json;

namespace {

const json& require(const json& doc, const char* field) {
  if (!doc.contains(field)) throw SchemaError(std::string("missing field '") + field + "'");
  return doc.at(field);
}

cplx parse_complex(const json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw SchemaError(where + ": expected [re, im]");
  return {v[0].get<double>(), v[1].get<double>()};
}

cplx parse_re_im(const json& obj, const std::string& where) {
  if (!obj.contains("re")) throw SchemaError(where + ": missing 're'");
  double re = obj.at("re").get<double>();
  double im = obj.contains("im") ? obj.at("im").get<double>() : 0.0;
  return {re, im};
}

int label_ref(const json& v, int n, const std::string& where) {
  if (!v.is_number_integer()) throw SchemaError(where + ": label reference must be an integer");
  int idx = v.get<int>();
  if (idx < 0 || idx >= n) throw SchemaError(where + ": unknown label index " + std::to_string(idx));
  return idx;
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

}  // namespace

AnyonModel parse_model(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("model document must be an object");

  try {
    AnyonModel m;
    m.id = doc.value("name", std::string("custom"));

    const json& labels = require(doc, "labels");
    if (!labels.is_array() || labels.empty()) throw SchemaError("'labels' must be a non-empty array");
    const int n = static_cast<int>(labels.size());
    for (int i = 0; i < n; ++i) {
      if (!labels[i].is_string()) throw SchemaError("'labels' entries must be strings");
      m.labels.push_back({i, labels[i].get<std::string>()});
    }

    const json& dual = require(doc, "dual");
    if (!dual.is_array() || static_cast<int>(dual.size()) != n)
      throw SchemaError("'dual' must have one entry per label");
    for (int i = 0; i < n; ++i) m.dual.push_back(label_ref(dual[i], n, "dual"));

    m.fusion.assign(static_cast<std::size_t>(n) * n * n, 0);
    const json& fusion = require(doc, "fusion");
    if (!fusion.is_array()) throw SchemaError("'fusion' must be an array of triples");
    for (const auto& t : fusion) {
      if (!t.is_array() || t.size() != 3) throw SchemaError("fusion entries must be [a,b,c] triples");
      int a = label_ref(t[0], n, "fusion"), b = label_ref(t[1], n, "fusion"), c = label_ref(t[2], n, "fusion");
      if (m.N(a, b, c) != 0)
        throw SchemaError("fusion multiplicity above one at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");
      m.set_N(a, b, c, 1);
    }

    const json& s = require(doc, "smatrix");
    if (!s.is_array()) throw SchemaError("'smatrix' must be an array");
    m.smatrix = Matrix::Zero(n, n);
    if (static_cast<int>(s.size()) == n * n && (n > 1 || !s[0].is_array() || s[0].size() != 1)) {
      for (int k = 0; k < n * n; ++k) m.smatrix(k / n, k % n) = parse_complex(s[k], "smatrix");
    } else if (static_cast<int>(s.size()) == n) {
      for (int r = 0; r < n; ++r) {
        if (!s[r].is_array() || static_cast<int>(s[r].size()) != n)
          throw SchemaError("'smatrix' rows must have one entry per label");
        for (int c = 0; c < n; ++c) m.smatrix(r, c) = parse_complex(s[r][c], "smatrix");
      }
    } else {
      throw SchemaError("'smatrix' must be n*n entries or n rows of n entries");
    }

    if (doc.contains("fsymbols")) {
      for (const auto& f : doc.at("fsymbols")) {
        FKey key{};
        const char* names[] = {"a", "b", "c", "d", "e", "f"};
        for (int i = 0; i < 6; ++i) {
          if (!f.contains(names[i])) throw SchemaError(std::string("fsymbol missing '") + names[i] + "'");
          key[i] = label_ref(f.at(names[i]), n, "fsymbols");
        }
        m.fsymbols[key] = parse_re_im(f, "fsymbols");
      }
    }
    if (doc.contains("rsymbols")) {
      for (const auto& r : doc.at("rsymbols")) {
        RKey key{};
        const char* names[] = {"a", "b", "c"};
        for (int i = 0; i < 3; ++i) {
          if (!r.contains(names[i])) throw SchemaError(std::string("rsymbol missing '") + names[i] + "'");
          key[i] = label_ref(r.at(names[i]), n, "rsymbols");
        }
        m.rsymbols[key] = parse_re_im(r, "rsymbols");
      }
    }
    if (doc.contains("twists")) {
      const json& t = doc.at("twists");
      if (!t.is_array() || static_cast<int>(t.size()) != n)
        throw SchemaError("'twists' must have one entry per label");
      for (const auto& v : t) m.twists.push_back(parse_complex(v, "twists"));
    }
    return m;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("schema violation: ") + e.what());
  }
}

std::string serialize_model(const AnyonModel& m) {
  json doc;
  doc["name"] = m.id;
  json labels = json::array();
  for (const auto& l : m.labels) labels.push_back(l.name);
  doc["labels"] = labels;
  doc["dual"] = m.dual;
  json fusion = json::array();
  for (int a = 0; a < m.size(); ++a)
    for (int b = 0; b < m.size(); ++b)
      for (int c = 0; c < m.size(); ++c)
        if (m.N(a, b, c)) fusion.push_back({a, b, c});
  doc["fusion"] = fusion;
  json s = json::array();
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) s.push_back(complex_json(m.smatrix(r, c)));
  doc["smatrix"] = s;
  json f = json::array();
  for (const auto& [k, v] : m.fsymbols)
    f.push_back({{"a", k[0]}, {"b", k[1]}, {"c", k[2]}, {"d", k[3]}, {"e", k[4]}, {"f", k[5]},
                 {"re", v.real()}, {"im", v.imag()}});
  doc["fsymbols"] = f;
  json r = json::array();
  for (const auto& [k, v] : m.rsymbols)
    r.push_back({{"a", k[0]}, {"b", k[1]}, {"c", k[2]}, {"re", v.real()}, {"im", v.imag()}});
  doc["rsymbols"] = r;
  if (m.has_twists()) {
    json t = json::array();
    for (cplx z : m.twists) t.push_back(complex_json(z));
    doc["twists"] = t;
  }
  return doc.dump(2) + "\n";
}

AnyonModel load_model(const std::string& source) {
  if (is_builtin_spec(source)) return load_builtin(source);
  std::ifstream in(source);
  if (!in) throw std::runtime_error("cannot open model file '" + source + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

bool models_equal(const AnyonModel& a, const AnyonModel& b) {
  if (a.id != b.id || a.size() != b.size() || a.dual != b.dual || a.fusion != b.fusion) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a.labels[i].name != b.labels[i].name) return false;
  return a.smatrix == b.smatrix && a.fsymbols == b.fsymbols && a.rsymbols == b.rsymbols &&
         a.twists == b.twists;
}

}  // namespace anyon
