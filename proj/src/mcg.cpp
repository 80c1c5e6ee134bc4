#include "anyon/mcg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace anyon {

std::string McgWord::text() const {
  std::string out;
  for (const auto& l : letters) {
    switch (l.kind) {
      case McgLetter::Kind::s:
        out += "s";
        break;
      case McgLetter::Kind::t:
        out += "t";
        break;
      case McgLetter::Kind::braid:
        out += "b" + std::to_string(l.index);
        break;
    }
    if (l.inverse) out += "'";
  }
  return out;
}

McgWord McgWord::inverse() const {
  McgWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    McgLetter l = *it;
    l.inverse = !l.inverse;
    w.letters.push_back(l);
  }
  return w;
}

McgWord McgWord::operator*(const McgWord& rhs) const {
  McgWord w = *this;
  w.letters.insert(w.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return w;
}

McgWord parse_word(std::string_view text) {
  McgWord w;
  std::size_t i = 0;
  auto read_index = [&](std::size_t& pos) {
    if (pos < text.size() && text[pos] == '_') ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("braid generator needs an index in '" + std::string(text) + "'");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    McgLetter letter;
    if (c == 's' && text.substr(i, 5) != "sigma") {
      letter.kind = McgLetter::Kind::s;
      ++i;
    } else if (c == 't') {
      letter.kind = McgLetter::Kind::t;
      ++i;
    } else if (c == 'b' || text.substr(i, 5) == "sigma" || text.substr(i, 2) == "σ") {
      letter.kind = McgLetter::Kind::braid;
      i += c == 'b' ? 1 : (text.substr(i, 5) == "sigma" ? 5 : 2);
      letter.index = read_index(i);
    } else {
      throw std::invalid_argument("unknown generator in word '" + std::string(text) + "'");
    }
    if (i < text.size() && text[i] == '\'') {
      letter.inverse = true;
      ++i;
    }
    w.letters.push_back(letter);
  }
  return w;
}

std::vector<McgWord> parse_word_list(std::string_view text) {
  std::vector<McgWord> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_word(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void check_word(const SurfaceSpec& surface, const McgWord& word) {
  for (const auto& l : word.letters) {
    if (surface.is_torus()) {
      if (l.kind == McgLetter::Kind::braid) throw std::invalid_argument("braid generators do not act on the torus");
    } else {
      if (l.kind != McgLetter::Kind::braid) throw std::invalid_argument("s and t act on the torus only");
      if (l.index < 1 || l.index > surface.punctures - 1)
        throw std::invalid_argument("braid generator b" + std::to_string(l.index) + " out of range for " +
                                    std::to_string(surface.punctures) + " punctures");
    }
  }
}

std::pair<RepMatrix, RepMatrix> torus_generators(const AnyonModel& m) {
  if (!m.has_twists()) throw ModelError("model has no twists; the t generator is undefined");
  RepMatrix s{m.smatrix, parse_word("s")};
  Matrix t = Matrix::Zero(m.size(), m.size());
  for (int a = 0; a < m.size(); ++a) t(a, a) = m.twists[a];
  return {s, RepMatrix{t, parse_word("t")}};
}

BraidBlock braid_block(const AnyonModel& m, int z, int a, int b) {
  BraidBlock out;
  for (int x = 0; x < m.size(); ++x)
    if (m.N(a, z, x) == 1 && m.N(x, z, b) == 1) out.slot_labels.push_back(x);
  const FBlock fb = f_block(m, z, a, b, z);
  if (fb.rows != out.slot_labels || fb.rows.size() != fb.cols.size())
    throw ModelError("braid block needs self-dual neighbor labels");
  // columns: slot labels; rows: channel of the two z punctures
  const Matrix w = fb.matrix.transpose();
  Matrix r = Matrix::Zero(w.rows(), w.rows());
  for (std::size_t i = 0; i < fb.cols.size(); ++i) r(i, i) = m.R(z, z, fb.cols[i]);
  out.matrix = w.adjoint() * r * w;
  return out;
}

RepMatrix braid_generator(const AnyonModel& m, int M, int z, int k) {
  if (M < 4) throw std::invalid_argument("braid generators need at least four punctures");
  if (k < 1 || k > M - 1) throw std::invalid_argument("braid generator index out of range");
  if (m.dual[z] != z) throw ModelError("braid generators need a self-dual puncture label");
  const SurfaceSpec surface = SurfaceSpec::sphere(z, M);
  const BasisIndex basis = enumerate_labelings(m, surface, standard_dap(surface));
  const int n = basis.size();
  const int N = M - 3;
  Matrix v = Matrix::Zero(n, n);

  std::map<std::pair<int, int>, BraidBlock> blocks;
  for (int col = 0; col < n; ++col) {
    const Labeling& x = basis.labelings[col];
    if (k == 1) {
      v(col, col) = m.R(z, z, x[0]);
    } else if (k == M - 1) {
      v(col, col) = m.R(z, z, x[N - 1]);
    } else {
      const int slot = k - 2;
      const int a = slot == 0 ? z : x[slot - 1];
      const int b = slot == N - 1 ? m.dual[z] : x[slot + 1];
      auto it = blocks.find({a, b});
      if (it == blocks.end()) it = blocks.emplace(std::make_pair(a, b), braid_block(m, z, a, b)).first;
      const BraidBlock& blk = it->second;
      const auto& labels = blk.slot_labels;
      const auto from = std::find(labels.begin(), labels.end(), x[slot]) - labels.begin();
      for (std::size_t to = 0; to < labels.size(); ++to) {
        Labeling y = x;
        y[slot] = labels[to];
        v(basis.index_of(y), col) += blk.matrix(to, from);
      }
    }
  }
  McgWord w;
  w.letters.push_back({McgLetter::Kind::braid, k, false});
  return {v, w};
}

RepMatrix evaluate_word(const AnyonModel& m, const SurfaceSpec& surface, const McgWord& word) {
  check_word(surface, word);
  std::map<std::pair<McgLetter::Kind, int>, Matrix> cache;
  int n = 0;
  int z = 0;
  if (surface.is_torus()) {
    n = m.size();
  } else {
    const auto& b = surface.boundary_labels;
    if (b.empty() || !std::all_of(b.begin(), b.end(), [&](int x) { return x == b[0]; }))
      throw std::invalid_argument("braid words need identical puncture labels");
    z = b[0];
    n = surface.punctures >= 3 ? enumerate_labelings(m, surface, standard_dap(surface)).size() : 0;
  }
  Matrix out = Matrix::Identity(n, n);
  for (const auto& l : word.letters) {
    const auto key = std::make_pair(l.kind, l.index);
    auto it = cache.find(key);
    if (it == cache.end()) {
      Matrix g;
      if (l.kind == McgLetter::Kind::braid) {
        g = braid_generator(m, surface.punctures, z, l.index).matrix;
      } else {
        auto [s, t] = torus_generators(m);
        g = l.kind == McgLetter::Kind::s ? s.matrix : t.matrix;
      }
      it = cache.emplace(key, std::move(g)).first;
    }
    out = l.inverse ? Matrix(out * it->second.adjoint()) : Matrix(out * it->second);
  }
  return {out, word};
}

std::vector<McgWord> default_generators(const SurfaceSpec& surface) {
  std::vector<McgWord> out;
  if (surface.is_torus()) {
    out.push_back(parse_word("s"));
    out.push_back(parse_word("t"));
    return out;
  }
  for (int k = 1; k < surface.punctures; ++k) out.push_back(parse_word("b" + std::to_string(k)));
  return out;
}

}  // namespace anyon
