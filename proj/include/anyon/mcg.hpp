#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anyon/model.hpp"
#include "anyon/surface.hpp"

namespace anyon {

struct McgLetter {
  enum class Kind { s, t, braid };
  Kind kind = Kind::s;
  int index = 0;  // braid generator number, 1-based
  bool inverse = false;

  bool operator==(const McgLetter&) const = default;
};

struct McgWord {
  std::vector<McgLetter> letters;

  bool empty() const { return letters.empty(); }
  // Canonical spelling: s, t, b<k>, each followed by ' when inverted.
  std::string text() const;
  McgWord inverse() const;
  McgWord operator*(const McgWord& rhs) const;
  bool operator==(const McgWord&) const = default;
};

// Generators: s, t, b<k> (also sigma<k>, σ<k>, σ_<k>); a trailing ' inverts.
McgWord parse_word(std::string_view text);
// Comma-separated words; an empty string gives no words.
std::vector<McgWord> parse_word_list(std::string_view text);

// Throws std::invalid_argument when a letter does not exist on the surface.
void check_word(const SurfaceSpec& surface, const McgWord& word);

struct RepMatrix {
  Matrix matrix;
  McgWord word;
};

std::pair<RepMatrix, RepMatrix> torus_generators(const AnyonModel& model);

// B(a, b) on the slot between neighbors a and b of a z-chain.
struct BraidBlock {
  std::vector<int> slot_labels;
  Matrix matrix;
};
BraidBlock braid_block(const AnyonModel& model, int z, int a, int b);

// Generator sigma_k (1-based) on the standard basis of S^2(z^M).
RepMatrix braid_generator(const AnyonModel& model, int M, int z, int k);

RepMatrix evaluate_word(const AnyonModel& model, const SurfaceSpec& surface, const McgWord& word);

// sigma_1 .. sigma_{M-1}, or s and t on the torus.
std::vector<McgWord> default_generators(const SurfaceSpec& surface);

}  // namespace anyon
