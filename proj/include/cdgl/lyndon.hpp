#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cdgl/lie.hpp"

namespace cdgl {

bool is_lyndon(const Word& w);

/// Basis words of the (degree, length) component of the free graded Lie
/// algebra on `letters`: Lyndon words, plus squares uu of odd-degree Lyndon
/// words u (the bracket [u,u] does not vanish when u is odd). Ordered by
/// length, then lexicographically by letter index.
std::vector<Word> lyndon_words(const Alphabet& alphabet, std::span<const Letter> letters, int degree,
                               int length);

/// Standard bracketing of a basis word: [b(u), b(v)] with v the longest
/// proper Lyndon suffix, or [b(u), b(u)] for a square uu.
TensorElement standard_bracketing(const Alphabet& alphabet, const Word& w);

struct BasisElement {
  Word word;
  TensorElement tensor;
};

/// Lyndon basis of one (degree, length) component. When `letters` is empty the
/// whole alphabet is used.
std::vector<BasisElement> lyndon_basis(const Alphabet& alphabet, int degree, int length,
                                       std::span<const Letter> letters = {});

std::vector<LieElement> lyndon_basis(const AlphabetPtr& alphabet, int truncation, int degree, int length,
                                     std::span<const Letter> letters = {});

}  // namespace cdgl
