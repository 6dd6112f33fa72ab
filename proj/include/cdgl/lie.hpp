#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cdgl/tensor.hpp"

namespace cdgl {

struct Generator {
  std::string name;
  int degree = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Ordered generator set of a free graded Lie algebra. Immutable once built.
class Alphabet {
 public:
  /// Throws ConfigurationError on duplicate names or degrees below -1.
  explicit Alphabet(std::vector<Generator> generators);

  int size() const { return static_cast<int>(generators_.size()); }
  const Generator& operator[](Letter l) const { return generators_[l]; }
  const std::vector<Generator>& generators() const { return generators_; }

  int degree(Letter l) const { return generators_[l].degree; }
  int degree(const Word& w) const;
  std::optional<Letter> find(const std::string& name) const;
  /// Throws StructuralError when the name is unknown.
  Letter index(const std::string& name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.generators_ == b.generators_; }

 private:
  std::vector<Generator> generators_;
  std::unordered_map<std::string, Letter> by_name_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<Generator> generators);

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// Koszul sign (-1)^(p*q).
inline int koszul(int p, int q) { return ((p * q) % 2 == 0) ? 1 : -1; }

/// Graded commutator xy - (-1)^{|x||y|} yx computed term by term, so
/// inhomogeneous operands are fine.
TensorElement tensor_bracket(const Alphabet& alphabet, const TensorElement& x, const TensorElement& y,
                             int max_length);

/// Left-normed bracket [[..[w1,w2],w3]..,wn] of the letters of w.
TensorElement left_normed(const Alphabet& alphabet, const Word& w);

/// An element of the free graded Lie algebra modulo brackets of length > N,
/// stored through its image in the tensor algebra.
class LieElement {
 public:
  LieElement(AlphabetPtr alphabet, int truncation);
  LieElement(AlphabetPtr alphabet, int truncation, TensorElement tensor);

  static LieElement generator(AlphabetPtr alphabet, int truncation, Letter letter);
  static LieElement generator(AlphabetPtr alphabet, int truncation, const std::string& name);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int truncation() const { return truncation_; }
  const TensorElement& tensor() const { return tensor_; }
  bool is_zero() const { return tensor_.is_zero(); }

  /// nullopt for zero ("any degree"). Throws DomainError on inhomogeneous elements.
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  /// Component of word length k.
  LieElement length_part(int k) const;

  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement& operator*=(const Scalar& s);

  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Scalar& s, LieElement a) { return a *= s; }
  friend LieElement operator-(LieElement a) { return a *= Scalar(-1); }

  /// Equality of values; operands must share alphabet and truncation.
  friend bool operator==(const LieElement& a, const LieElement& b);

 private:
  AlphabetPtr alphabet_;
  int truncation_;
  TensorElement tensor_;
};

/// Throws ConfigurationError unless a and b live in the same truncated algebra.
void require_compatible(const LieElement& a, const LieElement& b);

LieElement bracket(const LieElement& x, const LieElement& y);

/// Drops every word longer than max_length. Raising the truncation is refused.
LieElement truncate(const LieElement& x, int max_length);

struct DynkinReport {
  bool ok = true;
  std::vector<int> failing_lengths;
};

/// Checks theta(t_n) == n * t_n for every length n, theta being left-normed
/// bracketing. This holds exactly for Lie elements.
DynkinReport dynkin_verify(const Alphabet& alphabet, const TensorElement& t);

struct BracketTerm {
  Scalar coeff;
  Word word;  ///< read as the left-normed bracket of its letters
};

/// Canonical decomposition of a Lie element into left-normed brackets:
/// p_n = (1/n) sum_w c_w theta(w), with the first two letters of every word
/// put in increasing order (graded antisymmetry) and like terms merged.
std::vector<BracketTerm> left_normed_terms(const Alphabet& alphabet, const TensorElement& t);

/// Renders one left-normed bracket, e.g. "[[a0,a01],a1]".
std::string bracket_notation(const Alphabet& alphabet, const Word& w);

/// Human readable rendering in canonical left-normed terms.
std::string to_string(const LieElement& x);

}  // namespace cdgl
