#pragma once

#include <map>
#include <string>
#include <vector>

#include "cdgl/lie.hpp"

namespace cdgl {

/// Applies the derivation of the given degree determined by `images` (one per
/// letter) with Koszul signs, dropping words longer than max_length.
TensorElement apply_derivation(const Alphabet& alphabet, const std::vector<TensorElement>& images, int degree,
                               const TensorElement& x, int max_length);

/// A graded derivation of the truncated free Lie algebra.
class Derivation {
 public:
  Derivation(AlphabetPtr alphabet, int truncation, int degree, std::vector<TensorElement> images);

  int degree() const { return degree_; }
  const TensorElement& image(Letter l) const { return images_[l]; }
  LieElement apply(const LieElement& x) const;

 private:
  AlphabetPtr alphabet_;
  int truncation_;
  int degree_;
  std::vector<TensorElement> images_;
};

/// Free complete DGL (L(V), d) modulo brackets of length > N.
class FreeCompleteDGL {
 public:
  /// `diff` holds one image per generator, in alphabet order. Each image must be
  /// zero or homogeneous of degree one less than its generator.
  FreeCompleteDGL(AlphabetPtr alphabet, int truncation, std::vector<TensorElement> diff);

  /// Builds from a name-keyed table; a generator missing from the table is a
  /// StructuralError.
  static FreeCompleteDGL from_table(AlphabetPtr alphabet, int truncation,
                                    const std::map<std::string, LieElement>& table);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int truncation() const { return truncation_; }
  int size() const { return alphabet_->size(); }

  LieElement generator(Letter l) const { return LieElement::generator(alphabet_, truncation_, l); }
  LieElement generator(const std::string& name) const {
    return LieElement::generator(alphabet_, truncation_, name);
  }
  LieElement zero() const { return LieElement(alphabet_, truncation_); }

  LieElement diff(Letter l) const { return LieElement(alphabet_, truncation_, diff_[l]); }
  const TensorElement& diff_tensor(Letter l) const { return diff_[l]; }
  const std::vector<TensorElement>& diff_table() const { return diff_; }

  /// Same generators and differential at a lower truncation.
  FreeCompleteDGL truncated(int max_length) const;

  /// Images of the length-k part of the differential on generators.
  std::vector<TensorElement> diff_part(int length) const;

 private:
  AlphabetPtr alphabet_;
  int truncation_;
  std::vector<TensorElement> diff_;
};

void require_member(const FreeCompleteDGL& L, const LieElement& x);

LieElement apply_differential(const FreeCompleteDGL& L, const LieElement& x);

/// The length-preserving part of the differential, extended as a derivation.
LieElement apply_linear_part(const FreeCompleteDGL& L, const LieElement& x);
TensorElement apply_linear_part(const FreeCompleteDGL& L, const TensorElement& x);

struct Residue {
  std::string generator;
  LieElement value;
};

/// d(d(g)) for every generator; only the nonzero residues are listed.
std::vector<Residue> check_d_squared(const FreeCompleteDGL& L);

/// Morphism of free Lie algebras determined by generator images (degree 0).
class LieMorphism {
 public:
  LieMorphism(AlphabetPtr source, AlphabetPtr target, int truncation, std::vector<TensorElement> images);

  const AlphabetPtr& source() const { return source_; }
  const AlphabetPtr& target() const { return target_; }
  int truncation() const { return truncation_; }
  const TensorElement& image(Letter l) const { return images_[l]; }
  const std::vector<TensorElement>& images() const { return images_; }

  TensorElement apply(const TensorElement& x) const;
  LieElement apply(const LieElement& x) const;

  /// (this o inner): first inner, then this.
  LieMorphism after(const LieMorphism& inner) const;

 private:
  AlphabetPtr source_;
  AlphabetPtr target_;
  int truncation_;
  std::vector<TensorElement> images_;
};

/// f(d g) - d(f g) for every source generator g; nonzero residues only.
std::vector<Residue> chain_map_residues(const LieMorphism& f, const FreeCompleteDGL& source,
                                        const FreeCompleteDGL& target);

}  // namespace cdgl
