#include "cdgl/dgl.hpp"

#include "cdgl/errors.hpp"

namespace cdgl {

TensorElement apply_derivation(const Alphabet& alphabet, const std::vector<TensorElement>& images, int degree,
                               const TensorElement& x, int max_length) {
  std::vector<Term> out;
  for (const auto& t : x) {
    const Word& w = t.word;
    int prefix_degree = 0;
    for (int i = 0; i < w.size(); ++i) {
      const Letter l = w[i];
      const Word prefix = w.slice(0, i);
      const Word suffix = w.slice(i + 1, w.size());
      const int room = max_length - prefix.size() - suffix.size();
      Scalar c = t.coeff;
      if (koszul(degree, prefix_degree) < 0) c = -c;
      for (const auto& v : images[l]) {
        if (v.word.size() > room) break;
        out.push_back({prefix * v.word * suffix, c * v.coeff});
      }
      prefix_degree += alphabet.degree(l);
    }
  }
  return TensorElement::from_terms(std::move(out));
}

Derivation::Derivation(AlphabetPtr alphabet, int truncation, int degree, std::vector<TensorElement> images)
    : alphabet_(std::move(alphabet)), truncation_(truncation), degree_(degree), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != alphabet_->size()) {
    throw StructuralError("derivation needs one image per generator");
  }
}

LieElement Derivation::apply(const LieElement& x) const {
  if (x.truncation() != truncation_ || !same_alphabet(x.alphabet(), alphabet_)) {
    throw ConfigurationError("derivation applied outside its algebra");
  }
  return LieElement(alphabet_, truncation_, apply_derivation(*alphabet_, images_, degree_, x.tensor(), truncation_));
}

FreeCompleteDGL::FreeCompleteDGL(AlphabetPtr alphabet, int truncation, std::vector<TensorElement> diff)
    : alphabet_(std::move(alphabet)), truncation_(truncation), diff_(std::move(diff)) {
  if (!alphabet_) throw ConfigurationError("DGL without an alphabet");
  if (truncation_ < 1 || truncation_ > kMaxLength) {
    throw ConfigurationError("truncation must lie in [1, " + std::to_string(kMaxLength) + "]");
  }
  if (static_cast<int>(diff_.size()) != alphabet_->size()) {
    throw StructuralError("differential table has " + std::to_string(diff_.size()) + " entries for " +
                          std::to_string(alphabet_->size()) + " generators");
  }
  for (int g = 0; g < alphabet_->size(); ++g) {
    auto& image = diff_[static_cast<std::size_t>(g)];
    image = image.truncated(truncation_);
    const int want = alphabet_->degree(static_cast<Letter>(g)) - 1;
    for (const auto& t : image) {
      if (alphabet_->degree(t.word) != want) {
        throw StructuralError("differential of '" + (*alphabet_)[static_cast<Letter>(g)].name +
                              "' is not of degree " + std::to_string(want));
      }
    }
  }
}

FreeCompleteDGL FreeCompleteDGL::from_table(AlphabetPtr alphabet, int truncation,
                                            const std::map<std::string, LieElement>& table) {
  std::vector<TensorElement> diff;
  for (const auto& g : alphabet->generators()) {
    auto it = table.find(g.name);
    if (it == table.end()) throw StructuralError("generator '" + g.name + "' missing from differential table");
    diff.push_back(it->second.tensor());
  }
  return FreeCompleteDGL(std::move(alphabet), truncation, std::move(diff));
}

FreeCompleteDGL FreeCompleteDGL::truncated(int max_length) const {
  if (max_length > truncation_) throw ConfigurationError("cannot raise truncation");
  return FreeCompleteDGL(alphabet_, max_length, diff_);
}

std::vector<TensorElement> FreeCompleteDGL::diff_part(int length) const {
  std::vector<TensorElement> out;
  out.reserve(diff_.size());
  for (const auto& d : diff_) out.push_back(d.length_part(length));
  return out;
}

void require_member(const FreeCompleteDGL& L, const LieElement& x) {
  if (x.truncation() != L.truncation()) {
    throw ConfigurationError("element truncated at " + std::to_string(x.truncation()) + ", algebra at " +
                             std::to_string(L.truncation()));
  }
  if (!same_alphabet(x.alphabet(), L.alphabet())) throw ConfigurationError("element over a different alphabet");
}

LieElement apply_differential(const FreeCompleteDGL& L, const LieElement& x) {
  require_member(L, x);
  return LieElement(L.alphabet(), L.truncation(),
                    apply_derivation(*L.alphabet(), L.diff_table(), -1, x.tensor(), L.truncation()));
}

TensorElement apply_linear_part(const FreeCompleteDGL& L, const TensorElement& x) {
  return apply_derivation(*L.alphabet(), L.diff_part(1), -1, x, L.truncation());
}

LieElement apply_linear_part(const FreeCompleteDGL& L, const LieElement& x) {
  require_member(L, x);
  return LieElement(L.alphabet(), L.truncation(), apply_linear_part(L, x.tensor()));
}

std::vector<Residue> check_d_squared(const FreeCompleteDGL& L) {
  std::vector<Residue> out;
  for (int g = 0; g < L.size(); ++g) {
    const Letter l = static_cast<Letter>(g);
    LieElement dd = apply_differential(L, L.diff(l));
    if (!dd.is_zero()) out.push_back({(*L.alphabet())[l].name, std::move(dd)});
  }
  return out;
}

LieMorphism::LieMorphism(AlphabetPtr source, AlphabetPtr target, int truncation, std::vector<TensorElement> images)
    : source_(std::move(source)), target_(std::move(target)), truncation_(truncation), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_->size()) {
    throw StructuralError("morphism needs one image per source generator");
  }
  for (int g = 0; g < source_->size(); ++g) {
    auto& image = images_[static_cast<std::size_t>(g)];
    image = image.truncated(truncation_);
    const int want = source_->degree(static_cast<Letter>(g));
    for (const auto& t : image) {
      if (target_->degree(t.word) != want) {
        throw DomainError("image of '" + (*source_)[static_cast<Letter>(g)].name + "' has the wrong degree");
      }
    }
  }
}

TensorElement LieMorphism::apply(const TensorElement& x) const {
  TensorElement out;
  for (const auto& t : x) {
    TensorElement acc = images_[t.word[0]];
    for (int i = 1; i < t.word.size() && !acc.is_zero(); ++i) {
      acc = multiply(acc, images_[t.word[i]], truncation_);
    }
    add_scaled(out, t.coeff, acc);
  }
  return out;
}

LieElement LieMorphism::apply(const LieElement& x) const {
  if (x.truncation() != truncation_ || !same_alphabet(x.alphabet(), source_)) {
    throw ConfigurationError("morphism applied outside its source");
  }
  return LieElement(target_, truncation_, apply(x.tensor()));
}

LieMorphism LieMorphism::after(const LieMorphism& inner) const {
  if (!same_alphabet(inner.target_, source_) || inner.truncation_ != truncation_) {
    throw ConfigurationError("morphisms do not compose");
  }
  std::vector<TensorElement> images;
  for (const auto& im : inner.images_) images.push_back(apply(im));
  return LieMorphism(inner.source_, target_, truncation_, std::move(images));
}

std::vector<Residue> chain_map_residues(const LieMorphism& f, const FreeCompleteDGL& source,
                                        const FreeCompleteDGL& target) {
  if (!same_alphabet(f.source(), source.alphabet()) || !same_alphabet(f.target(), target.alphabet()) ||
      f.truncation() != source.truncation() || f.truncation() != target.truncation()) {
    throw ConfigurationError("morphism does not match the given DGLs");
  }
  std::vector<Residue> out;
  for (int g = 0; g < source.size(); ++g) {
    const Letter l = static_cast<Letter>(g);
    TensorElement r = f.apply(source.diff_tensor(l));
    r -= apply_derivation(*target.alphabet(), target.diff_table(), -1, f.image(l), target.truncation());
    if (!r.is_zero()) out.push_back({(*source.alphabet())[l].name, LieElement(target.alphabet(), target.truncation(), r)});
  }
  return out;
}

}  // namespace cdgl
