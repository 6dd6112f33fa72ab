#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <span>
#include <vector>

#include "cdgl/scalar.hpp"

namespace cdgl {

/// Hard ceiling on word length, hence on every truncation level.
inline constexpr int kMaxLength = 16;

using Letter = std::uint16_t;

/// A word in the tensor algebra. Ordered by length, then lexicographically by
/// letter index. Unused slots stay zero so comparisons can look at the whole array.
class Word {
 public:
  Word() = default;
  explicit Word(Letter letter) { push_back(letter); }
  Word(std::initializer_list<Letter> letters) {
    for (Letter l : letters) push_back(l);
  }

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  Letter operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }
  std::span<const Letter> letters() const { return {letters_.data(), static_cast<std::size_t>(size_)}; }

  void push_back(Letter letter);
  void set(int i, Letter letter) { letters_[static_cast<std::size_t>(i)] = letter; }

  /// Concatenation; the caller guarantees the total length fits.
  friend Word operator*(const Word& a, const Word& b);

  /// Letters [from, to).
  Word slice(int from, int to) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.size_ == b.size_ && a.letters_ == b.letters_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    return a.letters_ <=> b.letters_;
  }

  std::size_t hash() const;

 private:
  std::array<Letter, kMaxLength> letters_{};
  std::uint8_t size_ = 0;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

struct Term {
  Word word;
  Scalar coeff;
};

/// Finite linear combination of words, kept sorted by word with no zero
/// coefficients. This is the canonical carrier of Lie elements.
class TensorElement {
 public:
  TensorElement() = default;
  explicit TensorElement(const Word& word, const Scalar& coeff = 1);

  /// Sorts, merges duplicate words and drops zeros.
  static TensorElement from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Word& word) const;

  int min_length() const;
  int max_length() const;

  /// Words of exactly this length.
  TensorElement length_part(int length) const;
  /// Drops words longer than max_length.
  TensorElement truncated(int max_length) const;

  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator-=(const TensorElement& other);
  TensorElement& operator*=(const Scalar& s);

  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Scalar& s, TensorElement a) { return a *= s; }
  friend TensorElement operator-(TensorElement a) { return a *= Scalar(-1); }

  friend bool operator==(const TensorElement& a, const TensorElement& b);
  friend void add_scaled(TensorElement& a, const Scalar& s, const TensorElement& b);

 private:
  std::vector<Term> terms_;
};

/// Concatenation product, dropping words longer than max_length.
TensorElement multiply(const TensorElement& a, const TensorElement& b, int max_length);

/// a += s * b in place (merge).
void add_scaled(TensorElement& a, const Scalar& s, const TensorElement& b);

}  // namespace cdgl
