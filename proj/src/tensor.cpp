#include "cdgl/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdgl {

void Word::push_back(Letter letter) {
  if (size_ >= kMaxLength) throw std::length_error("word exceeds kMaxLength");
  letters_[size_++] = letter;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  if (a.size_ + b.size_ > kMaxLength) throw std::length_error("word exceeds kMaxLength");
  std::copy_n(b.letters_.begin(), b.size_, w.letters_.begin() + a.size_);
  w.size_ = static_cast<std::uint8_t>(a.size_ + b.size_);
  return w;
}

Word Word::slice(int from, int to) const {
  Word w;
  for (int i = from; i < to; ++i) w.push_back(letters_[static_cast<std::size_t>(i)]);
  return w;
}

std::size_t Word::hash() const {
  std::size_t h = 1469598103934665603ull ^ size_;
  for (int i = 0; i < size_; ++i) {
    h ^= letters_[static_cast<std::size_t>(i)];
    h *= 1099511628211ull;
  }
  return h;
}

TensorElement::TensorElement(const Word& word, const Scalar& coeff) {
  if (coeff != 0) terms_.push_back({word, coeff});
}

TensorElement TensorElement::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.word < b.word; });
  TensorElement out;
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().word == t.word) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
  return out;
}

Scalar TensorElement::coefficient(const Word& word) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), word,
                             [](const Term& t, const Word& w) { return t.word < w; });
  if (it != terms_.end() && it->word == word) return it->coeff;
  return 0;
}

int TensorElement::min_length() const { return terms_.empty() ? 0 : terms_.front().word.size(); }

int TensorElement::max_length() const { return terms_.empty() ? 0 : terms_.back().word.size(); }

TensorElement TensorElement::length_part(int length) const {
  TensorElement out;
  for (const auto& t : terms_) {
    if (t.word.size() == length) out.terms_.push_back(t);
  }
  return out;
}

TensorElement TensorElement::truncated(int max_length) const {
  TensorElement out;
  for (const auto& t : terms_) {
    if (t.word.size() > max_length) break;
    out.terms_.push_back(t);
  }
  return out;
}

void add_scaled(TensorElement& a, const Scalar& s, const TensorElement& b) {
  if (s == 0 || b.is_zero()) return;
  std::vector<Term> merged;
  merged.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->word < j->word)) {
      merged.push_back(*i++);
    } else if (i == a.end() || j->word < i->word) {
      merged.push_back({j->word, s * j->coeff});
      ++j;
    } else {
      Scalar c = i->coeff + s * j->coeff;
      if (c != 0) merged.push_back({i->word, std::move(c)});
      ++i;
      ++j;
    }
  }
  a.terms_ = std::move(merged);
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  add_scaled(*this, Scalar(1), other);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
  add_scaled(*this, Scalar(-1), other);
  return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& s) {
  if (s == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= s;
  }
  return *this;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.terms_[i].word == b.terms_[i].word) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

TensorElement multiply(const TensorElement& a, const TensorElement& b, int max_length) {
  std::vector<Term> out;
  for (const auto& x : a) {
    const int room = max_length - x.word.size();
    if (room < 0) break;
    for (const auto& y : b) {
      if (y.word.size() > room) break;
      out.push_back({x.word * y.word, x.coeff * y.coeff});
    }
  }
  return TensorElement::from_terms(std::move(out));
}

}  // namespace cdgl
