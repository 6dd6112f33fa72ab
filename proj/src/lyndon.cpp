#include "cdgl/lyndon.hpp"

#include <algorithm>
#include <numeric>

namespace cdgl {

bool is_lyndon(const Word& w) {
  const int n = w.size();
  if (n == 0) return false;
  for (int r = 1; r < n; ++r) {
    // w must be strictly smaller than its rotation starting at r
    for (int k = 0; k < n; ++k) {
      const Letter a = w[k];
      const Letter b = w[(r + k) % n];
      if (a < b) break;
      if (a > b) return false;
      if (k == n - 1) return false;  // equal to a rotation: periodic
    }
  }
  return true;
}

namespace {

struct Enumerator {
  const Alphabet& alphabet;
  std::vector<Letter> letters;  // sorted
  int min_degree;
  int max_degree;
  int target_degree;
  int length;
  std::vector<Word> out;

  void run(Word& prefix, int degree) {
    const int remaining = length - prefix.size();
    if (remaining == 0) {
      if (degree == target_degree && is_lyndon(prefix)) out.push_back(prefix);
      return;
    }
    const int need = target_degree - degree;
    if (need < remaining * min_degree || need > remaining * max_degree) return;
    for (Letter l : letters) {
      // the first letter of a Lyndon word is its smallest
      if (!prefix.empty() && l < prefix[0]) continue;
      Word next = prefix;
      next.push_back(l);
      run(next, degree + alphabet.degree(l));
    }
  }
};

std::vector<Letter> resolve_letters(const Alphabet& alphabet, std::span<const Letter> letters) {
  std::vector<Letter> ls;
  if (letters.empty()) {
    ls.resize(static_cast<std::size_t>(alphabet.size()));
    std::iota(ls.begin(), ls.end(), Letter{0});
  } else {
    ls.assign(letters.begin(), letters.end());
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  }
  return ls;
}

std::vector<Word> plain_lyndon(const Alphabet& alphabet, const std::vector<Letter>& ls, int degree,
                               int length) {
  if (ls.empty() || length < 1) return {};
  int lo = alphabet.degree(ls.front());
  int hi = lo;
  for (Letter l : ls) {
    lo = std::min(lo, alphabet.degree(l));
    hi = std::max(hi, alphabet.degree(l));
  }
  Enumerator e{alphabet, ls, lo, hi, degree, length, {}};
  Word start;
  e.run(start, 0);
  return std::move(e.out);
}

TensorElement bracketing(const Alphabet& alphabet, const Word& w) {
  if (w.size() == 1) return TensorElement(w);
  const int n = w.size();
  if (n % 2 == 0 && w.slice(0, n / 2) == w.slice(n / 2, n) && !is_lyndon(w)) {
    const TensorElement half = bracketing(alphabet, w.slice(0, n / 2));
    return tensor_bracket(alphabet, half, half, kMaxLength);
  }
  int split = 1;
  while (split < n && !is_lyndon(w.slice(split, n))) ++split;
  return tensor_bracket(alphabet, bracketing(alphabet, w.slice(0, split)), bracketing(alphabet, w.slice(split, n)),
                        kMaxLength);
}

}  // namespace

std::vector<Word> lyndon_words(const Alphabet& alphabet, std::span<const Letter> letters, int degree, int length) {
  const auto ls = resolve_letters(alphabet, letters);
  std::vector<Word> words = plain_lyndon(alphabet, ls, degree, length);
  if (length % 2 == 0 && degree % 2 == 0) {
    for (const Word& u : plain_lyndon(alphabet, ls, degree / 2, length / 2)) {
      if (alphabet.degree(u) % 2 != 0) words.push_back(u * u);
    }
  }
  std::sort(words.begin(), words.end());
  return words;
}

TensorElement standard_bracketing(const Alphabet& alphabet, const Word& w) { return bracketing(alphabet, w); }

std::vector<BasisElement> lyndon_basis(const Alphabet& alphabet, int degree, int length,
                                       std::span<const Letter> letters) {
  std::vector<BasisElement> out;
  for (const Word& w : lyndon_words(alphabet, letters, degree, length)) {
    out.push_back({w, standard_bracketing(alphabet, w)});
  }
  return out;
}

std::vector<LieElement> lyndon_basis(const AlphabetPtr& alphabet, int truncation, int degree, int length,
                                     std::span<const Letter> letters) {
  std::vector<LieElement> out;
  if (length > truncation) return out;
  for (auto& b : lyndon_basis(*alphabet, degree, length, letters)) {
    out.emplace_back(alphabet, truncation, std::move(b.tensor));
  }
  return out;
}

}  // namespace cdgl
