#include "cdgl/linalg.hpp"

namespace cdgl {

SparseVec<Word> to_sparse(const TensorElement& t) {
  SparseVec<Word> v;
  v.reserve(t.size());
  for (const auto& term : t) v.emplace_back(term.word, term.coeff);
  return v;
}

TensorElement from_sparse(const SparseVec<Word>& v) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& [w, c] : v) terms.push_back({w, c});
  return TensorElement::from_terms(std::move(terms));
}

int rank_of(const std::vector<SparseVec<Word>>& vectors) {
  Echelon<Word> e;
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

int rank_of_transpose(const std::vector<SparseVec<Word>>& vectors) {
  std::map<Word, SparseVec<int>> columns;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (const auto& [w, c] : vectors[i]) columns[w].emplace_back(static_cast<int>(i), c);
  }
  Echelon<int> e;
  for (auto& [w, col] : columns) e.insert(std::move(col));
  return e.rank();
}

std::vector<SparseVec<int>> kernel_basis(const std::vector<SparseVec<Word>>& vectors) {
  Echelon<Word> e(true);
  std::vector<SparseVec<int>> out;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (auto rel = e.insert(vectors[i], {{static_cast<int>(i), Scalar(1)}})) out.push_back(std::move(*rel));
  }
  return out;
}

std::optional<SparseVec<int>> solve(const std::vector<SparseVec<Word>>& vectors, const SparseVec<Word>& target) {
  Echelon<Word> e(true);
  for (std::size_t i = 0; i < vectors.size(); ++i) e.insert(vectors[i], {{static_cast<int>(i), Scalar(1)}});
  SparseVec<int> used;
  if (!e.reduce(target, &used).empty()) return std::nullopt;
  return used;
}

}  // namespace cdgl
