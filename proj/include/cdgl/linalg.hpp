#pragma once

#include <iterator>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cdgl/tensor.hpp"

namespace cdgl {

/// Sparse vector: entries sorted by key, no zeros.
template <class K>
using SparseVec = std::vector<std::pair<K, Scalar>>;

/// a += s * b.
template <class K>
void axpy(SparseVec<K>& a, const Scalar& s, const SparseVec<K>& b) {
  if (s == 0 || b.empty()) return;
  SparseVec<K> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, s * j->second);
      ++j;
    } else {
      Scalar c = i->second + s * j->second;
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

SparseVec<Word> to_sparse(const TensorElement& t);
TensorElement from_sparse(const SparseVec<Word>& v);

/// Row echelon form built incrementally, leftmost pivot, pivots scaled to 1.
/// With tracking on, every row remembers which combination of inserted
/// vectors it is. Rows store only their own reduction steps; combinations are
/// expanded on demand, which keeps them sparse.
template <class K>
class Echelon {
 public:
  explicit Echelon(bool track = false) : track_(track) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  /// Reduces v against the rows. If `used` is given, it receives the
  /// combination of inserted vectors that was subtracted.
  SparseVec<K> reduce(SparseVec<K> v, SparseVec<int>* used = nullptr) const {
    std::map<int, Scalar> steps;
    v = reduce_rows(std::move(v), used ? &steps : nullptr);
    if (used) *used = expand(std::move(steps));
    return v;
  }

  /// Inserts v with the given tag. Returns the reduced tag when v was
  /// dependent (a relation among inserted vectors), nullopt otherwise.
  std::optional<SparseVec<int>> insert(SparseVec<K> v, SparseVec<int> tag = {}) {
    std::map<int, Scalar> steps;
    v = reduce_rows(std::move(v), track_ ? &steps : nullptr);
    if (v.empty()) {
      if (track_) axpy(tag, Scalar(-1), expand(std::move(steps)));
      return tag;
    }
    const Scalar inv = 1 / v.front().second;
    for (auto& e : v) e.second *= inv;
    Row r{std::move(v), {}, {}};
    if (track_) {
      for (auto& e : tag) e.second *= inv;
      r.tag = std::move(tag);
      for (auto& [j, c] : steps) r.history.emplace_back(j, -c * inv);
    }
    pivots_.emplace(r.vec.front().first, static_cast<int>(rows_.size()));
    rows_.push_back(std::move(r));
    return std::nullopt;
  }

  const SparseVec<K>& row(int i) const { return rows_[static_cast<std::size_t>(i)].vec; }
  SparseVec<int> tag(int i) const { return expand({{i, Scalar(1)}}); }

 private:
  struct Row {
    SparseVec<K> vec;
    SparseVec<int> tag;
    SparseVec<int> history;  ///< row = tag-vector + sum history_j * row_j
  };

  SparseVec<K> reduce_rows(SparseVec<K> v, std::map<int, Scalar>* steps) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = pivots_.find(v[pos].first);
      if (it == pivots_.end()) {
        ++pos;
        continue;
      }
      const Scalar c = v[pos].second;
      axpy(v, -c, rows_[static_cast<std::size_t>(it->second)].vec);
      if (steps) (*steps)[it->second] += c;
    }
    return v;
  }

  SparseVec<int> expand(std::map<int, Scalar> combo) const {
    SparseVec<int> out;
    while (!combo.empty()) {
      auto last = std::prev(combo.end());
      const int i = last->first;
      const Scalar k = last->second;
      combo.erase(last);
      if (k == 0) continue;
      const Row& r = rows_[static_cast<std::size_t>(i)];
      axpy(out, k, r.tag);
      for (const auto& [j, c] : r.history) combo[j] += k * c;
    }
    return out;
  }

  bool track_;
  std::vector<Row> rows_;
  std::map<K, int> pivots_;
};

/// Rank of a list of vectors.
int rank_of(const std::vector<SparseVec<Word>>& vectors);

/// Rank computed on the transposed matrix; must agree with rank_of.
int rank_of_transpose(const std::vector<SparseVec<Word>>& vectors);

/// Basis of the relations sum_i c_i v_i = 0, each as a sparse coefficient vector.
std::vector<SparseVec<int>> kernel_basis(const std::vector<SparseVec<Word>>& vectors);

/// Some c with sum_i c_i v_i = target (free variables zero), or nullopt.
std::optional<SparseVec<int>> solve(const std::vector<SparseVec<Word>>& vectors, const SparseVec<Word>& target);

}  // namespace cdgl
