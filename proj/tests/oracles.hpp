#pragma once

// Test-side oracles that do not share code paths with the library.

#include <cstdint>
#include <map>
#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cdgl/lie.hpp"

namespace oracle {

// Dimensions of the (degree, length) components of the free graded Lie
// algebra on generators of the given degrees, from the graded PBW identity
//   1 / (1 - sum_l x^{|l|} y) = prod_{(d,k)} (1 + x^d y^k)^{n_{dk}} (d odd)
//                                          (1 - x^d y^k)^{-n_{dk}} (d even)
// solved for n_{dk} one length at a time.
inline std::map<std::pair<int, int>, std::int64_t> free_lie_dims(const std::vector<int>& degrees, int max_length) {
  using Key = std::pair<int, int>;  // (degree, length)
  using Series = std::map<Key, std::int64_t>;
  auto mul = [&](const Series& a, const Series& b) {
    Series out;
    for (auto& [ka, va] : a)
      for (auto& [kb, vb] : b) {
        const int len = ka.second + kb.second;
        if (len > max_length) continue;
        out[{ka.first + kb.first, len}] += va * vb;
      }
    return out;
  };
  auto binom = [](std::int64_t n, std::int64_t k) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };

  Series words{{{0, 0}, 1}};
  Series layer{{{0, 0}, 1}};
  for (int k = 1; k <= max_length; ++k) {
    Series next;
    for (auto& [key, v] : layer)
      for (int d : degrees) next[{key.first + d, k}] += v;
    for (auto& [key, v] : next) words[key] += v;
    layer = next;
  }

  std::map<Key, std::int64_t> dims;
  Series product{{{0, 0}, 1}};
  for (int k = 1; k <= max_length; ++k) {
    for (auto& [key, v] : words) {
      if (key.second != k) continue;
      auto it = product.find(key);
      const std::int64_t have = it == product.end() ? 0 : it->second;
      const std::int64_t n = v - have;
      if (n == 0) continue;
      dims[key] = n;
      const int d = key.first;
      Series factor{{{0, 0}, 1}};
      for (int j = 1; j * k <= max_length; ++j) {
        const std::int64_t c = (d % 2 != 0) ? binom(n, j) : binom(n + j - 1, j);
        if (c != 0) factor[{j * d, j * k}] = c;
      }
      product = mul(product, factor);
    }
  }
  return dims;
}

// Sum of `terms` random left-normed brackets of total degree `degree`, with
// small integer coefficients and lengths 1..max_length.
inline cdgl::TensorElement random_lie(const cdgl::Alphabet& alphabet, int degree, int max_length, int terms,
                                      std::mt19937& rng) {
  cdgl::TensorElement out;
  std::uniform_int_distribution<int> letter(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> length(1, max_length);
  std::uniform_int_distribution<int> coeff(-3, 3);
  int made = 0;
  for (int attempt = 0; attempt < 20000 && made < terms; ++attempt) {
    cdgl::Word w;
    const int n = length(rng);
    for (int i = 0; i < n; ++i) w.push_back(static_cast<cdgl::Letter>(letter(rng)));
    if (alphabet.degree(w) != degree) continue;
    int c = coeff(rng);
    if (c == 0) c = 1;
    cdgl::add_scaled(out, c, cdgl::left_normed(alphabet, w));
    ++made;
  }
  return out;
}

}  // namespace oracle

namespace oracle {

// Dense Bareiss elimination on an integer matrix given row by row.
inline int dense_rank(std::vector<std::vector<mpz_class>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  mpz_class prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int k = c + 1; k < cols; ++k) m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

// Plain chain complex of the closure of the listed faces: Betti numbers b_0..b_dim.
inline std::vector<int> betti_numbers(const std::string& text) {
  std::set<std::vector<int>> faces;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ws(line);
    std::vector<int> f;
    for (int v; ws >> v;) f.push_back(v);
    std::sort(f.begin(), f.end());
    for (unsigned m = 1; m < (1u << f.size()); ++m) {
      std::vector<int> s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (m >> i & 1) s.push_back(f[i]);
      faces.insert(s);
    }
  }
  int dim = 0;
  for (auto& f : faces) dim = std::max(dim, static_cast<int>(f.size()) - 1);
  std::vector<std::vector<std::vector<int>>> by_dim(dim + 1);
  for (auto& f : faces) by_dim[f.size() - 1].push_back(f);
  std::vector<int> rank(dim + 2, 0);
  for (int p = 1; p <= dim; ++p) {
    std::vector<std::vector<mpz_class>> m;
    for (auto& f : by_dim[p]) {
      std::vector<mpz_class> row(by_dim[p - 1].size());
      for (std::size_t j = 0; j < f.size(); ++j) {
        auto g = f;
        g.erase(g.begin() + j);
        auto it = std::find(by_dim[p - 1].begin(), by_dim[p - 1].end(), g);
        row[it - by_dim[p - 1].begin()] = j % 2 ? -1 : 1;
      }
      m.push_back(row);
    }
    rank[p] = oracle::dense_rank(m);
  }
  std::vector<int> b;
  for (int p = 0; p <= dim; ++p) b.push_back(static_cast<int>(by_dim[p].size()) - rank[p] - rank[p + 1]);
  return b;
}

}  // namespace oracle
