#include "cdgl/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "cdgl/errors.hpp"

namespace cdgl {

namespace {

bool face_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

int SimplicialComplex::dimension() const { return faces.empty() ? -1 : static_cast<int>(faces.back().size()) - 1; }

bool SimplicialComplex::contains(const Face& f) const {
  return std::binary_search(faces.begin(), faces.end(), f, face_less);
}

std::vector<Face> SimplicialComplex::faces_of_dimension(int p) const {
  std::vector<Face> out;
  for (const auto& f : faces) {
    if (static_cast<int>(f.size()) == p + 1) out.push_back(f);
  }
  return out;
}

SimplicialComplex make_complex(const std::vector<std::vector<int>>& maximal) {
  std::set<int> labels;
  for (const auto& f : maximal) {
    if (f.empty()) throw DomainError("empty face");
    std::set<int> s(f.begin(), f.end());
    if (s.size() != f.size()) throw DomainError("face with a repeated vertex");
    labels.insert(f.begin(), f.end());
  }
  std::map<int, int> dense;
  for (int l : labels) dense.emplace(l, static_cast<int>(dense.size()));
  std::set<Face, decltype(&face_less)> closure(&face_less);
  for (const auto& f : maximal) {
    Face g;
    for (int v : f) g.push_back(dense.at(v));
    std::sort(g.begin(), g.end());
    if (g.size() > 16) throw DomainError("faces of dimension above 15 are not supported");
    const unsigned subsets = 1u << g.size();
    for (unsigned mask = 1; mask < subsets; ++mask) {
      Face sub;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (mask & (1u << i)) sub.push_back(g[i]);
      }
      closure.insert(std::move(sub));
    }
  }
  return SimplicialComplex{static_cast<int>(dense.size()), std::vector<Face>(closure.begin(), closure.end())};
}

SimplicialComplex parse_complex(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::vector<std::vector<int>> maximal;
  std::set<std::vector<int>> seen;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    std::istringstream words(hash == std::string::npos ? raw : raw.substr(0, hash));
    std::vector<int> face;
    for (std::string w; words >> w;) {
      if (w.empty() || w.size() > 9 || !std::all_of(w.begin(), w.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("expected a vertex label, got '" + w + "'", line);
      }
      face.push_back(std::stoi(w));
    }
    if (face.empty()) continue;
    std::vector<int> key = face;
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end()) throw ParseError("repeated vertex in a face", line);
    if (!seen.insert(key).second) throw ParseError("duplicate face", line);
    maximal.push_back(std::move(face));
  }
  if (maximal.empty()) throw ParseError("no faces", line);
  return make_complex(maximal);
}

ComplexModel model_of_complex(const SimplicialComplex& K, int truncation, Flavor flavor) {
  if (K.faces.empty()) throw DomainError("empty complex");
  const auto ambient = build_model(K.dimension(), truncation, flavor);
  auto alphabet = face_alphabet(K.faces);
  std::vector<TensorElement> diff;
  diff.reserve(K.faces.size());
  for (const auto& f : K.faces) diff.push_back(substitute(ambient.tops.at(f.size() - 1), face_embedding(*alphabet, f)));
  return ComplexModel{K, FreeCompleteDGL(std::move(alphabet), truncation, std::move(diff))};
}

std::vector<std::vector<int>> components(const SimplicialComplex& K) {
  std::vector<int> parent(static_cast<std::size_t>(K.vertices));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  for (const auto& e : K.faces_of_dimension(1)) {
    const int a = find(e[0]);
    const int b = find(e[1]);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < K.vertices; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, vs] : groups) out.push_back(std::move(vs));
  return out;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& K, const std::vector<int>& vertices) {
  std::map<int, int> dense;
  for (int v : vertices) dense.emplace(v, 0);
  int next = 0;
  for (auto& [v, d] : dense) d = next++;
  SimplicialComplex out{next, {}};
  for (const auto& f : K.faces) {
    if (!std::all_of(f.begin(), f.end(), [&](int v) { return dense.count(v) > 0; })) continue;
    Face g;
    for (int v : f) g.push_back(dense.at(v));
    out.faces.push_back(std::move(g));
  }
  std::sort(out.faces.begin(), out.faces.end(), face_less);
  return out;
}

std::vector<std::pair<int, int>> maximal_tree(const SimplicialComplex& K, int root) {
  if (root < 0 || root >= K.vertices) throw DomainError("basepoint " + std::to_string(root) + " is not a vertex");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(K.vertices));
  for (const auto& e : K.faces_of_dimension(1)) {
    adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
    adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<bool> seen(static_cast<std::size_t>(K.vertices), false);
  std::vector<std::pair<int, int>> tree;
  std::queue<int> q;
  q.push(root);
  seen[static_cast<std::size_t>(root)] = true;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      tree.emplace_back(std::min(v, w), std::max(v, w));
      q.push(w);
    }
  }
  return tree;
}

namespace {

// Quotient by generators sent to zero or to explicit images; the kept
// generators keep their names and relative order.
struct Quotient {
  AlphabetPtr alphabet;
  LieMorphism map;
};

Quotient quotient(const FreeCompleteDGL& L, const std::vector<bool>& keep) {
  std::vector<Generator> gens;
  std::vector<int> index(static_cast<std::size_t>(L.size()), -1);
  for (int g = 0; g < L.size(); ++g) {
    if (!keep[static_cast<std::size_t>(g)]) continue;
    index[static_cast<std::size_t>(g)] = static_cast<int>(gens.size());
    gens.push_back((*L.alphabet())[static_cast<Letter>(g)]);
  }
  auto alphabet = make_alphabet(std::move(gens));
  std::vector<TensorElement> images;
  for (int g = 0; g < L.size(); ++g) {
    const int i = index[static_cast<std::size_t>(g)];
    images.push_back(i < 0 ? TensorElement() : TensorElement(Word(static_cast<Letter>(i))));
  }
  return Quotient{alphabet, LieMorphism(L.alphabet(), alphabet, L.truncation(), std::move(images))};
}

FreeCompleteDGL induced(const FreeCompleteDGL& L, const LieMorphism& q, const std::vector<bool>& keep) {
  std::vector<TensorElement> diff;
  for (int g = 0; g < L.size(); ++g) {
    if (keep[static_cast<std::size_t>(g)]) diff.push_back(q.apply(L.diff_tensor(static_cast<Letter>(g))));
  }
  return FreeCompleteDGL(q.target(), L.truncation(), std::move(diff));
}

}  // namespace

MinimalModel minimal_model(const ComplexModel& model, int basepoint) {
  const auto& K = model.complex;
  if (components(K).size() != 1) throw DomainError("complex is disconnected; take components first");
  const auto tree = maximal_tree(K, basepoint);
  const auto& L = model.dgl;
  const int N = L.truncation();

  std::vector<bool> keep(static_cast<std::size_t>(L.size()), true);
  for (int g = 0; g < L.size(); ++g) {
    if (K.faces[static_cast<std::size_t>(g)].size() == 1) keep[static_cast<std::size_t>(g)] = false;
  }
  for (const auto& [a, b] : tree) keep[L.alphabet()->index(face_name({a, b}))] = false;
  auto q = quotient(L, keep);
  FreeCompleteDGL current = induced(L, q.map, keep);
  LieMorphism projection = q.map;
  std::vector<std::pair<std::string, std::string>> eliminated;

  while (true) {
    const auto& alpha = *current.alphabet();
    std::optional<Letter> x;
    for (int g = 0; g < current.size(); ++g) {
      const Letter l = static_cast<Letter>(g);
      if (current.diff_tensor(l).length_part(1).is_zero()) continue;
      if (!x || alpha.degree(l) < alpha.degree(*x)) x = l;
    }
    if (!x) break;
    const TensorElement dx = current.diff_tensor(*x);
    const TensorElement linear = dx.length_part(1);
    const Letter g = linear.terms().front().word[0];
    const Scalar c = linear.terms().front().coeff;
    const TensorElement rest = dx - TensorElement(Word(g), c);

    std::vector<bool> kept(static_cast<std::size_t>(current.size()), true);
    kept[*x] = false;
    kept[g] = false;
    auto step = quotient(current, kept);
    // g is solved from dx = 0; rest only involves g inside brackets
    std::vector<TensorElement> images = step.map.images();
    TensorElement G;
    for (int it = 0; it <= N; ++it) {
      images[g] = G;
      LieMorphism psi(current.alphabet(), step.alphabet, N, images);
      G = Scalar(Scalar(-1) / c) * psi.apply(rest);
    }
    images[g] = G;
    LieMorphism psi(current.alphabet(), step.alphabet, N, std::move(images));
    eliminated.emplace_back(alpha[*x].name, alpha[g].name);
    current = induced(current, psi, kept);
    projection = psi.after(projection);
  }
  return MinimalModel{std::move(current), std::move(projection), tree, std::move(eliminated)};
}

}  // namespace cdgl
