#include "cdgl/simplex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cdgl/errors.hpp"
#include "cdgl/linalg.hpp"
#include "cdgl/lyndon.hpp"

namespace cdgl {

std::vector<Face> simplex_faces(int n) {
  std::vector<Face> out;
  for (int p = 0; p <= n; ++p) {
    // combinations of p+1 vertices in lexicographic order
    Face f(static_cast<std::size_t>(p + 1));
    std::iota(f.begin(), f.end(), 0);
    while (true) {
      out.push_back(f);
      int k = p;
      while (k >= 0 && f[static_cast<std::size_t>(k)] == n - p + k) --k;
      if (k < 0) break;
      ++f[static_cast<std::size_t>(k)];
      for (int j = k + 1; j <= p; ++j) f[static_cast<std::size_t>(j)] = f[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

std::string face_name(const Face& f) {
  const bool dotted = std::any_of(f.begin(), f.end(), [](int v) { return v >= 10; });
  std::string s = "a";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (dotted && i > 0) s += '.';
    s += std::to_string(f[i]);
  }
  return s;
}

std::optional<Face> parse_face_name(const std::string& name) {
  if (name.size() < 2 || name[0] != 'a') return std::nullopt;
  Face f;
  const std::string body = name.substr(1);
  if (body.find('.') == std::string::npos) {
    for (char c : body) {
      if (c < '0' || c > '9') return std::nullopt;
      f.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= body.size()) {
      const auto dot = body.find('.', start);
      const std::string part = body.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
      if (part.empty() || part.size() > 6 || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        return std::nullopt;
      }
      f.push_back(std::stoi(part));
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
  }
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (f[i] <= f[i - 1]) return std::nullopt;
  }
  if (face_name(f) != name) return std::nullopt;
  return f;
}

AlphabetPtr face_alphabet(const std::vector<Face>& faces) {
  std::vector<Generator> gens;
  gens.reserve(faces.size());
  for (const auto& f : faces) gens.push_back({face_name(f), static_cast<int>(f.size()) - 2});
  return make_alphabet(std::move(gens));
}

AlphabetPtr simplex_alphabet(int n) { return face_alphabet(simplex_faces(n)); }

TensorElement simplicial_d(const Alphabet& alphabet, const Face& f) {
  TensorElement out;
  if (f.size() < 2) return out;
  for (std::size_t j = 0; j < f.size(); ++j) {
    Face g = f;
    g.erase(g.begin() + static_cast<std::ptrdiff_t>(j));
    out += TensorElement(Word(alphabet.index(face_name(g))), Scalar(j % 2 == 0 ? 1 : -1));
  }
  return out;
}

TensorElement substitute(const TensorElement& t, const std::vector<Letter>& map) {
  std::vector<Term> out;
  out.reserve(t.size());
  for (const auto& term : t) {
    Word w;
    for (Letter l : term.word.letters()) w.push_back(map[l]);
    out.push_back({w, term.coeff});
  }
  return TensorElement::from_terms(std::move(out));
}

std::vector<Letter> face_embedding(const Alphabet& target, const Face& face) {
  std::vector<Letter> map;
  for (const auto& g : simplex_faces(static_cast<int>(face.size()) - 1)) {
    Face image;
    for (int v : g) image.push_back(face[static_cast<std::size_t>(v)]);
    map.push_back(target.index(face_name(image)));
  }
  return map;
}

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::seed:
      return "seed";
    case Flavor::inductive:
      return "inductive";
    case Flavor::symmetric:
      return "symmetric";
  }
  return "seed";
}

std::optional<Flavor> parse_flavor(const std::string& s) {
  if (s == "seed") return Flavor::seed;
  if (s == "inductive") return Flavor::inductive;
  if (s == "symmetric") return Flavor::symmetric;
  return std::nullopt;
}

FreeCompleteDGL model_from_tops(int n, int truncation, const std::vector<TensorElement>& tops) {
  const auto faces = simplex_faces(n);
  auto alphabet = face_alphabet(faces);
  std::vector<TensorElement> diff;
  diff.reserve(faces.size());
  for (const auto& f : faces) {
    const std::size_t p = f.size() - 1;
    diff.push_back(substitute(tops.at(p), face_embedding(*alphabet, f)));
  }
  return FreeCompleteDGL(std::move(alphabet), truncation, std::move(diff));
}

namespace {

Face full_face(int n) {
  Face f(static_cast<std::size_t>(n + 1));
  std::iota(f.begin(), f.end(), 0);
  return f;
}

LieElement gen(const FreeCompleteDGL& L, const Face& f) { return L.generator(face_name(f)); }

TensorElement vertex_top(int N) {
  auto a = simplex_alphabet(0);
  auto a0 = LieElement::generator(a, N, 0);
  return (Scalar(-1, 2) * bracket(a0, a0)).tensor();
}

TensorElement ls_top(int N) {
  auto alpha = simplex_alphabet(1);
  auto a = LieElement::generator(alpha, N, "a0");
  auto b = LieElement::generator(alpha, N, "a1");
  auto x = LieElement::generator(alpha, N, "a01");
  return (bracket(x, b) + bernoulli_op(x, b - a)).tensor();
}

// Delta^n with the top differential still unknown (set to zero).
FreeCompleteDGL partial_model(int n, int N, std::vector<TensorElement> tops) {
  tops.resize(static_cast<std::size_t>(n));
  tops.emplace_back();
  return model_from_tops(n, N, tops);
}

TensorElement triangle_top(int N, const std::vector<TensorElement>& tops) {
  auto L = partial_model(2, N, tops);
  auto top = bch({gen(L, {0, 1}), gen(L, {1, 2}), -gen(L, {0, 2})}) - bracket(gen(L, {0}), gen(L, {0, 1, 2}));
  return top.tensor();
}

TensorElement tetra_top(int N, const std::vector<TensorElement>& tops) {
  auto L = partial_model(3, N, tops);
  auto La0 = twist(L, gen(L, {0}));
  auto B = bch_transgression(La0, {gen(L, {0, 1, 2}), gen(L, {0, 2, 3}), -gen(L, {0, 1, 3})});
  auto top = exp_ad(gen(L, {0, 1}), gen(L, {1, 2, 3})) - B - bracket(gen(L, {0}), gen(L, {0, 1, 2, 3}));
  return top.tensor();
}

// Inductive step: d_{a0} a_{0..n} = (-1)^n (a_{0..n-1} - Gamma) with Gamma in
// the horn and d_{a0} Gamma = d_{a0} a_{0..n-1}.
TensorElement inductive_top(int n, int N, const std::vector<TensorElement>& tops) {
  auto L = partial_model(n, N, tops);
  const Face top = full_face(n);
  const Face facet(top.begin(), top.end() - 1);
  const Letter top_letter = L.alphabet()->index(face_name(top));
  const Letter facet_letter = L.alphabet()->index(face_name(facet));
  auto La0 = twist(L, gen(L, {0}));
  std::vector<Letter> horn;
  for (int g = 0; g < L.size(); ++g) {
    if (g != top_letter && g != facet_letter) horn.push_back(static_cast<Letter>(g));
  }
  const LieElement target = La0.diff(facet_letter);
  LieElement gamma(L.alphabet(), N);
  if (n == 2) {
    // the edge a01 appears in its own twisted differential, so only the
    // linear part of Gamma is confined to the horn
    std::vector<Letter> boundary = horn;
    boundary.push_back(facet_letter);
    std::sort(boundary.begin(), boundary.end());
    const LieElement g1 = solve_boundary(La0.truncated(1), truncate(target, 1), horn);
    gamma = LieElement(L.alphabet(), N, g1.tensor());
    const LieElement rest = target - apply_differential(La0, gamma);
    gamma += solve_boundary(La0, rest, boundary);
  } else {
    gamma = solve_boundary(La0, target, horn);
  }
  const Scalar sign = n % 2 == 0 ? 1 : -1;
  auto result = sign * (gen(L, facet) - gamma) - bracket(gen(L, {0}), gen(L, top));
  return result.tensor();
}

std::vector<std::vector<int>> permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

struct SignedLetter {
  Letter letter;
  int sign;
};

std::vector<SignedLetter> letter_action(const Alphabet& alphabet, const std::vector<Face>& faces,
                                        const std::vector<int>& perm) {
  std::vector<SignedLetter> out;
  out.reserve(faces.size());
  for (const auto& f : faces) {
    std::vector<int> image;
    for (int v : f) image.push_back(perm[static_cast<std::size_t>(v)]);
    const int sign = permutation_sign(image);
    std::sort(image.begin(), image.end());
    out.push_back({alphabet.index(face_name(image)), sign});
  }
  return out;
}

TensorElement act(const std::vector<SignedLetter>& action, const TensorElement& t) {
  std::vector<Term> out;
  out.reserve(t.size());
  for (const auto& term : t) {
    Word w;
    int sign = 1;
    for (Letter l : term.word.letters()) {
      w.push_back(action[l].letter);
      sign *= action[l].sign;
    }
    out.push_back({w, sign > 0 ? term.coeff : Scalar(-term.coeff)});
  }
  return TensorElement::from_terms(std::move(out));
}

// Contraction of the chain complex of the simplex onto a0: h(a_F) = a_{0F}
// for 0 not in F. Extended to words as sum_i p^{i} (x) h (x) id and projected
// to Lie elements with the Dynkin idempotent; inverts d_1 on closed elements
// of length q >= 2.
TensorElement contract(const Alphabet& alphabet, const std::vector<Face>& faces, const TensorElement& t, int q) {
  std::vector<int> cone(faces.size(), -1);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& f = faces[i];
    if (f.front() == 0) continue;
    Face g{0};
    g.insert(g.end(), f.begin(), f.end());
    if (auto l = alphabet.find(face_name(g))) cone[i] = *l;
  }
  const Letter a0 = alphabet.index("a0");
  std::vector<Term> terms;
  for (const auto& term : t) {
    const Word& w = term.word;
    for (int i = 0; i < w.size(); ++i) {
      if (cone[w[i]] >= 0) {
        Word v;
        for (int j = 0; j < i; ++j) v.push_back(a0);
        v.push_back(static_cast<Letter>(cone[w[i]]));
        for (int j = i + 1; j < w.size(); ++j) v.push_back(w[j]);
        terms.push_back({v, i % 2 == 0 ? term.coeff : Scalar(-term.coeff)});
      }
      if (faces[w[i]].size() != 1) break;
    }
  }
  TensorElement out;
  for (const auto& term : TensorElement::from_terms(std::move(terms))) {
    add_scaled(out, Scalar(term.coeff / q), left_normed(alphabet, term.word));
  }
  return out;
}

// Equivariant step: d_q x solved from d_1(d_q x) = -sum_{i=2}^{q} d_i d_{q+1-i} x
// and projected onto the sign-isotypic part.
TensorElement symmetric_top(int n, int N, const std::vector<TensorElement>& tops) {
  auto L = partial_model(n, N, tops);
  const auto& alphabet = *L.alphabet();
  const auto faces = simplex_faces(n);
  const Face top = full_face(n);
  const Letter x = alphabet.index(face_name(top));

  std::vector<TensorElement> linear = L.diff_part(1);
  linear[x] = simplicial_d(alphabet, top);

  std::vector<std::vector<SignedLetter>> group;
  std::vector<int> signs;
  for (const auto& p : permutations(n + 1)) {
    group.push_back(letter_action(alphabet, faces, p));
    signs.push_back(permutation_sign(p));
  }
  const Scalar order = static_cast<long>(group.size());

  TensorElement S = linear[x];
  for (int q = 2; q <= N; ++q) {
    std::vector<TensorElement> diff = L.diff_table();
    diff[x] = S;
    const TensorElement t = apply_derivation(alphabet, diff, -1, S, N).length_part(q);
    if (t.is_zero()) continue;
    const TensorElement omega = contract(alphabet, faces, -t, q);
    TensorElement averaged;
    for (std::size_t g = 0; g < group.size(); ++g) add_scaled(averaged, Scalar(signs[g]) / order, act(group[g], omega));
    if (!(apply_derivation(alphabet, linear, -1, averaged, N) == -t)) {
      throw ConstructionError("symmetric step: obstruction is not sign-invariant at length " + std::to_string(q));
    }
    S += averaged;
  }
  return S;
}

std::vector<TensorElement> build_tops(int n, int N, Flavor flavor) {
  std::vector<TensorElement> tops;
  tops.push_back(vertex_top(N));
  if (n >= 1) tops.push_back(ls_top(N));
  for (int p = 2; p <= n; ++p) {
    switch (flavor) {
      case Flavor::seed:
        if (p == 2) {
          tops.push_back(triangle_top(N, tops));
        } else if (p == 3) {
          tops.push_back(tetra_top(N, tops));
        } else {
          tops.push_back(inductive_top(p, N, tops));
        }
        break;
      case Flavor::inductive:
        tops.push_back(inductive_top(p, N, tops));
        break;
      case Flavor::symmetric:
        tops.push_back(symmetric_top(p, N, tops));
        break;
    }
  }
  return tops;
}

}  // namespace

SimplexModel build_model(int n, int truncation, Flavor flavor) {
  if (n < 0) throw ConfigurationError("simplex dimension must be >= 0");
  auto tops = build_tops(n, truncation, flavor);
  auto dgl = model_from_tops(n, truncation, tops);
  return SimplexModel{n, flavor, std::move(tops), std::move(dgl)};
}

SimplexModel build_symmetric_model(int n, int truncation) { return build_model(n, truncation, Flavor::symmetric); }

SimplexModel vertex_model(int truncation) { return build_model(0, truncation, Flavor::seed); }
SimplexModel ls_interval(int truncation) { return build_model(1, truncation, Flavor::seed); }
SimplexModel triangle_model(int truncation) { return build_model(2, truncation, Flavor::seed); }
SimplexModel tetra_model(int truncation) { return build_model(3, truncation, Flavor::seed); }

FreeCompleteDGL restrict_to_face(const SimplexModel& model, const Face& face) {
  const auto& source = *model.dgl.alphabet();
  const int k = static_cast<int>(face.size()) - 1;
  auto alphabet = simplex_alphabet(k);
  const auto emb = face_embedding(source, face);
  std::vector<int> inverse(static_cast<std::size_t>(source.size()), -1);
  for (std::size_t i = 0; i < emb.size(); ++i) inverse[emb[i]] = static_cast<int>(i);
  std::vector<TensorElement> diff;
  for (Letter l : emb) {
    std::vector<Term> terms;
    for (const auto& t : model.dgl.diff_tensor(l)) {
      Word w;
      for (Letter m : t.word.letters()) {
        if (inverse[m] < 0) {
          throw StructuralError("differential of '" + source[l].name + "' leaves the face " + face_name(face));
        }
        w.push_back(static_cast<Letter>(inverse[m]));
      }
      terms.push_back({w, t.coeff});
    }
    diff.push_back(TensorElement::from_terms(std::move(terms)));
  }
  return FreeCompleteDGL(std::move(alphabet), model.dgl.truncation(), std::move(diff));
}

LieElement bch_transgression(const FreeCompleteDGL& L, const std::vector<LieElement>& es) {
  if (es.empty()) throw DomainError("bch_transgression needs at least one element");
  const int N = L.truncation();
  const int k = static_cast<int>(es.size());
  std::vector<Generator> gens;
  for (int i = 0; i < k; ++i) gens.push_back({"e" + std::to_string(i + 1), 1});
  for (int i = 0; i < k; ++i) gens.push_back({"u" + std::to_string(i + 1), 0});
  auto sym = make_alphabet(std::move(gens));

  std::vector<LieElement> us;
  std::vector<TensorElement> h(static_cast<std::size_t>(2 * k));
  std::vector<TensorElement> gamma;
  for (int i = 0; i < k; ++i) {
    require_member(L, es[static_cast<std::size_t>(i)]);
    require_degree(es[static_cast<std::size_t>(i)], 1, "bch_transgression");
    us.push_back(LieElement::generator(sym, N, static_cast<Letter>(k + i)));
    h[static_cast<std::size_t>(k + i)] = TensorElement(Word(static_cast<Letter>(i)));
    gamma.push_back(es[static_cast<std::size_t>(i)].tensor());
  }
  for (int i = 0; i < k; ++i) gamma.push_back(apply_differential(L, es[static_cast<std::size_t>(i)]).tensor());

  const TensorElement P = bch(us).tensor();
  TensorElement A;
  for (int m = 1; m <= N; ++m) {
    const TensorElement part = P.length_part(m);
    if (part.is_zero()) continue;
    add_scaled(A, Scalar(1) / m, apply_derivation(*sym, h, 1, part, N));
  }
  LieMorphism g(sym, L.alphabet(), N, std::move(gamma));
  return LieElement(L.alphabet(), N, g.apply(A));
}

LieElement solve_boundary(const FreeCompleteDGL& L, const LieElement& target, const std::vector<Letter>& letters) {
  require_member(L, target);
  LieElement beta(L.alphabet(), L.truncation());
  if (target.is_zero()) return beta;
  const int degree = *target.degree() + 1;
  const auto linear = L.diff_part(1);
  LieElement residual = target;
  while (!residual.is_zero()) {
    const int m = residual.tensor().min_length();
    const TensorElement rm = residual.tensor().length_part(m);
    auto basis = lyndon_basis(*L.alphabet(), degree, m, letters);
    std::vector<SparseVec<Word>> images;
    images.reserve(basis.size());
    for (const auto& b : basis) {
      images.push_back(to_sparse(apply_derivation(*L.alphabet(), linear, -1, b.tensor, L.truncation())));
    }
    auto sol = solve(images, to_sparse(rm));
    if (!sol) {
      throw NoSolutionError("no preimage in degree " + std::to_string(degree) + ", length " + std::to_string(m) +
                            "; obstruction " + to_string(LieElement(L.alphabet(), L.truncation(), rm)));
    }
    TensorElement g;
    for (const auto& [i, c] : *sol) add_scaled(g, c, basis[static_cast<std::size_t>(i)].tensor);
    const LieElement gamma(L.alphabet(), L.truncation(), std::move(g));
    beta += gamma;
    residual -= apply_differential(L, gamma);
  }
  return beta;
}

Subdivision subdivision_morphism(int truncation) {
  const int N = truncation;
  const auto ls = ls_interval(N);
  const std::vector<Face> faces = {{0}, {1}, {2}, {0, 1}, {1, 2}};
  auto alphabet = face_alphabet(faces);
  std::vector<TensorElement> diff;
  for (const auto& f : faces) diff.push_back(substitute(ls.tops.at(f.size() - 1), face_embedding(*alphabet, f)));
  FreeCompleteDGL target(alphabet, N, std::move(diff));
  const auto x = bch(target.generator("a01"), target.generator("a12"));
  LieMorphism gamma(ls.dgl.alphabet(), alphabet, N,
                    {TensorElement(Word(alphabet->index("a0"))), TensorElement(Word(alphabet->index("a2"))), x.tensor()});
  return Subdivision{ls.dgl, std::move(target), std::move(gamma)};
}

std::vector<Residue> ls_intertwining_residues(int truncation) {
  const auto ls = ls_interval(truncation);
  const auto& L = ls.dgl;
  const auto x = L.generator("a01");
  const auto La0 = twist(L, L.generator("a0"));
  const auto La1 = twist(L, L.generator("a1"));
  std::vector<Residue> out;
  for (int g = 0; g < L.size(); ++g) {
    const auto v = L.generator(static_cast<Letter>(g));
    auto r = apply_differential(La0, exp_ad(x, v)) - exp_ad(x, apply_differential(La1, v));
    if (!r.is_zero()) out.push_back({(*L.alphabet())[static_cast<Letter>(g)].name, std::move(r)});
  }
  return out;
}

TensorElement permute(const Alphabet& alphabet, const std::vector<Face>& faces, const std::vector<int>& perm,
                      const TensorElement& t) {
  return act(letter_action(alphabet, faces, perm), t);
}

std::vector<Residue> equivariance_residues(const SimplexModel& model) {
  const auto& L = model.dgl;
  const auto& alphabet = *L.alphabet();
  const auto faces = simplex_faces(model.n);
  std::vector<Residue> out;
  for (int i = 0; i < model.n; ++i) {
    std::vector<int> perm(static_cast<std::size_t>(model.n + 1));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
    const auto action = letter_action(alphabet, faces, perm);
    for (int g = 0; g < L.size(); ++g) {
      const Letter l = static_cast<Letter>(g);
      TensorElement lhs = apply_derivation(alphabet, L.diff_table(), -1, act(action, TensorElement(Word(l))), L.truncation());
      TensorElement r = lhs - act(action, L.diff_tensor(l));
      if (!r.is_zero()) {
        out.push_back({"(" + std::to_string(i) + " " + std::to_string(i + 1) + ") " + alphabet[l].name,
                       LieElement(L.alphabet(), L.truncation(), std::move(r))});
      }
    }
  }
  return out;
}

namespace {

LieMorphism coface_map(int i, const AlphabetPtr& lower, int k, const AlphabetPtr& upper, int N) {
  std::vector<TensorElement> images;
  for (const auto& f : simplex_faces(k - 1)) {
    Face g;
    for (int v : f) g.push_back(v < i ? v : v + 1);
    images.emplace_back(Word(upper->index(face_name(g))));
  }
  return LieMorphism(lower, upper, N, std::move(images));
}

LieMorphism codegeneracy_map(int i, const AlphabetPtr& upper, int k, const AlphabetPtr& lower, int N) {
  // upper is Delta^{k+1}, lower is Delta^k
  std::vector<TensorElement> images;
  for (const auto& f : simplex_faces(k + 1)) {
    Face g;
    for (int v : f) g.push_back(v <= i ? v : v - 1);
    const bool injective = std::adjacent_find(g.begin(), g.end()) == g.end();
    images.push_back(injective ? TensorElement(Word(lower->index(face_name(g)))) : TensorElement());
  }
  return LieMorphism(upper, lower, N, std::move(images));
}

bool same_images(const LieMorphism& f, const LieMorphism& g) { return f.images() == g.images(); }

}  // namespace

LieMorphism coface(int i, const SimplexModel& lower, const SimplexModel& upper) {
  if (upper.n != lower.n + 1 || i < 0 || i > upper.n) throw DomainError("coface index out of range");
  if (lower.dgl.truncation() != upper.dgl.truncation()) throw ConfigurationError("mixed truncations");
  return coface_map(i, lower.dgl.alphabet(), upper.n, upper.dgl.alphabet(), upper.dgl.truncation());
}

LieMorphism codegeneracy(int i, const SimplexModel& upper, const SimplexModel& lower) {
  if (upper.flavor != Flavor::symmetric || lower.flavor != Flavor::symmetric) {
    throw DomainError("codegeneracies are only available on symmetric models");
  }
  if (upper.n != lower.n + 1 || i < 0 || i > lower.n) throw DomainError("codegeneracy index out of range");
  if (lower.dgl.truncation() != upper.dgl.truncation()) throw ConfigurationError("mixed truncations");
  return codegeneracy_map(i, upper.dgl.alphabet(), lower.n, lower.dgl.alphabet(), upper.dgl.truncation());
}

bool CheckReport::ok() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.ok; });
}

CheckReport check_model_axioms(const SimplexModel& model) {
  CheckReport report;
  const auto& L = model.dgl;
  const auto& alphabet = *L.alphabet();
  const auto faces = simplex_faces(model.n);
  if (alphabet.size() != static_cast<int>(faces.size())) throw StructuralError("generator count does not match the simplex");

  CheckItem mc{"vertices-mc", true, {}};
  CheckItem linear{"linear-part", true, {}};
  for (int g = 0; g < L.size(); ++g) {
    const Letter l = static_cast<Letter>(g);
    const auto& f = faces[static_cast<std::size_t>(g)];
    if (alphabet[l].name != face_name(f)) throw StructuralError("generator '" + alphabet[l].name + "' out of order");
    if (f.size() == 1) {
      const auto a = L.generator(l);
      auto r = L.diff(l) + Scalar(1, 2) * bracket(a, a);
      if (!r.is_zero()) {
        mc.ok = false;
        mc.residues.push_back({alphabet[l].name, std::move(r)});
      }
    }
    TensorElement r = L.diff_tensor(l).length_part(1) - simplicial_d(alphabet, f);
    if (!r.is_zero()) {
      linear.ok = false;
      linear.residues.push_back({alphabet[l].name, LieElement(L.alphabet(), L.truncation(), std::move(r))});
    }
  }
  report.items.push_back(std::move(mc));
  report.items.push_back(std::move(linear));

  if (model.n >= 1) {
    const Face facet(faces.back().begin(), faces.back().end() - 1);
    std::optional<FreeCompleteDGL> lower;
    try {
      lower = restrict_to_face(model, facet);
    } catch (const StructuralError&) {
      report.items.push_back({"cofaces", false, {}});
    }
    if (lower) {
      for (int i = 0; i <= model.n; ++i) {
        auto f = coface_map(i, lower->alphabet(), model.n, L.alphabet(), L.truncation());
        auto residues = chain_map_residues(f, *lower, L);
        report.items.push_back({"coface-" + std::to_string(i), residues.empty(), std::move(residues)});
      }
    }
  }
  auto dd = check_d_squared(L);
  report.items.push_back({"d-squared", dd.empty(), std::move(dd)});
  return report;
}

CheckReport check_cosimplicial_identities(const std::vector<SimplexModel>& family) {
  CheckReport report;
  const int top = static_cast<int>(family.size()) - 1;
  for (int k = 0; k <= top; ++k) {
    if (family[static_cast<std::size_t>(k)].n != k) throw DomainError("family must list the models of dimensions 0, 1, ...");
  }
  auto d = [&](int i, int k) {  // delta_i : L_{k-1} -> L_k
    return coface(i, family[static_cast<std::size_t>(k - 1)], family[static_cast<std::size_t>(k)]);
  };
  auto s = [&](int i, int k) {  // sigma_i : L_{k+1} -> L_k
    return codegeneracy(i, family[static_cast<std::size_t>(k + 1)], family[static_cast<std::size_t>(k)]);
  };
  auto dgl = [&](int k) -> const FreeCompleteDGL& { return family[static_cast<std::size_t>(k)].dgl; };

  for (int k = 1; k <= top; ++k) {
    for (int i = 0; i <= k; ++i) {
      auto residues = chain_map_residues(d(i, k), dgl(k - 1), dgl(k));
      report.items.push_back({"chain delta" + std::to_string(i) + " L" + std::to_string(k - 1) + "->L" + std::to_string(k),
                              residues.empty(), std::move(residues)});
    }
  }
  for (int k = 0; k < top; ++k) {
    for (int i = 0; i <= k; ++i) {
      auto residues = chain_map_residues(s(i, k), dgl(k + 1), dgl(k));
      report.items.push_back({"chain sigma" + std::to_string(i) + " L" + std::to_string(k + 1) + "->L" + std::to_string(k),
                              residues.empty(), std::move(residues)});
    }
  }
  auto item = [&](std::string name, bool ok) { report.items.push_back({std::move(name), ok, {}}); };
  // delta_j delta_i = delta_i delta_{j-1}, i < j, maps L_{k-1} -> L_{k+1}
  for (int k = 1; k + 1 <= top; ++k) {
    for (int j = 1; j <= k + 1; ++j) {
      for (int i = 0; i < j; ++i) {
        item("delta" + std::to_string(j) + " delta" + std::to_string(i) + " on L" + std::to_string(k - 1),
             same_images(d(j, k + 1).after(d(i, k)), d(i, k + 1).after(d(j - 1, k))));
      }
    }
  }
  // sigma_j sigma_i = sigma_i sigma_{j+1}, i <= j, maps L_{k+2} -> L_k
  for (int k = 0; k + 2 <= top; ++k) {
    for (int j = 0; j <= k; ++j) {
      for (int i = 0; i <= j; ++i) {
        item("sigma" + std::to_string(j) + " sigma" + std::to_string(i) + " on L" + std::to_string(k + 2),
             same_images(s(j, k).after(s(i, k + 1)), s(i, k).after(s(j + 1, k + 1))));
      }
    }
  }
  // sigma_j delta_i, maps L_k -> L_k
  for (int k = 0; k + 1 <= top; ++k) {
    for (int j = 0; j <= k; ++j) {
      for (int i = 0; i <= k + 1; ++i) {
        const auto lhs = s(j, k).after(d(i, k + 1));
        bool ok;
        if (i < j) {
          ok = same_images(lhs, d(i, k).after(s(j - 1, k - 1)));
        } else if (i == j || i == j + 1) {
          std::vector<TensorElement> id;
          for (int g = 0; g < dgl(k).size(); ++g) id.emplace_back(Word(static_cast<Letter>(g)));
          ok = lhs.images() == id;
        } else {
          ok = same_images(lhs, d(i - 1, k).after(s(j, k - 1)));
        }
        item("sigma" + std::to_string(j) + " delta" + std::to_string(i) + " on L" + std::to_string(k), ok);
      }
    }
  }
  return report;
}

LieElement barycentric_mc(const SimplexModel& model) {
  const auto& L = model.dgl;
  const int n = model.n;
  LieElement u = gen(L, {n});
  for (int r = 0; r < n; ++r) u = gauge(L, Scalar(Scalar(1) / (n + 1)) * gen(L, {r, n}), u);
  return u;
}

std::vector<Residue> boundary_escape(const SimplexModel& model, const LieElement& a) {
  const auto& L = model.dgl;
  const auto La = twist(L, a);
  const Letter top = L.alphabet()->index(face_name(full_face(model.n)));
  std::vector<Residue> out;
  for (int g = 0; g < L.size(); ++g) {
    std::vector<Term> escaping;
    for (const auto& t : La.diff_tensor(static_cast<Letter>(g))) {
      const auto letters = t.word.letters();
      if (std::find(letters.begin(), letters.end(), top) != letters.end()) escaping.push_back(t);
    }
    if (!escaping.empty()) {
      out.push_back({(*L.alphabet())[static_cast<Letter>(g)].name,
                     LieElement(L.alphabet(), L.truncation(), TensorElement::from_terms(std::move(escaping)))});
    }
  }
  return out;
}

std::vector<InvariantHomology> invariant_linear_homology(int n, int max_length) {
  const auto faces = simplex_faces(n);
  auto alphabet = face_alphabet(faces);
  std::vector<TensorElement> d;
  for (const auto& f : faces) d.push_back(simplicial_d(*alphabet, f));
  std::vector<std::vector<SignedLetter>> group;
  for (const auto& p : permutations(n + 1)) group.push_back(letter_action(*alphabet, faces, p));

  // invariant basis per (degree, length), as reduced echelon rows
  auto invariants = [&](int degree, int length) {
    Echelon<Word> e;
    std::vector<TensorElement> out;
    for (const auto& b : lyndon_basis(*alphabet, degree, length)) {
      TensorElement avg;
      for (const auto& g : group) avg += act(g, b.tensor);
      if (!e.insert(to_sparse(avg))) out.push_back(avg);
    }
    return out;
  };
  auto rank_of_d = [&](const std::vector<TensorElement>& vs) {
    std::vector<SparseVec<Word>> images;
    for (const auto& v : vs) images.push_back(to_sparse(apply_derivation(*alphabet, d, -1, v, kMaxLength)));
    return rank_of(images);
  };

  std::vector<InvariantHomology> out;
  for (int length = 1; length <= max_length; ++length) {
    for (int degree = -1; degree <= n - 1; ++degree) {
      const auto here = invariants(degree, length);
      const auto above = invariants(degree + 1, length);
      InvariantHomology h;
      h.degree = degree;
      h.length = length;
      h.cycles = static_cast<int>(here.size()) - rank_of_d(here);
      h.boundaries = rank_of_d(above);
      out.push_back(h);
    }
  }
  return out;
}

}  // namespace cdgl
