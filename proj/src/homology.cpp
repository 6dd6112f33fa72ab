#include "cdgl/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "cdgl/errors.hpp"
#include "cdgl/lyndon.hpp"
#include "cdgl/series.hpp"

namespace cdgl {

std::vector<LieElement> quotient_basis(const FreeCompleteDGL& L, int degree) {
  std::vector<LieElement> out;
  for (int len = 1; len <= L.truncation(); ++len) {
    for (auto& b : lyndon_basis(L.alphabet(), L.truncation(), degree, len)) out.push_back(std::move(b));
  }
  return out;
}

const DegreeHomology& HomologyReport::at(int degree) const {
  for (const auto& d : degrees) {
    if (d.degree == degree) return d;
  }
  throw DomainError("degree " + std::to_string(degree) + " not in the report");
}

namespace {

// A Lie element is determined by its coefficients on the basis words of its
// degree, since each standard bracketing is its own word plus larger ones.
class LyndonCoordinates {
 public:
  LyndonCoordinates(const FreeCompleteDGL& L, int degree) {
    std::vector<Letter> all(static_cast<std::size_t>(L.size()));
    for (int g = 0; g < L.size(); ++g) all[static_cast<std::size_t>(g)] = static_cast<Letter>(g);
    for (int len = 1; len <= L.truncation(); ++len) {
      for (auto& w : lyndon_words(*L.alphabet(), all, degree, len)) words_.insert(std::move(w));
    }
  }

  SparseVec<Word> operator()(const TensorElement& t) const {
    SparseVec<Word> out;
    for (const auto& term : t) {
      if (words_.count(term.word)) out.emplace_back(term.word, term.coeff);
    }
    return out;
  }

 private:
  std::unordered_set<Word, WordHash> words_;
};

std::vector<SparseVec<Word>> boundaries_of(const FreeCompleteDGL& L, const std::vector<LieElement>& chains,
                                           int degree) {
  const LyndonCoordinates coords(L, degree - 1);
  std::vector<SparseVec<Word>> out;
  out.reserve(chains.size());
  for (const auto& c : chains) {
    const auto dc = apply_differential(L, c);
    out.push_back(coords(dc.tensor()));
  }
  return out;
}

int checked_rank(const FreeCompleteDGL& L, const std::vector<LieElement>& chains,
                 const std::vector<SparseVec<Word>>& vectors, bool cross_check) {
  const int r = rank_of(vectors);
  if (!cross_check) return r;
  if (rank_of_transpose(vectors) != r) throw std::logic_error("row and column ranks disagree");
  std::vector<SparseVec<Word>> full;
  for (const auto& c : chains) {
    const auto dc = apply_differential(L, c);
    full.push_back(to_sparse(dc.tensor()));
  }
  if (rank_of(full) != r) throw std::logic_error("Lyndon coordinates lose rank");
  return r;
}

LieElement combine(const FreeCompleteDGL& L, const std::vector<LieElement>& basis, const SparseVec<int>& coeffs) {
  TensorElement t;
  for (const auto& [i, c] : coeffs) add_scaled(t, c, basis[static_cast<std::size_t>(i)].tensor());
  return LieElement(L.alphabet(), L.truncation(), std::move(t));
}

std::vector<LieElement> cycles_of(const FreeCompleteDGL& L, const std::vector<LieElement>& chains,
                                  const std::vector<SparseVec<Word>>& images) {
  std::vector<LieElement> out;
  for (const auto& rel : kernel_basis(images)) out.push_back(combine(L, chains, rel));
  return out;
}

}  // namespace

HomologyReport homology(const FreeCompleteDGL& L, int min_degree, int max_degree, HomologyOptions options) {
  if (min_degree > max_degree) throw DomainError("empty degree range");
  HomologyReport report{L.truncation(), {}};
  std::map<int, std::vector<LieElement>> chains;
  std::map<int, std::vector<SparseVec<Word>>> images;
  std::map<int, int> rank;
  for (int d = min_degree; d <= max_degree + 1; ++d) {
    chains[d] = quotient_basis(L, d);
    images[d] = boundaries_of(L, chains[d], d);
    rank[d] = checked_rank(L, chains[d], images[d], options.cross_check);
  }
  for (int d = min_degree; d <= max_degree; ++d) {
    DegreeHomology h;
    h.degree = d;
    h.chains = static_cast<int>(chains[d].size());
    h.rank_out = rank[d];
    h.rank_in = rank[d + 1];
    if (options.representatives && h.dim() > 0) {
      const LyndonCoordinates coords(L, d);
      Echelon<Word> e;
      for (const auto& b : images[d + 1]) e.insert(b);
      for (auto& z : cycles_of(L, chains[d], images[d])) {
        if (!e.insert(coords(z.tensor()))) h.representatives.push_back(std::move(z));
      }
      if (static_cast<int>(h.representatives.size()) != h.dim()) throw std::logic_error("homology bookkeeping mismatch");
    }
    report.degrees.push_back(std::move(h));
  }
  return report;
}

std::map<int, int> linear_homology(const FreeCompleteDGL& L) {
  std::map<int, std::vector<SparseVec<Word>>> by_degree;
  const auto linear = L.diff_part(1);
  for (int g = 0; g < L.size(); ++g) {
    const Letter l = static_cast<Letter>(g);
    by_degree[L.alphabet()->degree(l)].push_back(to_sparse(linear[l]));
  }
  std::map<int, int> out;
  for (const auto& [d, images] : by_degree) {
    const int chains = static_cast<int>(images.size());
    const int rank_out = rank_of(images);
    auto above = by_degree.find(d + 1);
    const int rank_in = above == by_degree.end() ? 0 : rank_of(above->second);
    out[d] = chains - rank_out - rank_in;
  }
  return out;
}

std::vector<int> simplicial_betti(const SimplicialComplex& K, bool reduced) {
  const int dim = K.dimension();
  std::vector<int> ranks(static_cast<std::size_t>(dim + 2), 0);
  std::vector<int> counts(static_cast<std::size_t>(dim + 1), 0);
  std::map<Face, int> index;
  for (const auto& f : K.faces) {
    index.emplace(f, counts[f.size() - 1]++);
  }
  for (int p = 1; p <= dim; ++p) {
    Echelon<int> e;
    for (const auto& f : K.faces_of_dimension(p)) {
      SparseVec<int> v;
      for (std::size_t j = 0; j < f.size(); ++j) {
        Face g = f;
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(j));
        v.emplace_back(index.at(g), Scalar(j % 2 == 0 ? 1 : -1));
      }
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      e.insert(std::move(v));
    }
    ranks[static_cast<std::size_t>(p)] = e.rank();
  }
  std::vector<int> betti;
  for (int p = 0; p <= dim; ++p) {
    betti.push_back(counts[static_cast<std::size_t>(p)] - ranks[static_cast<std::size_t>(p)] -
                    ranks[static_cast<std::size_t>(p + 1)]);
  }
  if (reduced && !betti.empty()) --betti[0];
  return betti;
}

struct MalcevQuotient::Classifier {
  explicit Classifier(const FreeCompleteDGL& L) : coords(L, 0) {}
  LyndonCoordinates coords;
  Echelon<Word> boundaries;
  Echelon<Word> classes{true};  ///< boundaries (untagged) then representatives
};

MalcevQuotient::MalcevQuotient(const FreeCompleteDGL& L) : truncation_(L.truncation()), algebra_(L) {
  auto classifier = std::make_shared<Classifier>(L);
  const auto c0 = quotient_basis(L, 0);
  for (const auto& b : boundaries_of(L, quotient_basis(L, 1), 1)) {
    classifier->boundaries.insert(b);
    classifier->classes.insert(b);
  }
  for (auto& z : cycles_of(L, c0, boundaries_of(L, c0, 0))) {
    const int k = static_cast<int>(basis_.size());
    if (!classifier->classes.insert(classifier->coords(z.tensor()), {{k, Scalar(1)}})) basis_.push_back(std::move(z));
  }
  classifier_ = std::move(classifier);

  bracket_.assign(basis_.size(), std::vector<Coords>(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      bracket_[i][j] = j < i ? Coords(bracket_[j][i].size()) : coordinates(cdgl::bracket(basis_[i], basis_[j]));
      if (j < i) {
        for (std::size_t k = 0; k < bracket_[j][i].size(); ++k) bracket_[i][j][k] = -bracket_[j][i][k];
      }
    }
  }
  auto xy = make_alphabet({{"x", 0}, {"y", 0}});
  bch_terms_ = left_normed_terms(
      *xy, bch(LieElement::generator(xy, truncation_, Letter{0}), LieElement::generator(xy, truncation_, Letter{1})).tensor());
}

MalcevQuotient::Coords MalcevQuotient::coordinates(const LieElement& cycle) const {
  require_member(algebra_, cycle);
  require_degree(cycle, 0, "coordinates");
  if (!apply_differential(algebra_, cycle).is_zero()) throw DomainError("not a cycle");
  SparseVec<int> used;
  if (!classifier_->classes.reduce(classifier_->coords(cycle.tensor()), &used).empty()) {
    throw std::logic_error("cycle outside the span of the representatives");
  }
  Coords out(basis_.size());
  for (const auto& [i, c] : used) out[static_cast<std::size_t>(i)] = c;
  return out;
}

MalcevQuotient::Coords MalcevQuotient::bracket(const Coords& a, const Coords& b) const {
  Coords out(basis_.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      const Scalar c = a[i] * b[j];
      const auto& bij = bracket_[i][j];
      for (std::size_t k = 0; k < out.size(); ++k) {
        if (bij[k] != 0) out[k] += c * bij[k];
      }
    }
  }
  return out;
}

MalcevQuotient::Coords MalcevQuotient::multiply(const Coords& a, const Coords& b) const {
  if (a.size() != basis_.size() || b.size() != basis_.size()) throw DomainError("coordinate vector of the wrong size");
  Coords out(basis_.size());
  for (const auto& term : bch_terms_) {
    Coords v = term.word[0] == 0 ? a : b;
    for (int k = 1; k < term.word.size(); ++k) v = bracket(v, term.word[k] == 0 ? a : b);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += term.coeff * v[k];
  }
  return out;
}

MalcevQuotient::Coords MalcevQuotient::unit(int i) const {
  Coords out(basis_.size());
  out.at(static_cast<std::size_t>(i)) = 1;
  return out;
}

MalcevQuotient::Coords MalcevQuotient::table(int i, int j) const { return multiply(unit(i), unit(j)); }

int MalcevQuotient::top_layer_dim() const {
  const auto layer = lyndon_basis(algebra_.alphabet(), truncation_, 0, truncation_);
  std::vector<SparseVec<Word>> images;
  const LyndonCoordinates below(algebra_, -1);
  for (const auto& b : layer) {
    const auto db = apply_linear_part(algebra_, b);
    images.push_back(below(db.tensor()));
  }
  Echelon<Word> e = classifier_->boundaries;
  const int before = e.rank();
  for (const auto& z : cycles_of(algebra_, layer, images)) e.insert(classifier_->coords(z.tensor()));
  return e.rank() - before;
}

std::vector<TowerLevel> malcev_tower(const SimplicialComplex& K, int basepoint, int max_truncation, Flavor flavor) {
  if (components(K).size() != 1) throw DomainError("complex is disconnected");
  if (basepoint < 0 || basepoint >= K.vertices) throw DomainError("basepoint is not a vertex");
  const auto model = model_of_complex(K, max_truncation, flavor);
  std::vector<TowerLevel> tower;
  for (int N = 1; N <= max_truncation; ++N) {
    const auto L = model.dgl.truncated(N);
    const auto La = twist(L, L.generator(face_name({basepoint})));
    TowerLevel level{MalcevQuotient(La)};
    level.layer_dim = level.quotient.dim();
    if (!tower.empty()) {
      const auto& prev = tower.back().quotient;
      level.layer_dim -= prev.dim();
      Echelon<int> image;
      for (const auto& b : level.quotient.basis()) {
        const auto c = prev.coordinates(truncate(b, N - 1));
        SparseVec<int> v;
        for (std::size_t k = 0; k < c.size(); ++k) {
          if (c[k] != 0) v.emplace_back(static_cast<int>(k), c[k]);
        }
        image.insert(std::move(v));
      }
      level.surjective = image.rank() == prev.dim();
      level.kernel_is_layer = level.quotient.dim() - image.rank() == level.quotient.top_layer_dim();
    } else {
      level.kernel_is_layer = level.quotient.dim() == level.quotient.top_layer_dim();
    }
    tower.push_back(std::move(level));
  }
  return tower;
}

namespace {

void require_non_negative(const FreeCompleteDGL& L) {
  for (const auto& g : L.alphabet()->generators()) {
    if (g.degree < 0) throw DomainError("generator '" + g.name + "' has negative degree");
  }
}

}  // namespace

DegreeHomology pi_n(const FreeCompleteDGL& L, int n) {
  require_non_negative(L);
  if (n < 2) throw DomainError("pi_n as a vector space needs n >= 2; use pi_1");
  return homology(L, n - 1, n - 1, {true, false}).at(n - 1);
}

MalcevQuotient pi_1(const FreeCompleteDGL& L) {
  require_non_negative(L);
  return MalcevQuotient(L);
}

bool verify_simplex(const SimplexModel& model, const FreeCompleteDGL& L, const std::vector<LieElement>& assignment) {
  if (model.dgl.truncation() != L.truncation()) throw ConfigurationError("model and target truncations differ");
  if (static_cast<int>(assignment.size()) != model.dgl.size()) throw StructuralError("one image per generator needed");
  std::vector<TensorElement> images;
  for (const auto& x : assignment) {
    require_member(L, x);
    images.push_back(x.tensor());
  }
  LieMorphism f(model.dgl.alphabet(), L.alphabet(), L.truncation(), std::move(images));
  return chain_map_residues(f, model.dgl, L).empty();
}

bool gauge_equivalent_certificate(const FreeCompleteDGL& L, const LieElement& a, const LieElement& b,
                                  const LieElement& x) {
  if (!is_mc(L, a) || !is_mc(L, b)) throw DomainError("certificate endpoints must be Maurer-Cartan");
  require_degree(x, 0, "gauge certificate");
  return gauge(L, x, a) == b;
}

bool Localization::squares_to_zero() const {
  for (std::size_t d = 2; d < differential.size(); ++d) {
    for (const auto& col : differential[d]) {
      SparseVec<int> acc;
      for (const auto& [j, c] : col) axpy(acc, c, differential[d - 1][static_cast<std::size_t>(j)]);
      if (!acc.empty()) return false;
    }
  }
  return true;
}

Localization localize(const FreeCompleteDGL& L, const LieElement& z, int max_degree) {
  if (max_degree < 0) throw DomainError("max_degree must be >= 0");
  const auto Lz = twist(L, z);
  Localization out;
  out.truncation = L.truncation();
  const auto c0 = quotient_basis(Lz, 0);
  out.basis.push_back(cycles_of(Lz, c0, boundaries_of(Lz, c0, 0)));
  out.differential.emplace_back();
  for (int d = 1; d <= max_degree; ++d) out.basis.push_back(quotient_basis(Lz, d));
  for (int d = 1; d <= max_degree; ++d) {
    Echelon<Word> below(true);
    const auto& target = out.basis[static_cast<std::size_t>(d - 1)];
    for (std::size_t j = 0; j < target.size(); ++j) below.insert(to_sparse(target[j].tensor()), {{static_cast<int>(j), Scalar(1)}});
    std::vector<SparseVec<int>> column;
    for (const auto& b : out.basis[static_cast<std::size_t>(d)]) {
      SparseVec<int> used;
      if (!below.reduce(to_sparse(apply_differential(Lz, b).tensor()), &used).empty()) {
        throw std::logic_error("localized differential leaves the quotient");
      }
      column.push_back(std::move(used));
    }
    out.differential.push_back(std::move(column));
  }
  return out;
}

bool ComponentCheck::agree() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const ComponentComparison& c) { return c.component == c.whole; });
}

ComponentCheck component_inclusion_check(const SimplicialComplex& K, int vertex, int truncation, int min_degree,
                                         int max_degree) {
  if (vertex < 0 || vertex >= K.vertices) throw DomainError("vertex out of range");
  ComponentCheck check;
  for (const auto& comp : components(K)) {
    if (std::find(comp.begin(), comp.end(), vertex) != comp.end()) check.component_vertices = comp;
  }
  const auto Ka = induced_subcomplex(K, check.component_vertices);
  const int local = static_cast<int>(std::find(check.component_vertices.begin(), check.component_vertices.end(), vertex) -
                                     check.component_vertices.begin());
  const auto whole = model_of_complex(K, truncation).dgl;
  const auto part = model_of_complex(Ka, truncation).dgl;
  const auto hw = homology(twist(whole, whole.generator(face_name({vertex}))), min_degree, max_degree);
  const auto hp = homology(twist(part, part.generator(face_name({local}))), min_degree, max_degree);
  for (int d = min_degree; d <= max_degree; ++d) check.degrees.push_back({d, hp.at(d).dim(), hw.at(d).dim()});
  return check;
}

}  // namespace cdgl
