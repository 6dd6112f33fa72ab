#pragma once

#include <map>
#include <memory>
#include <vector>

#include "cdgl/complex.hpp"
#include "cdgl/linalg.hpp"

namespace cdgl {

/// Basis of the degree-d part of L / L^{>N}: Lyndon brackets of lengths 1..N.
std::vector<LieElement> quotient_basis(const FreeCompleteDGL& L, int degree);

struct DegreeHomology {
  int degree = 0;
  int chains = 0;    ///< dimension of the degree-d part
  int rank_out = 0;  ///< rank of d leaving degree d
  int rank_in = 0;   ///< rank of d arriving in degree d
  int dim() const { return chains - rank_out - rank_in; }
  std::vector<LieElement> representatives;
};

struct HomologyReport {
  int truncation = 0;
  std::vector<DegreeHomology> degrees;
  const DegreeHomology& at(int degree) const;
};

struct HomologyOptions {
  bool representatives = false;
  /// Recompute every rank on the transposed matrix; a mismatch throws std::logic_error.
  bool cross_check = false;
};

/// H(L / L^{>N}, d) in degrees min_degree..max_degree.
HomologyReport homology(const FreeCompleteDGL& L, int min_degree, int max_degree, HomologyOptions options = {});

/// Homology of the generators under the linear part, degree -> dimension.
std::map<int, int> linear_homology(const FreeCompleteDGL& L);

/// Rational Betti numbers b_0..b_dim; reduced subtracts one from b_0.
std::vector<int> simplicial_betti(const SimplicialComplex& K, bool reduced = false);

/// H_0(L / L^{>N}, d) with its group law a * b = bch(a, b), in coordinates of
/// a fixed basis of cycle representatives.
class MalcevQuotient {
 public:
  using Coords = std::vector<Scalar>;

  /// The differential of L is used as given; twist beforehand to base the
  /// computation at an MC element.
  explicit MalcevQuotient(const FreeCompleteDGL& L);

  int truncation() const { return truncation_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<LieElement>& basis() const { return basis_; }

  /// Coordinates of the class of a degree-0 cycle; throws DomainError otherwise.
  Coords coordinates(const LieElement& cycle) const;
  /// Class of [b_i, b_j].
  const Coords& bracket(int i, int j) const { return bracket_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  Coords bracket(const Coords& a, const Coords& b) const;
  /// BCH product of two classes.
  Coords multiply(const Coords& a, const Coords& b) const;
  /// b_i * b_j.
  Coords table(int i, int j) const;
  Coords unit(int i) const;
  /// Classes of degree-0 cycles of length exactly N, i.e. the last layer.
  int top_layer_dim() const;

 private:
  struct Classifier;
  int truncation_;
  FreeCompleteDGL algebra_;
  std::vector<LieElement> basis_;
  std::vector<std::vector<Coords>> bracket_;
  std::shared_ptr<const Classifier> classifier_;
  std::vector<BracketTerm> bch_terms_;
};

struct TowerLevel {
  MalcevQuotient quotient;
  int layer_dim = 0;           ///< dim at N minus dim at N-1
  bool surjective = true;      ///< onto the previous level
  bool kernel_is_layer = true; ///< kernel equals the classes of length-N cycles
};

/// H_0 of (L(K) / L^{>N}, d_a) for N = 1..max_truncation, a the basepoint.
/// Throws DomainError when K is disconnected.
std::vector<TowerLevel> malcev_tower(const SimplicialComplex& K, int basepoint, int max_truncation,
                                     Flavor flavor = Flavor::seed);

/// pi_n of the realization as H_{n-1}(L / L^{>N}) for n >= 2. L must be
/// non-negatively graded (DomainError otherwise).
DegreeHomology pi_n(const FreeCompleteDGL& L, int n);
/// pi_1 with the BCH group law.
MalcevQuotient pi_1(const FreeCompleteDGL& L);

/// Whether generator images define a DGL morphism from the simplex model
/// into L (an n-simplex of the realization). Degree mismatch -> DomainError.
bool verify_simplex(const SimplexModel& model, const FreeCompleteDGL& L, const std::vector<LieElement>& assignment);

/// gauge(x, a) == b; a and b must be MC and x of degree 0.
bool gauge_equivalent_certificate(const FreeCompleteDGL& L, const LieElement& a, const LieElement& b,
                                  const LieElement& x);

/// (L, d_z) / (L_{<0} + M) with M a complement of ker d_z in L_0: positive
/// degrees up to max_degree plus the degree-0 cycles.
struct Localization {
  int truncation = 0;
  std::vector<std::vector<LieElement>> basis;  ///< by degree 0..max_degree
  /// differential[d][i]: coordinates of d_z(basis[d][i]) in basis[d-1]; empty for d = 0.
  std::vector<std::vector<SparseVec<int>>> differential;
  bool squares_to_zero() const;
};
Localization localize(const FreeCompleteDGL& L, const LieElement& z, int max_degree);

struct ComponentComparison {
  int degree = 0;
  int component = 0;
  int whole = 0;
};
struct ComponentCheck {
  std::vector<int> component_vertices;
  std::vector<ComponentComparison> degrees;
  bool agree() const;
};
/// Homology of (L(K_a), d_a) against (L(K), d_a) at truncation N, K_a being
/// the component of `vertex`.
ComponentCheck component_inclusion_check(const SimplicialComplex& K, int vertex, int truncation, int min_degree,
                                         int max_degree);

}  // namespace cdgl
