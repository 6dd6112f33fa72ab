#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdgl/dgl.hpp"
#include "cdgl/series.hpp"

namespace cdgl {

using Face = std::vector<int>;

/// Faces of the n-simplex ordered by dimension, then lexicographically.
std::vector<Face> simplex_faces(int n);

/// "a012"; vertices are joined with '.' once some label has two digits.
std::string face_name(const Face& f);
/// Inverse of face_name; nullopt if the name is not of that form.
std::optional<Face> parse_face_name(const std::string& name);

/// Generators a_F of degree dim F - 1, in simplex_faces order.
AlphabetPtr face_alphabet(const std::vector<Face>& faces);
AlphabetPtr simplex_alphabet(int n);

/// Chain differential d a_F = sum_j (-1)^j a_{F - F_j}, as a map on letters.
TensorElement simplicial_d(const Alphabet& alphabet, const Face& f);

/// Letter substitution; the map is total on the letters that occur.
TensorElement substitute(const TensorElement& t, const std::vector<Letter>& map);

/// Letters of Delta^p sent to the faces of `face` inside `target` by the
/// monotone map j -> face[j].
std::vector<Letter> face_embedding(const Alphabet& target, const Face& face);

enum class Flavor { seed, inductive, symmetric };

std::string to_string(Flavor f);
std::optional<Flavor> parse_flavor(const std::string& s);

/// A model of Delta^n. tops[p] is d a_{0..p} written over the alphabet of
/// Delta^p; every other face gets its differential by relabeling.
struct SimplexModel {
  int n = 0;
  Flavor flavor = Flavor::seed;
  std::vector<TensorElement> tops;
  FreeCompleteDGL dgl;
};

/// Model of Delta^n from the top differentials of dimensions 0..n.
FreeCompleteDGL model_from_tops(int n, int truncation, const std::vector<TensorElement>& tops);

SimplexModel vertex_model(int truncation);
SimplexModel ls_interval(int truncation);
SimplexModel triangle_model(int truncation);
SimplexModel tetra_model(int truncation);

/// seed: explicit formulas through dimension 3, then the inductive step.
/// inductive: the inductive step from dimension 2 on.
/// symmetric: the equivariant step from dimension 2 on.
SimplexModel build_model(int n, int truncation, Flavor flavor = Flavor::seed);
SimplexModel build_symmetric_model(int n, int truncation);

/// The model of Delta^k spanned by the faces of `face`, relabeled to 0..k.
/// Throws StructuralError if the differential leaves the face.
FreeCompleteDGL restrict_to_face(const SimplexModel& model, const Face& face);

/// B_{e_1..e_k}: degree 1, dB = de_1 * ... * de_k, linear part sum e_i.
LieElement bch_transgression(const FreeCompleteDGL& L, const std::vector<LieElement>& es);

/// beta with d(beta) = target, beta supported on `letters` (all if empty),
/// found length by length with free variables set to zero.
LieElement solve_boundary(const FreeCompleteDGL& L, const LieElement& target, const std::vector<Letter>& letters = {});

struct Subdivision {
  FreeCompleteDGL source;  ///< LS interval on a0, a1, a01
  FreeCompleteDGL target;  ///< two glued intervals on a0, a1, a2, a01, a12
  LieMorphism gamma;
};

/// a0 -> a0, a1 -> a2, a01 -> a01 * a12.
Subdivision subdivision_morphism(int truncation);

/// d_{a0} e^{ad a01}(v) - e^{ad a01}(d_{a1} v) on every generator v of the LS interval.
std::vector<Residue> ls_intertwining_residues(int truncation);

/// Signed action on letters: perm[i] is the image of vertex i.
TensorElement permute(const Alphabet& alphabet, const std::vector<Face>& faces, const std::vector<int>& perm,
                      const TensorElement& t);

/// d(s g) - s(d g) for every generator g and every adjacent transposition s.
std::vector<Residue> equivariance_residues(const SimplexModel& model);

/// delta_i : L_{n-1} -> L_n.
LieMorphism coface(int i, const SimplexModel& lower, const SimplexModel& upper);
/// sigma_i : L_{n+1} -> L_n; requires symmetric models (DomainError otherwise).
LieMorphism codegeneracy(int i, const SimplexModel& upper, const SimplexModel& lower);

struct CheckItem {
  std::string name;
  bool ok = true;
  std::vector<Residue> residues;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool ok() const;
};

/// Vertices MC, linear part equal to d, cofaces chain maps (the model of
/// Delta^{n-1} being the restriction to the face 0..n-1), and d^2 = 0.
CheckReport check_model_axioms(const SimplexModel& model);

/// Chain-map property of all cofaces and codegeneracies between the given
/// consecutive symmetric models, and the cosimplicial identities among them.
CheckReport check_cosimplicial_identities(const std::vector<SimplexModel>& family);

/// Gauge the last vertex along the edges a_{rn}/(n+1), r = 0..n-1.
LieElement barycentric_mc(const SimplexModel& model);

/// Generators g whose twisted differential d_a g leaves the boundary
/// subalgebra (uses the top generator); empty means Im d_a lies in L(boundary).
std::vector<Residue> boundary_escape(const SimplexModel& model, const LieElement& a);

struct InvariantHomology {
  int degree = 0;
  int length = 0;
  int cycles = 0;
  int boundaries = 0;
  int dim() const { return cycles - boundaries; }
};

/// Homology of the Sigma_{n+1}-invariant part of (L(Delta^n), d_1) per
/// (degree, length), degrees -1..n-1 and lengths 1..max_length.
std::vector<InvariantHomology> invariant_linear_homology(int n, int max_length);

}  // namespace cdgl
