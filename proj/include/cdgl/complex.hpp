#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdgl/simplex.hpp"

namespace cdgl {

/// Finite simplicial complex on the vertices 0..vertices-1, closed under
/// taking faces. Faces are ordered by dimension, then lexicographically.
struct SimplicialComplex {
  int vertices = 0;
  std::vector<Face> faces;

  int dimension() const;
  bool contains(const Face& f) const;
  /// Faces of dimension p.
  std::vector<Face> faces_of_dimension(int p) const;
};

/// Downward closure of the given faces. Vertex labels are renumbered densely,
/// preserving their order. Throws DomainError on empty or repeated vertices.
SimplicialComplex make_complex(const std::vector<std::vector<int>>& maximal);

/// One face per line as whitespace separated vertex labels, `#` comments.
/// Throws ParseError with the line number on malformed lines or repeated faces.
SimplicialComplex parse_complex(const std::string& text);

struct ComplexModel {
  SimplicialComplex complex;
  FreeCompleteDGL dgl;
};

/// The sub-DGL of the model of Delta^{vertices-1} spanned by the faces of K.
/// Each face carries the relabeled top differential of its dimension, which
/// is exactly the restriction of the ambient model.
ComplexModel model_of_complex(const SimplicialComplex& K, int truncation, Flavor flavor = Flavor::seed);

/// Vertex sets of the connected components, each sorted, ordered by least vertex.
std::vector<std::vector<int>> components(const SimplicialComplex& K);

/// Full subcomplex on the given vertices, renumbered densely.
SimplicialComplex induced_subcomplex(const SimplicialComplex& K, const std::vector<int>& vertices);

/// Edges of the BFS tree from `root`, lowest neighbour first.
std::vector<std::pair<int, int>> maximal_tree(const SimplicialComplex& K, int root);

struct MinimalModel {
  FreeCompleteDGL dgl;
  /// The composite quotient map from L(K).
  LieMorphism projection;
  std::vector<std::pair<int, int>> tree;
  /// (x, replaced generator) in elimination order.
  std::vector<std::pair<std::string, std::string>> eliminated;
};

/// Kill the basepoint, then the remaining vertices and the tree edges, then
/// (x, dx) pairs (lowest degree first, then generator order) until the linear
/// part vanishes. Throws DomainError when K is disconnected.
MinimalModel minimal_model(const ComplexModel& model, int basepoint = 0);

}  // namespace cdgl
