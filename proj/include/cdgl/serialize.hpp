#pragma once

#include <optional>
#include <string>

#include "cdgl/dgl.hpp"
#include "cdgl/simplex.hpp"

namespace cdgl {

/// Text form of a DGL:
///
///   cdgl-dgl 1
///   simplex 1            (optional)
///   flavor seed          (optional)
///   truncation 6
///   generator a0 -1
///   ...
///   diff a01
///   term -1/1 a0
///   term 1/2 [a0,a01]
///   ...
///   end
///
/// Terms are the canonical left-normed decomposition; `#` starts a comment.
struct ModelFile {
  std::optional<int> simplex;
  std::optional<Flavor> flavor;
  FreeCompleteDGL dgl;
};

std::string emit_model(const ModelFile& model);
std::string emit_model(const SimplexModel& model);
/// Throws ParseError (with the offending line) on malformed input and
/// StructuralError on inconsistent tables.
ModelFile parse_model(const std::string& text);

/// Rebuilds a SimplexModel from a file carrying `simplex` and `flavor`.
SimplexModel to_simplex_model(const ModelFile& model);

/// Expressions such as "a01 - 1/2 [a0,a1] + 3 [[x,y],y]"; brackets nest
/// freely and parentheses group. Throws ParseError, also on unknown names.
LieElement parse_element(const AlphabetPtr& alphabet, int truncation, const std::string& text);

/// One line per left-normed term, "p/q [..]"; "0" for zero.
std::string emit_element(const LieElement& x);

}  // namespace cdgl
