#pragma once

#include <string>
#include <string_view>

#include "coalescent/complex.hpp"

namespace coalescent::cli {

struct ScxDocument {
  std::string name;
  SimplicialComplex complex;
};

/// One maximal simplex per line as whitespace-separated labels; '#' starts a
/// comment line; an optional "name: <text>" header may precede the facets.
/// Labels get dense ids in order of first appearance. Throws Error(ParseError)
/// and Error(DuplicateVertexInFacet), both naming the line.
ScxDocument parse_scx(std::string_view text);

/// Facets one per line, written with vertex labels. Labels and lines are in
/// natural label order, so parsing and writing again reproduces the text.
std::string write_scx(const SimplicialComplex& c, const std::string& name = {});

/// Labelled simplex sets, ignoring vertex ids.
bool same_labelled_complex(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace coalescent::cli
