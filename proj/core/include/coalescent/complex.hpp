#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace coalescent {

using VertexId = std::uint32_t;
using Labels = std::map<VertexId, std::string>;

/// A simplex is its vertex set, stored as a strictly increasing tuple.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the input. Throws Error(DuplicateVertexInFacet) on a repeated vertex.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices);

  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }

  bool contains(VertexId v) const noexcept;
  /// Position of v in the tuple, if present.
  std::optional<std::size_t> position(VertexId v) const noexcept;
  /// True when every vertex of this simplex is a vertex of `other`.
  bool is_face_of(const Simplex& other) const noexcept;
  /// Codimension-1 face omitting the vertex at `index`.
  Simplex without_index(std::size_t index) const;
  Simplex without_vertex(VertexId v) const;
  Simplex with_vertex(VertexId v) const;
  /// All codimension-1 faces, ordered by the omitted index.
  std::vector<Simplex> boundary_faces() const;
  /// Every nonempty face, this simplex included.
  std::vector<Simplex> all_faces() const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  struct Trusted {};
  Simplex(Trusted, std::vector<VertexId> sorted) : vertices_(std::move(sorted)) {}

  std::vector<VertexId> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// Canonical storage order: by dimension, then lexicographic.
struct CanonicalOrder {
  bool operator()(const Simplex& a, const Simplex& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

std::string to_string(const Simplex& s);

/// A finite abstract simplicial complex, closed under faces, with a
/// codimension-1 face/coface index. Immutable once built.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Closure of the given facets. Throws Error(DuplicateVertexInFacet).
  static SimplicialComplex from_maximal(
      std::span<const std::vector<VertexId>> facets, Labels labels = {});
  static SimplicialComplex from_maximal(
      std::initializer_list<std::vector<VertexId>> facets, Labels labels = {});
  /// Closure of an arbitrary simplex list.
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices,
                                          Labels labels = {});

  std::size_t size() const noexcept { return simplices_.size(); }
  bool empty() const noexcept { return simplices_.empty(); }
  /// -1 for the empty complex.
  int dim() const noexcept;

  /// All simplices in canonical order; indices below refer to this order.
  const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  const Simplex& simplex(std::size_t index) const { return simplices_[index]; }
  std::optional<std::size_t> find(const Simplex& s) const;
  bool contains(const Simplex& s) const { return find(s).has_value(); }
  bool has_vertex(VertexId v) const;

  /// Indices of the codimension-1 cofaces / faces of simplex `index`.
  const std::vector<std::size_t>& coface_indices(std::size_t index) const {
    return cofaces_[index];
  }
  const std::vector<std::size_t>& face_indices(std::size_t index) const {
    return faces_[index];
  }

  std::vector<VertexId> vertices() const;
  std::vector<Simplex> simplices_of_dim(int d) const;
  /// Maximal simplices in canonical order.
  std::vector<Simplex> facets() const;

  const Labels& labels() const noexcept { return labels_; }
  /// Display label: the stored label, or the decimal id.
  std::string label(VertexId v) const;
  std::string label(const Simplex& s) const;
  std::optional<VertexId> find_label(std::string_view label) const;
  SimplicialComplex with_labels(Labels labels) const;

  /// Recomputes the coface index from the simplex set alone.
  std::vector<std::vector<std::size_t>> rebuild_coface_index() const;

  /// Equality of simplex sets; labels are ignored.
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.simplices_ == b.simplices_;
  }

 private:
  void build_index();

  std::vector<Simplex> simplices_;
  std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
  std::vector<std::vector<std::size_t>> cofaces_;
  std::vector<std::vector<std::size_t>> faces_;
  Labels labels_;
};

struct Census {
  std::vector<std::size_t> f_vector;
  std::int64_t euler_characteristic = 0;
  int dim = -1;
  bool connected = false;
};

/// Codimension-1 cofaces of `s`. Throws Error(SimplexNotInComplex).
std::vector<Simplex> cofaces(const SimplicialComplex& c, const Simplex& s);

/// Every simplex containing `v`, canonical order. Throws Error(SimplexNotInComplex).
std::vector<Simplex> star(const SimplicialComplex& c, VertexId v);

Census census(const SimplicialComplex& c);

/// Identifies the vertices of each class. Vertices not listed stay singletons;
/// each class is represented by its smallest member. `class_labels[i]`, when
/// given and non-empty, names class i. Simplices whose vertices all lie in
/// classes of two or more members may merge (glued boundary pieces). Throws
/// Error(NonSimplicialQuotient) when a simplex loses a vertex or when any other
/// two simplices land on the same vertex set.
SimplicialComplex quotient(const SimplicialComplex& c,
                           const std::vector<std::vector<VertexId>>& classes,
                           const std::vector<std::string>& class_labels = {});

/// First barycentric subdivision. Output vertex i is the barycenter of input
/// simplex i (canonical order); its label joins the input labels with '.'.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& c);

/// Removes the simplices at the given indices. The caller guarantees closure.
SimplicialComplex remove_simplices(const SimplicialComplex& c,
                                   const std::vector<std::size_t>& indices);

}  // namespace coalescent
