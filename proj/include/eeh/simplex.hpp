#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace eeh {

/// Vertex names are opaque text tokens. They are compared lexicographically,
/// and that order fixes every "lexicographic" tie-break in the library.
using VertexLabel = std::string;

/// True if `label` is nonempty and free of whitespace and control bytes.
bool is_valid_label(std::string_view label);

/// A nonempty set of vertices, kept in ascending canonical order.
class Simplex {
 public:
  Simplex() = default;

  /// Sorts `vertices`; throws FormatError on an empty list, an invalid
  /// label or a repeated vertex.
  explicit Simplex(std::vector<VertexLabel> vertices);
  Simplex(std::initializer_list<std::string_view> vertices);

  const std::vector<VertexLabel>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  bool empty() const { return vertices_.empty(); }

  /// Subset test (not necessarily proper).
  bool is_face_of(const Simplex& other) const;
  bool contains(std::string_view vertex) const;

  /// All faces obtained by dropping exactly one vertex. Empty for a vertex.
  std::vector<Simplex> facets() const;

  /// "{a,b,c}"
  std::string to_string() const;

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

 private:
  std::vector<VertexLabel> vertices_;
};

}  // namespace eeh
