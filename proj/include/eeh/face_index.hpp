#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace eeh {

using VertexId = std::uint32_t;

/// A face as ascending vertex ids. Ids are positions in a sorted label table,
/// so comparing IdFaces agrees with comparing the labelled simplices.
using IdFace = std::vector<VertexId>;

/// Faces bucketed by dimension. Each face carries its "up" list: the sorted
/// vertices v such that face + {v} is also stored. The up list is the coface
/// index; its length is the number of cofaces one dimension higher.
class FaceIndex {
 public:
  using Bucket = std::map<IdFace, std::vector<VertexId>>;

  bool contains(const IdFace& face) const;

  /// nullptr when `face` is absent.
  const std::vector<VertexId>* up(const IdFace& face) const;

  /// Inserts a face whose facets are already present. No-op if present.
  void insert(const IdFace& face);

  /// Inserts a face together with any missing subfaces.
  void insert_closed(const IdFace& face);

  /// Removes a face with no cofaces.
  void erase(const IdFace& face);

  /// -1 for the empty index.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

  const Bucket& of_dim(int dim) const;
  std::size_t count(int dim) const { return of_dim(dim).size(); }
  std::size_t size() const;

  bool operator==(const FaceIndex&) const = default;

 private:
  void trim();

  std::vector<Bucket> by_dim_;
};

/// `face` with `v` inserted in order. `v` must not already be present.
IdFace with_vertex(const IdFace& face, VertexId v);

/// `face` with position `i` removed.
IdFace without_position(const IdFace& face, std::size_t i);

}  // namespace eeh
