#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eeh/face_index.hpp"
#include "eeh/simplex.hpp"

namespace eeh {

/// A finite abstract simplicial complex, stored as its full face set with a
/// coface index. Values are immutable through the public label-level API;
/// the in-place move primitives exist for search code that owns a private
/// working copy.
class Complex {
 public:
  /// The empty complex.
  Complex() = default;

  /// Downward closure of `facets`. The facets need not be maximal.
  static Complex from_facets(std::span<const Simplex> facets);
  static Complex from_facets(std::initializer_list<Simplex> facets);

  bool contains(const Simplex& face) const;
  bool empty() const { return index_.size() == 0; }

  /// -1 for the empty complex.
  int dimension() const { return index_.dimension(); }

  /// Face counts per dimension, starting at vertices.
  std::vector<std::size_t> f_vector() const;
  std::size_t num_faces() const { return index_.size(); }

  std::vector<Simplex> faces() const;
  std::vector<Simplex> faces(int dim) const;
  std::vector<Simplex> facets() const;
  std::vector<VertexLabel> vertices() const;

  /// Faces one dimension up that contain `face`, sorted.
  std::vector<Simplex> cofaces(const Simplex& face) const;

  bool operator==(const Complex& other) const;

  // Indexed layer. Vertex ids index into labels(), which is sorted; the
  // table may keep labels of vertices that were collapsed away.

  const std::vector<VertexLabel>& labels() const { return labels_; }
  const FaceIndex& index() const { return index_; }

  /// nullopt if some label is not in the table.
  std::optional<IdFace> ids_of(const Simplex& face) const;
  Simplex simplex_of(const IdFace& face) const;

  /// Unchecked moves; the caller guarantees validity and that no new vertex
  /// label is involved.
  void collapse_in_place(const IdFace& free_face, const IdFace& coface);
  void expand_in_place(const IdFace& free_face, const IdFace& coface);

  /// Compact byte key of the face set, valid for comparing complexes that
  /// share a label table.
  std::string state_key() const;

 private:
  std::vector<VertexLabel> labels_;
  FaceIndex index_;
};

enum class MoveKind { collapse, expansion };

/// An elementary collapse (free_face removed with its unique coface) or
/// expansion (both added).
struct Move {
  MoveKind kind = MoveKind::collapse;
  Simplex free_face;
  Simplex coface;

  static Move collapse(Simplex free_face, Simplex coface);
  static Move expansion(Simplex free_face, Simplex coface);

  /// Dimension of the coface.
  int dimension() const { return coface.dimension(); }
  std::string to_string() const;

  auto operator<=>(const Move& other) const {
    if (auto c = free_face <=> other.free_face; c != 0) return c;
    if (auto c = coface <=> other.coface; c != 0) return c;
    return kind <=> other.kind;
  }
  bool operator==(const Move&) const = default;
};

using MoveSequence = std::vector<Move>;

/// A free face together with its unique coface.
struct FreeFace {
  Simplex face;
  Simplex coface;

  Move as_collapse() const { return Move::collapse(face, coface); }
  auto operator<=>(const FreeFace&) const = default;
  bool operator==(const FreeFace&) const = default;
};

/// (dim-1)-faces with exactly one dim-dimensional coface, sorted by face.
std::vector<FreeFace> free_faces(const Complex& complex, int dim);

/// Expansions whose coface has dimension `dim` over the current vertex set,
/// sorted. Requires dim >= 2; vertex-adding 1-expansions are not listed.
std::vector<Move> available_expansions(const Complex& complex, int dim);

/// Each of these throws InvalidMove naming the violated precondition.
Complex apply_collapse(const Complex& complex, const Move& move);
Complex apply_expansion(const Complex& complex, const Move& move);
Complex apply_move(const Complex& complex, const Move& move);

/// Describes why `move` is illegal in `complex`; nullopt when legal.
std::optional<std::string> move_violation(const Complex& complex, const Move& move);

/// Stable byte string, equal exactly for equal face sets.
std::string canonical_key(const Complex& complex);

/// All faces containing `v`, together with their faces.
Complex star(const Complex& complex, const VertexLabel& v);

/// All faces whose vertices lie in `vertices`.
Complex induced_subcomplex(const Complex& complex, std::span<const VertexLabel> vertices);

/// Alternating sum of the f-vector.
long euler_characteristic(const Complex& complex);

/// Dimension at most one (the empty complex included).
bool is_one_dimensional(const Complex& complex);

/// Every nonempty proper subset of every face is a face.
bool is_closed(const Complex& complex);

}  // namespace eeh
