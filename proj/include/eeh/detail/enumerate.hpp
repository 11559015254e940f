#pragma once

#include <compare>
#include <vector>

#include "eeh/face_index.hpp"

namespace eeh::detail {

/// (face, coface) in id space.
struct IdPair {
  IdFace face;
  IdFace coface;
  auto operator<=>(const IdPair&) const = default;
  bool operator==(const IdPair&) const = default;
};

/// Free (dim-1)-faces with their unique dim-coface, sorted.
std::vector<IdPair> free_pairs(const FaceIndex& index, int dim);

/// Pairs (sigma, tau) with dim(tau) = `dim` and every facet of tau other
/// than sigma present, sorted. Without `relaxed`, only legal expansions
/// (sigma and tau absent). With `relaxed`, presence of sigma or tau is
/// ignored, so a fully present boundary yields one pair per facet.
std::vector<IdPair> horn_pairs(const FaceIndex& index, int dim, bool relaxed = false);

}  // namespace eeh::detail
