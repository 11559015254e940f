#include "eeh/detail/enumerate.hpp"

#include <algorithm>
#include <set>

namespace eeh::detail {

std::vector<IdPair> free_pairs(const FaceIndex& index, int dim) {
  std::vector<IdPair> out;
  if (dim < 1) return out;
  for (const auto& [face, ups] : index.of_dim(dim - 1)) {
    if (ups.size() == 1) out.push_back({face, with_vertex(face, ups.front())});
  }
  return out;  // bucket order is already lexicographic by face
}

std::vector<IdPair> horn_pairs(const FaceIndex& index, int dim, bool relaxed) {
  std::set<IdPair> found;
  if (dim < 2) return {};
  // Any candidate tau has two present facets rho, rho' meeting in a
  // (dim-2)-face eta, so the apex of rho' shows up in eta's up list.
  std::set<IdFace> seen;
  for (const auto& [rho, rho_ups] : index.of_dim(dim - 1)) {
    for (std::size_t i = 0; i < rho.size(); ++i) {
      const auto* ups = index.up(without_position(rho, i));
      if (ups == nullptr) continue;
      for (VertexId v : *ups) {
        if (std::binary_search(rho.begin(), rho.end(), v)) continue;
        IdFace tau = with_vertex(rho, v);
        if (!seen.insert(tau).second) continue;
        if (!relaxed && index.contains(tau)) continue;
        std::vector<std::size_t> missing;
        for (std::size_t k = 0; k < tau.size() && missing.size() < 2; ++k) {
          if (!index.contains(without_position(tau, k))) missing.push_back(k);
        }
        if (missing.size() == 1) {
          found.insert({without_position(tau, missing.front()), tau});
        } else if (missing.empty() && relaxed) {
          for (std::size_t k = 0; k < tau.size(); ++k) found.insert({without_position(tau, k), tau});
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace eeh::detail
