#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "eeh/complex.hpp"

namespace eeh {

/// The 8-vertex dunce hat on vertices 1..8: f-vector (8,24,17), no free
/// edge, exactly two 3-expansions.
Complex dunce_hat();

/// The 7-vertex modified dunce hat on vertices 1..7: f-vector (7,19,13),
/// unique free edge {1,3}.
Complex modified_dunce_hat();

/// A port gadget built from the modified dunce hat, with its named edges.
struct GadgetHandle {
  Complex complex;
  std::vector<Simplex> f_edges;  ///< free ports f_1..f_m
  std::vector<Simplex> e_edges;  ///< interior ports e_1..e_l
  int m = 0;
  int l = 0;
  std::string prefix;

  /// Label of a base vertex ("2", "x0", "y3", ...) under this gadget's prefix.
  std::string vertex(std::string_view base) const { return prefix + std::string(base); }

  /// The two 3-expansions inherited from the modified dunce hat:
  /// ({2,5,6} up to {x_m,2,5,6}) and ({2,6,7} up to {x_0,2,6,7}).
  std::array<Move, 2> horns() const;
};

/// Builds the gadget with m >= 1 free ports and l >= 0 interior ports.
///
/// Vertex 3 of the modified dunce hat becomes x0 and vertex 1 becomes x{m};
/// the free edge is subdivided into the path x0..x{m} and its triangle fanned
/// from apex 4. For l >= 1 the square 4-5-6-7 is retriangulated around l
/// disks, disk j carrying the port e_j = {y_j, z_j}. Every label is prefixed
/// with `prefix` so that several gadgets can share one label universe.
///
/// Throws std::invalid_argument for m < 1 or l < 0.
GadgetHandle gadget(int m, int l, std::string_view prefix = "");

}  // namespace eeh
