#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "eeh/complex.hpp"

namespace eeh {

enum class Strategy {
  interleaved_dfs,  ///< DFS over interleaved moves with eager safe 2-collapses
  prescribed,       ///< guessed prescribed moves, greedy valid 2-collapses between them
};

enum class Verdict { yes, no_within_budget, exhausted };

std::string to_string(Verdict v);

struct SearchConfig {
  int budget = 0;
  bool ordered = false;
  /// Dimensions of the coface of allowed expansions; each in [2, max_dim].
  std::set<int> expansion_dims{2, 3};
  /// No face above this dimension is ever created.
  int max_dim = 3;
  /// Edges that may not act as the free face of a 2-collapse.
  std::set<Simplex> forbidden_edges;
  Strategy strategy = Strategy::interleaved_dfs;
  /// Search nodes (or machine runs) before giving up with `exhausted`.
  std::uint64_t node_limit = 5'000'000;

  /// Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
};

struct HeightResult {
  Verdict decided = Verdict::no_within_budget;
  MoveSequence certificate;  ///< nonempty only when decided == yes (or trivial)
  int expansions_used = 0;
  std::uint64_t nodes_explored = 0;
};

struct GreedyResult {
  Complex complex;
  MoveSequence moves;
};

/// Repeatedly performs the lexicographically least 2-collapse whose free
/// edge is not in `forbidden` until none is left. With nothing forbidden the
/// result has no triangles exactly when the input collapses to a 1-complex.
GreedyResult greedy_erase(const Complex& complex, const std::set<Simplex>& forbidden = {});

/// Greedy 2-collapsing reaches dimension <= 1.
bool is_erasable(const Complex& complex);

/// All expansions first, then collapses of dimension > 2 from the top
/// dimension down, then a greedy erasability check. Complete over the
/// configured expansion universe. Meant for complexes of dimension <= 2; throws
/// std::invalid_argument above max_dim.
HeightResult ordered_height(const Complex& complex, const SearchConfig& config);

/// Collapses and expansions in any order, using config.strategy. Same
/// input requirements as ordered_height.
HeightResult unordered_height(const Complex& complex, const SearchConfig& config);

/// Dispatches on config.ordered.
HeightResult expansion_height(const Complex& complex, const SearchConfig& config);

/// The search restricted to 3-expansions (and no face above dimension 3).
HeightResult three_expansion_height(const Complex& complex, int budget, bool ordered,
                                    std::uint64_t node_limit = 5'000'000);

struct MinimalHeight {
  std::optional<int> height;  ///< least budget answered yes, if any up to the cap
  bool exhausted = false;     ///< some budget hit the node limit first
  HeightResult result;        ///< the search at `height` (or the last one run)
};

/// Runs the configured search at budgets 0, 1, ..., max_budget.
MinimalHeight minimal_height(const Complex& complex, SearchConfig config, int max_budget);

struct Verification {
  bool accepted = false;
  std::optional<std::size_t> failed_index;  ///< first offending move
  std::string reason;
  int expansions = 0;
  std::optional<Complex> final_complex;  ///< set when every move replayed
};

/// Replays `certificate` with full validity checks. Accepts iff every move
/// is legal, at most `budget` moves are expansions, and the final complex
/// has dimension <= 1.
Verification verify_certificate(const Complex& complex, const MoveSequence& certificate,
                                int budget);

}  // namespace eeh
