#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "eeh/complex.hpp"
#include "eeh/detail/enumerate.hpp"
#include "eeh/search.hpp"

namespace eeh::detail {

/// Thrown inside a search when the node budget runs out.
struct NodeLimitReached {};

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (++count_ > limit_) throw NodeLimitReached{};
  }
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t limit_;
  std::uint64_t count_ = 0;
};

struct IdMove {
  MoveKind kind;
  IdPair pair;
};

/// Ids of the configured forbidden edges; edges unknown to the complex are
/// irrelevant and skipped.
std::set<IdFace> forbidden_ids(const Complex& complex, const std::set<Simplex>& forbidden);

/// Performs 2-collapses on `work`, always the lexicographically least free
/// edge whose pair passes `allowed`, until none is left. Returns the
/// collapses in order. `allowed` must depend only on the pair.
std::vector<IdPair> greedy_collapse(Complex& work,
                                    const std::function<bool(const IdPair&)>& allowed);

/// Undoes collapses performed on `work`, last first.
void undo_collapses(Complex& work, const std::vector<IdPair>& done);

MoveSequence to_moves(const Complex& complex, const std::vector<IdMove>& path);

/// Expansion pairs whose horn could be present after at most budget-1 other
/// expansions, ignoring whether sigma or tau are present: an
/// over-approximation of every expansion a sequence with `budget`
/// expansions can perform from `index`.
std::vector<IdPair> potential_expansions(const FaceIndex& index, const SearchConfig& config,
                                         int budget);

void require_searchable(const Complex& complex, const SearchConfig& config);

HeightResult interleaved_height(const Complex& complex, const SearchConfig& config);
HeightResult prescribed_height(const Complex& complex, const SearchConfig& config);

/// Expansions legal right now, dims from `config` descending, each sorted.
std::vector<IdPair> legal_expansions(const FaceIndex& index, const SearchConfig& config);

/// Fills `result` from a successful path; counts expansions.
void finish(HeightResult& result, const Complex& work, const std::vector<IdMove>& path);

}  // namespace eeh::detail
