#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "search_internal.hpp"

namespace eeh {

namespace detail {
namespace {

class Ordered {
 public:
  Ordered(const Complex& complex, const SearchConfig& config)
      : config_(config), work_(complex), counter_(config.node_limit) {
    forbidden_ = forbidden_ids(work_, config.forbidden_edges);
  }

  HeightResult run() {
    HeightResult result;
    try {
      if (expand(config_.budget)) finish(result, work_, path_);
    } catch (const NodeLimitReached&) {
      result.decided = Verdict::exhausted;
    }
    result.nodes_explored = counter_.count();
    return result;
  }

 private:
  // Expansions first; every prefix is also tried as the full expansion part.
  bool expand(int budget) {
    counter_.tick();
    auto key = work_.state_key();
    if (auto it = failed_.find(key); it != failed_.end() && it->second >= budget) return false;
    if (collapse_high()) return true;
    if (budget > 0) {
      for (const auto& p : legal_expansions(work_.index(), config_)) {
        work_.expand_in_place(p.face, p.coface);
        path_.push_back({MoveKind::expansion, p});
        if (expand(budget - 1)) return true;
        path_.pop_back();
        work_.collapse_in_place(p.face, p.coface);
      }
    }
    auto& best = failed_[std::move(key)];
    best = std::max(best, budget);
    return false;
  }

  // Collapses above dimension 2, top dimension first, then greedy erasure.
  bool collapse_high() {
    counter_.tick();
    const int d = work_.dimension();
    if (d <= 2) {
      const auto done = greedy_collapse(work_, [this](const IdPair& p) { return !forbidden_.count(p.face); });
      if (work_.dimension() <= 1) {
        for (const auto& p : done) path_.push_back({MoveKind::collapse, p});
        return true;
      }
      undo_collapses(work_, done);
      return false;
    }
    auto key = work_.state_key();
    if (stuck_.count(key)) return false;
    for (const auto& p : free_pairs(work_.index(), d)) {
      work_.collapse_in_place(p.face, p.coface);
      path_.push_back({MoveKind::collapse, p});
      if (collapse_high()) return true;
      path_.pop_back();
      work_.expand_in_place(p.face, p.coface);
    }
    stuck_.insert(std::move(key));
    return false;
  }

  const SearchConfig& config_;
  Complex work_;
  NodeCounter counter_;
  std::set<IdFace> forbidden_;
  std::vector<IdMove> path_;
  std::unordered_map<std::string, int> failed_;
  std::unordered_set<std::string> stuck_;
};

}  // namespace
}  // namespace detail

HeightResult ordered_height(const Complex& complex, const SearchConfig& config) {
  detail::require_searchable(complex, config);
  return detail::Ordered(complex, config).run();
}

}  // namespace eeh
