#include <algorithm>
#include <unordered_map>

#include "search_internal.hpp"

namespace eeh::detail {

namespace {

/// Faces and edges that some expansion reachable within the budget could
/// still need. A 2-collapse touching none of them can be done right away:
/// any solution that keeps the triangle replays with the collapse moved to
/// the front.
struct Protection {
  std::set<IdFace> triangles;    // horn triangles of candidate cofaces
  std::set<IdFace> edges;        // horn edges of candidate 2-expansions
  std::set<IdFace> added_edges;  // edges a candidate 2-expansion would add

  explicit Protection(const std::vector<IdPair>& candidates) {
    for (const auto& [sigma, tau] : candidates) {
      if (tau.size() == 3) {
        triangles.insert(tau);
        added_edges.insert(sigma);
      }
      for (std::size_t i = 0; i < tau.size(); ++i) {
        IdFace facet = without_position(tau, i);
        if (facet == sigma) continue;
        if (facet.size() == 3) triangles.insert(facet);
        if (facet.size() == 2) edges.insert(facet);
      }
    }
  }

  bool covers(const IdPair& p) const {
    if (triangles.count(p.coface) || edges.count(p.face)) return true;
    for (std::size_t i = 0; i < p.coface.size(); ++i) {
      if (added_edges.count(without_position(p.coface, i))) return true;
    }
    return false;
  }
};

class Interleaved {
 public:
  Interleaved(const Complex& complex, const SearchConfig& config)
      : config_(config), work_(complex), counter_(config.node_limit) {
    forbidden_ = forbidden_ids(work_, config.forbidden_edges);
  }

  HeightResult run() {
    HeightResult result;
    try {
      if (dfs(config_.budget)) finish(result, work_, path_);
    } catch (const NodeLimitReached&) {
      result.decided = Verdict::exhausted;
    }
    result.nodes_explored = counter_.count();
    return result;
  }

 private:
  bool allowed(const IdPair& p) const { return p.face.size() != 2 || !forbidden_.count(p.face); }

  bool dfs(int budget) {
    counter_.tick();
    const Protection guard(potential_expansions(work_.index(), config_, budget));
    const auto eager = greedy_collapse(
        work_, [&](const IdPair& p) { return allowed(p) && !guard.covers(p); });
    for (const auto& p : eager) path_.push_back({MoveKind::collapse, p});
    if (work_.dimension() <= 1) return true;

    auto key = work_.state_key();
    if (auto it = failed_.find(key); it != failed_.end() && it->second >= budget) {
      rewind(eager);
      return false;
    }

    for (int d = work_.dimension(); d >= 2; --d) {
      for (const auto& p : free_pairs(work_.index(), d)) {
        if (!allowed(p)) continue;
        if (step(MoveKind::collapse, p, budget)) return true;
      }
    }
    if (budget > 0) {
      for (const auto& p : legal_expansions(work_.index(), config_)) {
        if (step(MoveKind::expansion, p, budget - 1)) return true;
      }
    }

    auto& best = failed_[std::move(key)];
    best = std::max(best, budget);
    rewind(eager);
    return false;
  }

  bool step(MoveKind kind, const IdPair& p, int budget) {
    if (kind == MoveKind::collapse) {
      work_.collapse_in_place(p.face, p.coface);
    } else {
      work_.expand_in_place(p.face, p.coface);
    }
    path_.push_back({kind, p});
    if (dfs(budget)) return true;
    path_.pop_back();
    if (kind == MoveKind::collapse) {
      work_.expand_in_place(p.face, p.coface);
    } else {
      work_.collapse_in_place(p.face, p.coface);
    }
    return false;
  }

  void rewind(const std::vector<IdPair>& eager) {
    path_.resize(path_.size() - eager.size());
    undo_collapses(work_, eager);
  }

  const SearchConfig& config_;
  Complex work_;
  NodeCounter counter_;
  std::set<IdFace> forbidden_;
  std::vector<IdMove> path_;
  std::unordered_map<std::string, int> failed_;
};

}  // namespace

HeightResult interleaved_height(const Complex& complex, const SearchConfig& config) {
  require_searchable(complex, config);
  return Interleaved(complex, config).run();
}

}  // namespace eeh::detail
