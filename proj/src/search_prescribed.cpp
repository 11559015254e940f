#include <algorithm>
#include <unordered_map>

#include "search_internal.hpp"

namespace eeh::detail {

namespace {

bool subset_of(const IdFace& small, const IdFace& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// Runs the machine for every prescribed list: lexicographic valid
/// 2-collapses, the next prescribed move, and so on, then a final greedy
/// pass. Prescribed lists hold at most `budget` expansions, drawn from the
/// potential expansions, and one collapse above dimension 2 for each face
/// above dimension 2 they create.
class Prescribed {
 public:
  Prescribed(const Complex& complex, const SearchConfig& config)
      : config_(config), start_(complex), counter_(config.node_limit) {
    forbidden_ = forbidden_ids(start_, config.forbidden_edges);
    universe_ = potential_expansions(start_.index(), config, config.budget);
  }

  HeightResult run() {
    HeightResult result;
    try {
      for (int k = 0; k <= config_.budget && result.decided != Verdict::yes; ++k) {
        std::vector<IdMove> list;
        std::vector<IdFace> open;
        if (build(list, open, k)) finish(result, work_, path_);
      }
    } catch (const NodeLimitReached&) {
      result.decided = Verdict::exhausted;
    }
    result.nodes_explored = counter_.count();
    return result;
  }

 private:
  // Extends `list` until it holds exactly `k` expansions and every created
  // face above dimension 2 is consumed by a prescribed collapse.
  bool build(std::vector<IdMove>& list, std::vector<IdFace>& open, int k) {
    const auto expansions = std::count_if(list.begin(), list.end(),
                                          [](const IdMove& m) { return m.kind == MoveKind::expansion; });
    if (expansions == k && open.empty()) return machine(list);
    if (expansions < k) {
      for (const auto& p : universe_) {
        list.push_back({MoveKind::expansion, p});
        const auto before = open.size();
        if (p.face.size() > 3) open.push_back(p.face);
        if (p.coface.size() > 3) open.push_back(p.coface);
        if (build(list, open, k)) return true;
        open.resize(before);
        list.pop_back();
      }
    }
    for (std::size_t i = 0; i < open.size(); ++i) {
      const IdFace beta = open[i];
      for (std::size_t j = 0; j < beta.size(); ++j) {
        const IdFace alpha = without_position(beta, j);
        auto rest = open;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (alpha.size() > 3) {
          auto hit = std::find(rest.begin(), rest.end(), alpha);
          if (hit == rest.end()) continue;
          rest.erase(hit);
        }
        list.push_back({MoveKind::collapse, {alpha, beta}});
        std::swap(open, rest);
        if (build(list, open, k)) return true;
        std::swap(open, rest);
        list.pop_back();
      }
    }
    return false;
  }

  // A face is reserved when the first later prescribed move whose coface
  // contains it does not create it.
  static bool reserved(const IdFace& face, const std::vector<IdMove>& list, std::size_t from) {
    for (std::size_t i = from; i < list.size(); ++i) {
      const auto& [kind, p] = list[i];
      if (!subset_of(face, p.coface)) continue;
      return !(kind == MoveKind::expansion && (p.face == face || p.coface == face));
    }
    return false;
  }

  void greedy(const std::vector<IdMove>& list, std::size_t from) {
    const auto done = greedy_collapse(work_, [&](const IdPair& p) {
      return !forbidden_.count(p.face) && !reserved(p.face, list, from) && !reserved(p.coface, list, from);
    });
    for (const auto& p : done) path_.push_back({MoveKind::collapse, p});
  }

  bool machine(const std::vector<IdMove>& list) {
    counter_.tick();
    work_ = start_;
    path_.clear();
    for (std::size_t i = 0; i < list.size(); ++i) {
      greedy(list, i);
      const auto& [kind, p] = list[i];
      const auto& index = work_.index();
      if (kind == MoveKind::expansion) {
        if (index.contains(p.face) || index.contains(p.coface)) return false;
        for (std::size_t j = 0; j < p.coface.size(); ++j) {
          auto facet = without_position(p.coface, j);
          if (facet != p.face && !index.contains(facet)) return false;
        }
        work_.expand_in_place(p.face, p.coface);
      } else {
        const auto* ups = index.up(p.face);
        if (ups == nullptr || ups->size() != 1 || !index.contains(p.coface)) return false;
        work_.collapse_in_place(p.face, p.coface);
      }
      path_.push_back(list[i]);
    }
    greedy(list, list.size());
    return work_.dimension() <= 1;
  }

  const SearchConfig& config_;
  Complex start_;
  Complex work_;
  NodeCounter counter_;
  std::set<IdFace> forbidden_;
  std::vector<IdPair> universe_;
  std::vector<IdMove> path_;
};

}  // namespace

HeightResult prescribed_height(const Complex& complex, const SearchConfig& config) {
  require_searchable(complex, config);
  return Prescribed(complex, config).run();
}

}  // namespace eeh::detail
