#include <algorithm>
#include <stdexcept>

#include "eeh/errors.hpp"
#include "search_internal.hpp"

namespace eeh {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no_within_budget:
      return "no";
    case Verdict::exhausted:
      return "exhausted";
  }
  return "?";
}

void SearchConfig::validate() const {
  if (budget < 0) throw std::invalid_argument("budget must be nonnegative");
  if (max_dim < 2) throw std::invalid_argument("max_dim must be at least 2");
  for (int d : expansion_dims) {
    if (d < 2 || d > max_dim) {
      throw std::invalid_argument("expansion dimension " + std::to_string(d) +
                                  " outside [2, max_dim]");
    }
  }
  for (const auto& e : forbidden_edges) {
    if (e.dimension() != 1) throw std::invalid_argument("forbidden face " + e.to_string() + " is not an edge");
  }
}

namespace detail {

std::set<IdFace> forbidden_ids(const Complex& complex, const std::set<Simplex>& forbidden) {
  std::set<IdFace> out;
  for (const auto& e : forbidden) {
    if (auto ids = complex.ids_of(e)) out.insert(*ids);
  }
  return out;
}

std::vector<IdPair> greedy_collapse(Complex& work,
                                    const std::function<bool(const IdPair&)>& allowed) {
  std::vector<IdPair> done;
  const auto pair_of = [&work](const IdFace& edge) -> std::optional<IdPair> {
    const auto* ups = work.index().up(edge);
    if (ups == nullptr || ups->size() != 1) return std::nullopt;
    return IdPair{edge, with_vertex(edge, ups->front())};
  };
  std::set<IdFace> queue;
  for (const auto& [edge, ups] : work.index().of_dim(1)) {
    if (ups.size() == 1) queue.insert(edge);
  }
  while (!queue.empty()) {
    IdFace edge = *queue.begin();
    queue.erase(queue.begin());
    auto pair = pair_of(edge);
    if (!pair || !allowed(*pair)) continue;
    // A triangle with a free edge has no coface, so the collapse is legal.
    work.collapse_in_place(pair->face, pair->coface);
    const auto& tri = pair->coface;
    for (std::size_t i = 0; i < tri.size(); ++i) {
      IdFace other = without_position(tri, i);
      if (other != pair->face && pair_of(other)) queue.insert(std::move(other));
    }
    done.push_back(std::move(*pair));
  }
  return done;
}

void undo_collapses(Complex& work, const std::vector<IdPair>& done) {
  for (auto it = done.rbegin(); it != done.rend(); ++it) work.expand_in_place(it->face, it->coface);
}

MoveSequence to_moves(const Complex& complex, const std::vector<IdMove>& path) {
  MoveSequence out;
  out.reserve(path.size());
  for (const auto& m : path) {
    out.push_back(Move{m.kind, complex.simplex_of(m.pair.face), complex.simplex_of(m.pair.coface)});
  }
  return out;
}

std::vector<IdPair> potential_expansions(const FaceIndex& index, const SearchConfig& config,
                                         int budget) {
  if (budget <= 0) return {};
  FaceIndex reach = index;
  std::vector<IdPair> found;
  for (int round = 0; round < budget; ++round) {
    found.clear();
    for (int d : config.expansion_dims) {
      auto pairs = horn_pairs(reach, d, /*relaxed=*/true);
      found.insert(found.end(), pairs.begin(), pairs.end());
    }
    if (round + 1 == budget) break;
    const auto before = reach.size();
    for (const auto& p : found) {
      reach.insert_closed(p.face);
      reach.insert_closed(p.coface);
    }
    if (reach.size() == before) break;
  }
  return found;
}

std::vector<IdPair> legal_expansions(const FaceIndex& index, const SearchConfig& config) {
  std::vector<IdPair> out;
  for (auto it = config.expansion_dims.rbegin(); it != config.expansion_dims.rend(); ++it) {
    auto pairs = horn_pairs(index, *it);
    out.insert(out.end(), pairs.begin(), pairs.end());
  }
  return out;
}

void finish(HeightResult& result, const Complex& work, const std::vector<IdMove>& path) {
  result.decided = Verdict::yes;
  result.certificate = to_moves(work, path);
  result.expansions_used = static_cast<int>(
      std::count_if(path.begin(), path.end(), [](const IdMove& m) { return m.kind == MoveKind::expansion; }));
}

void require_searchable(const Complex& complex, const SearchConfig& config) {
  config.validate();
  if (complex.dimension() > config.max_dim) {
    throw std::invalid_argument("complex dimension " + std::to_string(complex.dimension()) +
                                " exceeds max_dim " + std::to_string(config.max_dim));
  }
}

}  // namespace detail

GreedyResult greedy_erase(const Complex& complex, const std::set<Simplex>& forbidden) {
  Complex work = complex;
  const auto barred = detail::forbidden_ids(work, forbidden);
  const auto done = detail::greedy_collapse(
      work, [&barred](const detail::IdPair& p) { return barred.count(p.face) == 0; });
  MoveSequence moves;
  moves.reserve(done.size());
  for (const auto& p : done) {
    moves.push_back(Move::collapse(work.simplex_of(p.face), work.simplex_of(p.coface)));
  }
  return {std::move(work), std::move(moves)};
}

bool is_erasable(const Complex& complex) {
  return greedy_erase(complex).complex.dimension() <= 1;
}

HeightResult unordered_height(const Complex& complex, const SearchConfig& config) {
  if (config.strategy == Strategy::prescribed) return detail::prescribed_height(complex, config);
  return detail::interleaved_height(complex, config);
}

HeightResult expansion_height(const Complex& complex, const SearchConfig& config) {
  return config.ordered ? ordered_height(complex, config) : unordered_height(complex, config);
}

HeightResult three_expansion_height(const Complex& complex, int budget, bool ordered,
                                    std::uint64_t node_limit) {
  SearchConfig cfg;
  cfg.budget = budget;
  cfg.ordered = ordered;
  cfg.expansion_dims = {3};
  cfg.max_dim = 3;
  cfg.node_limit = node_limit;
  return expansion_height(complex, cfg);
}

MinimalHeight minimal_height(const Complex& complex, SearchConfig config, int max_budget) {
  MinimalHeight out;
  for (int p = 0; p <= max_budget; ++p) {
    config.budget = p;
    out.result = expansion_height(complex, config);
    if (out.result.decided == Verdict::yes) {
      out.height = p;
      return out;
    }
    if (out.result.decided == Verdict::exhausted) {
      out.exhausted = true;
      return out;
    }
  }
  return out;
}

Verification verify_certificate(const Complex& complex, const MoveSequence& certificate,
                                int budget) {
  Verification v;
  Complex current = complex;
  for (std::size_t i = 0; i < certificate.size(); ++i) {
    const auto& move = certificate[i];
    if (move.kind == MoveKind::expansion && ++v.expansions > budget) {
      v.failed_index = i;
      v.reason = "expansion budget of " + std::to_string(budget) + " exceeded";
      return v;
    }
    if (auto bad = move_violation(current, move)) {
      v.failed_index = i;
      v.reason = *bad;
      return v;
    }
    current = apply_move(current, move);
  }
  if (current.dimension() > 1) {
    v.reason = "final complex has dimension " + std::to_string(current.dimension());
    v.final_complex = std::move(current);
    return v;
  }
  v.accepted = true;
  v.final_complex = std::move(current);
  return v;
}

}  // namespace eeh
