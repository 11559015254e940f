#include "eeh/complex.hpp"

#include <algorithm>
#include <set>

#include "eeh/detail/enumerate.hpp"
#include "eeh/errors.hpp"

namespace eeh {

// ---------------------------------------------------------------- Complex

Complex Complex::from_facets(std::span<const Simplex> facets) {
  std::set<VertexLabel> all;
  for (const auto& f : facets) {
    if (f.empty()) throw FormatError("facet must have at least one vertex");
    all.insert(f.vertices().begin(), f.vertices().end());
  }
  Complex c;
  c.labels_.assign(all.begin(), all.end());
  for (const auto& f : facets) c.index_.insert_closed(*c.ids_of(f));
  return c;
}

Complex Complex::from_facets(std::initializer_list<Simplex> facets) {
  return from_facets(std::span<const Simplex>(facets.begin(), facets.size()));
}

bool Complex::contains(const Simplex& face) const {
  auto ids = ids_of(face);
  return ids && index_.contains(*ids);
}

std::vector<std::size_t> Complex::f_vector() const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= dimension(); ++d) out.push_back(index_.count(d));
  return out;
}

std::vector<Simplex> Complex::faces() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d) {
    for (const auto& [f, ups] : index_.of_dim(d)) out.push_back(simplex_of(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> Complex::faces(int dim) const {
  std::vector<Simplex> out;
  for (const auto& [f, ups] : index_.of_dim(dim)) out.push_back(simplex_of(f));
  return out;
}

std::vector<Simplex> Complex::facets() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d) {
    for (const auto& [f, ups] : index_.of_dim(d)) {
      if (ups.empty()) out.push_back(simplex_of(f));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexLabel> Complex::vertices() const {
  std::vector<VertexLabel> out;
  for (const auto& [f, ups] : index_.of_dim(0)) out.push_back(labels_[f.front()]);
  return out;
}

std::vector<Simplex> Complex::cofaces(const Simplex& face) const {
  std::vector<Simplex> out;
  auto ids = ids_of(face);
  if (!ids) return out;
  if (const auto* ups = index_.up(*ids)) {
    for (VertexId v : *ups) out.push_back(simplex_of(with_vertex(*ids, v)));
  }
  return out;
}

bool Complex::operator==(const Complex& other) const {
  if (labels_ == other.labels_) return index_ == other.index_;
  return canonical_key(*this) == canonical_key(other);
}

std::optional<IdFace> Complex::ids_of(const Simplex& face) const {
  IdFace ids;
  ids.reserve(face.size());
  for (const auto& v : face.vertices()) {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v) return std::nullopt;
    ids.push_back(static_cast<VertexId>(it - labels_.begin()));
  }
  return ids;  // already ascending: labels are sorted and so is the simplex
}

Simplex Complex::simplex_of(const IdFace& face) const {
  std::vector<VertexLabel> vs;
  vs.reserve(face.size());
  for (VertexId v : face) vs.push_back(labels_[v]);
  return Simplex(std::move(vs));
}

void Complex::collapse_in_place(const IdFace& free_face, const IdFace& coface) {
  index_.erase(coface);
  index_.erase(free_face);
}

void Complex::expand_in_place(const IdFace& free_face, const IdFace& coface) {
  index_.insert(free_face);
  index_.insert(coface);
}

std::string Complex::state_key() const {
  const bool wide = labels_.size() > 0xffff;
  std::string key;
  for (int d = 0; d <= dimension(); ++d) {
    for (const auto& [f, ups] : index_.of_dim(d)) {
      if (!ups.empty()) continue;
      key.push_back(static_cast<char>(f.size()));
      for (VertexId v : f) {
        key.push_back(static_cast<char>(v & 0xff));
        key.push_back(static_cast<char>((v >> 8) & 0xff));
        if (wide) {
          key.push_back(static_cast<char>((v >> 16) & 0xff));
          key.push_back(static_cast<char>((v >> 24) & 0xff));
        }
      }
    }
  }
  return key;
}

// ------------------------------------------------------------------- Move

Move Move::collapse(Simplex free_face, Simplex coface) {
  return Move{MoveKind::collapse, std::move(free_face), std::move(coface)};
}

Move Move::expansion(Simplex free_face, Simplex coface) {
  return Move{MoveKind::expansion, std::move(free_face), std::move(coface)};
}

std::string Move::to_string() const {
  const char* arrow = kind == MoveKind::collapse ? " collapse " : " expand ";
  return "(" + free_face.to_string() + arrow + coface.to_string() + ")";
}

// ------------------------------------------------------------- operations

std::vector<FreeFace> free_faces(const Complex& complex, int dim) {
  std::vector<FreeFace> out;
  for (const auto& p : detail::free_pairs(complex.index(), dim)) {
    out.push_back({complex.simplex_of(p.face), complex.simplex_of(p.coface)});
  }
  return out;
}

std::vector<Move> available_expansions(const Complex& complex, int dim) {
  if (dim < 2) {
    throw std::invalid_argument("available_expansions lists dimensions >= 2 only");
  }
  std::vector<Move> out;
  for (const auto& p : detail::horn_pairs(complex.index(), dim)) {
    out.push_back(Move::expansion(complex.simplex_of(p.face), complex.simplex_of(p.coface)));
  }
  return out;
}

namespace {

std::optional<std::string> shape_violation(const Move& move) {
  if (move.free_face.empty() || move.coface.empty()) return "move faces must be nonempty";
  if (move.coface.dimension() != move.free_face.dimension() + 1 ||
      !move.free_face.is_face_of(move.coface)) {
    return "free face " + move.free_face.to_string() + " is not a facet of " +
           move.coface.to_string();
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> move_violation(const Complex& complex, const Move& move) {
  if (auto bad = shape_violation(move)) return bad;
  const auto& sigma = move.free_face;
  const auto& tau = move.coface;
  if (move.kind == MoveKind::collapse) {
    if (!complex.contains(sigma)) return "free face " + sigma.to_string() + " is not in the complex";
    if (!complex.contains(tau)) return "coface " + tau.to_string() + " is not in the complex";
    const auto n = complex.cofaces(sigma).size();
    if (n != 1) {
      return "face " + sigma.to_string() + " is not free: it has " + std::to_string(n) +
             " cofaces";
    }
    return std::nullopt;
  }
  if (complex.contains(sigma)) return "free face " + sigma.to_string() + " is already present";
  if (complex.contains(tau)) return "coface " + tau.to_string() + " is already present";
  if (tau.dimension() == 0) return "cannot expand into a vertex";
  for (const auto& facet : tau.facets()) {
    if (facet != sigma && !complex.contains(facet)) {
      return "horn incomplete: " + facet.to_string() + " is missing";
    }
  }
  return std::nullopt;
}

Complex apply_collapse(const Complex& complex, const Move& move) {
  if (move.kind != MoveKind::collapse) throw InvalidMove("expected a collapse, got an expansion");
  if (auto bad = move_violation(complex, move)) {
    throw InvalidMove("collapse " + move.to_string() + ": " + *bad);
  }
  Complex out = complex;
  out.collapse_in_place(*complex.ids_of(move.free_face), *complex.ids_of(move.coface));
  return out;
}

Complex apply_expansion(const Complex& complex, const Move& move) {
  if (move.kind != MoveKind::expansion) throw InvalidMove("expected an expansion, got a collapse");
  if (auto bad = move_violation(complex, move)) {
    throw InvalidMove("expansion " + move.to_string() + ": " + *bad);
  }
  auto sigma = complex.ids_of(move.free_face);
  auto tau = complex.ids_of(move.coface);
  if (sigma && tau) {
    Complex out = complex;
    out.expand_in_place(*sigma, *tau);
    return out;
  }
  // A 1-expansion brings a new vertex; rebuild with an extended label table.
  auto facets = complex.facets();
  facets.push_back(move.coface);
  return Complex::from_facets(facets);
}

Complex apply_move(const Complex& complex, const Move& move) {
  return move.kind == MoveKind::collapse ? apply_collapse(complex, move)
                                         : apply_expansion(complex, move);
}

std::string canonical_key(const Complex& complex) {
  std::string key;
  for (const auto& f : complex.facets()) {
    if (!key.empty()) key.push_back('\x1e');
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) key.push_back('\x1f');
      key += f.vertices()[i];
    }
  }
  return key;
}

Complex star(const Complex& complex, const VertexLabel& v) {
  if (!complex.contains(Simplex{v})) throw FormatError("unknown vertex '" + v + "'");
  std::vector<Simplex> kept;
  for (const auto& f : complex.facets()) {
    if (f.contains(v)) kept.push_back(f);
  }
  return Complex::from_facets(kept);
}

Complex induced_subcomplex(const Complex& complex, std::span<const VertexLabel> vertices) {
  std::set<VertexLabel> w(vertices.begin(), vertices.end());
  for (const auto& v : w) {
    if (!complex.contains(Simplex{v})) throw FormatError("unknown vertex '" + v + "'");
  }
  std::vector<Simplex> kept;
  for (const auto& f : complex.faces()) {
    if (std::all_of(f.vertices().begin(), f.vertices().end(),
                    [&](const auto& x) { return w.count(x) > 0; })) {
      kept.push_back(f);
    }
  }
  return Complex::from_facets(kept);
}

long euler_characteristic(const Complex& complex) {
  long chi = 0;
  long sign = 1;
  for (auto n : complex.f_vector()) {
    chi += sign * static_cast<long>(n);
    sign = -sign;
  }
  return chi;
}

bool is_one_dimensional(const Complex& complex) { return complex.dimension() <= 1; }

bool is_closed(const Complex& complex) {
  const auto& idx = complex.index();
  for (int d = 1; d <= idx.dimension(); ++d) {
    for (const auto& [f, ups] : idx.of_dim(d)) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        const auto* facet_ups = idx.up(without_position(f, i));
        if (facet_ups == nullptr) return false;
        if (!std::binary_search(facet_ups->begin(), facet_ups->end(), f[i])) return false;
      }
    }
  }
  // Every recorded coface must exist.
  for (int d = 0; d <= idx.dimension(); ++d) {
    for (const auto& [f, ups] : idx.of_dim(d)) {
      for (VertexId v : ups) {
        if (!idx.contains(with_vertex(f, v))) return false;
      }
    }
  }
  return true;
}

}  // namespace eeh
