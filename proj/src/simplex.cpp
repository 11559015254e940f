#include "eeh/simplex.hpp"

#include <algorithm>

#include "eeh/errors.hpp"

namespace eeh {

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return u <= 0x20 || u == 0x7f;
  });
}

Simplex::Simplex(std::vector<VertexLabel> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw FormatError("simplex must have at least one vertex");
  for (const auto& v : vertices_) {
    if (!is_valid_label(v)) throw FormatError("invalid vertex label '" + v + "'");
  }
  std::sort(vertices_.begin(), vertices_.end());
  auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
  if (dup != vertices_.end()) throw FormatError("repeated vertex '" + *dup + "' in simplex");
}

Simplex::Simplex(std::initializer_list<std::string_view> vertices)
    : Simplex(std::vector<VertexLabel>(vertices.begin(), vertices.end())) {}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

bool Simplex::contains(std::string_view vertex) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), vertex);
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
    std::vector<VertexLabel> rest;
    rest.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i != skip) rest.push_back(vertices_[i]);
    }
    out.emplace_back(std::move(rest));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Simplex::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ',';
    s += vertices_[i];
  }
  s += '}';
  return s;
}

}  // namespace eeh
