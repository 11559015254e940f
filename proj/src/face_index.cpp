#include "eeh/face_index.hpp"

#include <algorithm>
#include <cassert>

namespace eeh {

namespace {
const FaceIndex::Bucket kEmptyBucket;
}

IdFace with_vertex(const IdFace& face, VertexId v) {
  IdFace out;
  out.reserve(face.size() + 1);
  auto pos = std::lower_bound(face.begin(), face.end(), v);
  out.insert(out.end(), face.begin(), pos);
  out.push_back(v);
  out.insert(out.end(), pos, face.end());
  return out;
}

IdFace without_position(const IdFace& face, std::size_t i) {
  IdFace out;
  out.reserve(face.size() - 1);
  for (std::size_t k = 0; k < face.size(); ++k) {
    if (k != i) out.push_back(face[k]);
  }
  return out;
}

bool FaceIndex::contains(const IdFace& face) const {
  if (face.empty()) return false;
  const auto d = face.size() - 1;
  return d < by_dim_.size() && by_dim_[d].count(face) > 0;
}

const std::vector<VertexId>* FaceIndex::up(const IdFace& face) const {
  if (face.empty()) return nullptr;
  const auto d = face.size() - 1;
  if (d >= by_dim_.size()) return nullptr;
  auto it = by_dim_[d].find(face);
  return it == by_dim_[d].end() ? nullptr : &it->second;
}

void FaceIndex::insert(const IdFace& face) {
  assert(!face.empty());
  const auto d = face.size() - 1;
  if (by_dim_.size() <= d) by_dim_.resize(d + 1);
  auto [it, inserted] = by_dim_[d].try_emplace(face);
  if (!inserted) return;
  if (d == 0) return;
  for (std::size_t i = 0; i < face.size(); ++i) {
    auto& ups = by_dim_[d - 1][without_position(face, i)];
    ups.insert(std::lower_bound(ups.begin(), ups.end(), face[i]), face[i]);
  }
}

void FaceIndex::insert_closed(const IdFace& face) {
  if (contains(face)) return;
  if (face.size() > 1) {
    for (std::size_t i = 0; i < face.size(); ++i) insert_closed(without_position(face, i));
  }
  insert(face);
}

void FaceIndex::erase(const IdFace& face) {
  const auto d = face.size() - 1;
  assert(d < by_dim_.size());
  auto it = by_dim_[d].find(face);
  assert(it != by_dim_[d].end() && it->second.empty());
  by_dim_[d].erase(it);
  if (d > 0) {
    for (std::size_t i = 0; i < face.size(); ++i) {
      auto facet = by_dim_[d - 1].find(without_position(face, i));
      assert(facet != by_dim_[d - 1].end());
      auto& ups = facet->second;
      auto pos = std::lower_bound(ups.begin(), ups.end(), face[i]);
      assert(pos != ups.end() && *pos == face[i]);
      ups.erase(pos);
    }
  }
  trim();
}

const FaceIndex::Bucket& FaceIndex::of_dim(int dim) const {
  if (dim < 0 || static_cast<std::size_t>(dim) >= by_dim_.size()) return kEmptyBucket;
  return by_dim_[static_cast<std::size_t>(dim)];
}

std::size_t FaceIndex::size() const {
  std::size_t n = 0;
  for (const auto& b : by_dim_) n += b.size();
  return n;
}

void FaceIndex::trim() {
  while (!by_dim_.empty() && by_dim_.back().empty()) by_dim_.pop_back();
}

}  // namespace eeh
