// Aut(Q)-orbits on representative indices: the flip acts on unordered vertex
// pairs (separable type) and on edges (split type).
#pragma once

#include "msa/maxsub.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace msa {

struct OrbitPartition {
  std::vector<std::vector<RepTag>> blocks;  // sorted blocks of sorted tags
  struct Merge {
    RepTag from, to;
    VertexMap sigma;  // automorphism with sigma(from) = to
  };
  std::vector<Merge> merges;

  const std::vector<RepTag>* block_of(const RepTag& t) const {
    for (const auto& b : blocks) {
      if (std::find(b.begin(), b.end(), t) != b.end()) return &b;
    }
    return nullptr;
  }
  bool same_block(const RepTag& a, const RepTag& b) const {
    const auto* ba = block_of(a);
    return ba && std::find(ba->begin(), ba->end(), b) != ba->end();
  }
};

inline RepTag apply_to_tag(const Quiver& Q, const VertexMap& sigma, const RepTag& tag) {
  auto label_of = [&](int vidx) { return Q.vertices[static_cast<std::size_t>(vidx)].parts.at(0); };
  RepTag out = tag;
  if (tag.kind == RepTag::Kind::Separable) {
    int a = label_of(sigma.vertex[static_cast<std::size_t>(Q.vertex_index(tag.i))]);
    int b = label_of(sigma.vertex[static_cast<std::size_t>(Q.vertex_index(tag.j))]);
    out.i = std::min(a, b);
    out.j = std::max(a, b);
  } else {
    // the split index names an edge: find it, push it through the arrow map
    int found = -1;
    for (const auto& arr : Q.arrows) {
      int lo = std::min(label_of(arr.src), label_of(arr.tgt));
      if (lo == tag.i) found = arr.id;
    }
    if (found < 0) throw std::invalid_argument("split tag does not name an edge");
    const Arrow& img = Q.arrows[static_cast<std::size_t>(sigma.arrow[static_cast<std::size_t>(found)])];
    out.i = std::min(label_of(img.src), label_of(img.tgt));
    out.j = 0;
  }
  return out;
}

inline OrbitPartition orbits(const Quiver& Q, const std::vector<RepTag>& reps) {
  OrbitPartition part;
  std::map<RepTag, std::size_t> pos;
  for (std::size_t k = 0; k < reps.size(); ++k) pos[reps[k]] = k;
  std::vector<std::size_t> parent(reps.size());
  for (std::size_t k = 0; k < reps.size(); ++k) parent[k] = k;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const auto& sigma : aut_group(Q)) {
    if (sigma.is_identity()) continue;
    for (const auto& tag : reps) {
      RepTag img = apply_to_tag(Q, sigma, tag);
      auto it = pos.find(img);
      if (it == pos.end()) throw std::runtime_error("orbit image is not a representative");
      std::size_t a = find(pos[tag]), b = find(it->second);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
        part.merges.push_back({tag, img, sigma});
      }
    }
  }
  std::map<std::size_t, std::vector<RepTag>> by_root;
  for (std::size_t k = 0; k < reps.size(); ++k) by_root[find(k)].push_back(reps[k]);
  for (auto& [root, blk] : by_root) {
    std::sort(blk.begin(), blk.end());
    part.blocks.push_back(std::move(blk));
  }
  std::sort(part.blocks.begin(), part.blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return part;
}

}  // namespace msa
