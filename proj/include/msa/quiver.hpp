// Finite quivers (directed multigraphs with labeled vertices), construction
// from orientation words, and exhaustive isomorphism search.
#pragma once

#include "msa/word.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace msa {

// A vertex label is one or more signed integers; glued vertices carry the
// labels of everything that was fused into them ("-2+-1").
struct VertexLabel {
  std::vector<int> parts;  // sorted

  VertexLabel() = default;
  explicit VertexLabel(int v) : parts{v} {}
  VertexLabel(int a, int b) : parts{a, b} { std::sort(parts.begin(), parts.end()); }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += '+';
      s += std::to_string(parts[i]);
    }
    return s;
  }
  bool operator==(const VertexLabel& o) const { return parts == o.parts; }
  bool operator<(const VertexLabel& o) const { return parts < o.parts; }
};

struct Arrow {
  int id = 0;
  int src = 0;  // vertex index
  int tgt = 0;  // vertex index
  std::string name;
};

struct Quiver {
  std::vector<VertexLabel> vertices;
  std::vector<Arrow> arrows;  // ids equal positions

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }

  int vertex_index(const VertexLabel& lab) const {
    for (int i = 0; i < num_vertices(); ++i) {
      if (vertices[static_cast<std::size_t>(i)] == lab) return i;
    }
    throw std::invalid_argument("no vertex labeled " + lab.str());
  }
  int vertex_index(int lab) const { return vertex_index(VertexLabel(lab)); }

  int in_degree(int v) const {
    int d = 0;
    for (const auto& a : arrows) d += (a.tgt == v);
    return d;
  }
  int out_degree(int v) const {
    int d = 0;
    for (const auto& a : arrows) d += (a.src == v);
    return d;
  }

  bool connected() const {
    if (vertices.empty()) return true;
    std::vector<int> comp(vertices.size());
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
      while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)];
      return x;
    };
    for (const auto& a : arrows) comp[static_cast<std::size_t>(find(a.src))] = find(a.tgt);
    int root = find(0);
    for (int v = 1; v < num_vertices(); ++v) {
      if (find(v) != root) return false;
    }
    return true;
  }

  bool acyclic() const {
    std::vector<int> indeg(vertices.size(), 0);
    for (const auto& a : arrows) ++indeg[static_cast<std::size_t>(a.tgt)];
    std::vector<int> stack;
    for (int v = 0; v < num_vertices(); ++v) {
      if (indeg[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
    }
    int seen = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++seen;
      for (const auto& a : arrows) {
        if (a.src == v && --indeg[static_cast<std::size_t>(a.tgt)] == 0) stack.push_back(a.tgt);
      }
    }
    return seen == num_vertices();
  }

  // Underlying graph is a path: connected, acyclic, max total degree 2,
  // simple arrows.
  bool is_type_a() const {
    if (num_arrows() != num_vertices() - 1) return false;
    if (!connected()) return false;
    std::set<std::pair<int, int>> seen;
    for (const auto& a : arrows) {
      if (a.src == a.tgt) return false;
      auto key = std::minmax(a.src, a.tgt);
      if (!seen.insert(key).second) return false;  // parallel or opposite pair
    }
    for (int v = 0; v < num_vertices(); ++v) {
      if (in_degree(v) + out_degree(v) > 2) return false;
    }
    return true;
  }
};

// A quiver isomorphism: vertex bijection plus a compatible arrow bijection.
struct VertexMap {
  std::vector<int> vertex;  // domain vertex index -> codomain vertex index
  std::vector<int> arrow;   // domain arrow id -> codomain arrow id

  bool is_identity() const {
    for (std::size_t i = 0; i < vertex.size(); ++i) {
      if (vertex[i] != static_cast<int>(i)) return false;
    }
    for (std::size_t i = 0; i < arrow.size(); ++i) {
      if (arrow[i] != static_cast<int>(i)) return false;
    }
    return true;
  }
};

inline Quiver word_to_quiver(const BinaryWord& w) {
  TypeALabels lab = w.labels();
  Quiver q;
  for (int i = 0; i < lab.n(); ++i) q.vertices.emplace_back(lab.label_at(i));
  for (int k = 0; k < w.length(); ++k) {
    Arrow a;
    a.id = k;
    int s = w.at_index(k);
    a.src = (s > 0) ? k : k + 1;
    a.tgt = (s > 0) ? k + 1 : k;
    a.name = "a(" + std::to_string(lab.label_at(k)) + ")";
    q.arrows.push_back(a);
  }
  return q;
}

namespace detail {

// Enumerates, for a fixed vertex bijection, every arrow bijection compatible
// with it. Parallel arrows contribute all matchings.
inline void emit_arrow_matchings(const Quiver& q1, const Quiver& q2, const std::vector<int>& vmap,
                                 std::vector<VertexMap>& out) {
  std::map<std::pair<int, int>, std::vector<int>> groups1, groups2;
  for (const auto& a : q1.arrows) groups1[{a.src, a.tgt}].push_back(a.id);
  for (const auto& a : q2.arrows) {
    groups2[{a.src, a.tgt}].push_back(a.id);
  }
  std::vector<std::pair<std::vector<int>, std::vector<int>>> paired;
  for (const auto& [key, ids] : groups1) {
    auto it = groups2.find({vmap[static_cast<std::size_t>(key.first)],
                            vmap[static_cast<std::size_t>(key.second)]});
    if (it == groups2.end() || it->second.size() != ids.size()) return;
    paired.emplace_back(ids, it->second);
  }
  if (paired.size() != groups2.size()) return;

  std::vector<std::vector<int>> perms(paired.size());
  for (std::size_t g = 0; g < paired.size(); ++g) {
    perms[g].resize(paired[g].second.size());
    std::iota(perms[g].begin(), perms[g].end(), 0);
  }
  // odometer over per-group permutations, lexicographic
  while (true) {
    VertexMap m;
    m.vertex = vmap;
    m.arrow.assign(q1.arrows.size(), -1);
    for (std::size_t g = 0; g < paired.size(); ++g) {
      for (std::size_t k = 0; k < paired[g].first.size(); ++k) {
        m.arrow[static_cast<std::size_t>(paired[g].first[k])] =
            paired[g].second[static_cast<std::size_t>(perms[g][k])];
      }
    }
    out.push_back(std::move(m));
    std::size_t g = paired.size();
    while (g > 0) {
      if (std::next_permutation(perms[g - 1].begin(), perms[g - 1].end())) break;
      // next_permutation reset the group to sorted order; carry on
      --g;
    }
    if (g == 0) break;
  }
}

}  // namespace detail

// All isomorphisms q1 -> q2, in deterministic order. Empty iff the quivers
// are not isomorphic. Backtracking over vertex images with degree pruning;
// fine for the <= 16 vertex quivers this project handles.
inline std::vector<VertexMap> quiver_isomorphisms(const Quiver& q1, const Quiver& q2) {
  std::vector<VertexMap> out;
  if (q1.num_vertices() != q2.num_vertices() || q1.num_arrows() != q2.num_arrows()) return out;
  const int n = q1.num_vertices();
  if (n == 0) {
    out.push_back(VertexMap{});
    return out;
  }

  std::vector<std::pair<int, int>> deg1(static_cast<std::size_t>(n)),
      deg2(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    deg1[static_cast<std::size_t>(v)] = {q1.in_degree(v), q1.out_degree(v)};
    deg2[static_cast<std::size_t>(v)] = {q2.in_degree(v), q2.out_degree(v)};
  }
  // adjacency counts for pruning partial maps
  auto count_arrows = [](const Quiver& q, int u, int v) {
    int c = 0;
    for (const auto& a : q.arrows) c += (a.src == u && a.tgt == v);
    return c;
  };

  std::vector<int> vmap(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  auto backtrack = [&](auto&& self, int v) -> void {
    if (v == n) {
      detail::emit_arrow_matchings(q1, q2, vmap, out);
      return;
    }
    for (int img = 0; img < n; ++img) {
      if (used[static_cast<std::size_t>(img)]) continue;
      if (deg1[static_cast<std::size_t>(v)] != deg2[static_cast<std::size_t>(img)]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        int w = vmap[static_cast<std::size_t>(u)];
        ok = count_arrows(q1, u, v) == count_arrows(q2, w, img) &&
             count_arrows(q1, v, u) == count_arrows(q2, img, w) &&
             count_arrows(q1, v, v) == count_arrows(q2, img, img);
      }
      if (!ok) continue;
      vmap[static_cast<std::size_t>(v)] = img;
      used[static_cast<std::size_t>(img)] = true;
      self(self, v + 1);
      used[static_cast<std::size_t>(img)] = false;
      vmap[static_cast<std::size_t>(v)] = -1;
    }
  };
  backtrack(backtrack, 0);
  return out;
}

inline std::vector<VertexMap> aut_group(const Quiver& q) { return quiver_isomorphisms(q, q); }

inline nlohmann::json quiver_to_json(const Quiver& q) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : q.vertices) j["vertices"].push_back(v.str());
  j["arrows"] = nlohmann::json::array();
  std::vector<Arrow> sorted = q.arrows;
  std::sort(sorted.begin(), sorted.end(), [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  for (const auto& a : sorted) {
    j["arrows"].push_back({{"id", a.id},
                           {"src", q.vertices[static_cast<std::size_t>(a.src)].str()},
                           {"tgt", q.vertices[static_cast<std::size_t>(a.tgt)].str()}});
  }
  return j;
}

inline VertexLabel parse_vertex_label(const std::string& s) {
  VertexLabel lab;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find('+', pos + 1);  // skip a leading sign
    if (next == std::string::npos) next = s.size();
    lab.parts.push_back(std::stoi(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  std::sort(lab.parts.begin(), lab.parts.end());
  return lab;
}

inline Quiver quiver_from_json(const nlohmann::json& j) {
  Quiver q;
  for (const auto& v : j.at("vertices")) q.vertices.push_back(parse_vertex_label(v.get<std::string>()));
  for (const auto& a : j.at("arrows")) {
    Arrow arr;
    arr.id = a.at("id").get<int>();
    arr.src = q.vertex_index(parse_vertex_label(a.at("src").get<std::string>()));
    arr.tgt = q.vertex_index(parse_vertex_label(a.at("tgt").get<std::string>()));
    q.arrows.push_back(arr);
  }
  std::sort(q.arrows.begin(), q.arrows.end(), [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  return q;
}

// Cheap isomorphism-invariant fingerprint used to prune pairwise tests.
inline std::string quiver_invariant_key(const Quiver& q) {
  std::vector<std::string> vsig;
  for (int v = 0; v < q.num_vertices(); ++v) {
    int loops = 0;
    for (const auto& a : q.arrows) loops += (a.src == v && a.tgt == v);
    vsig.push_back(std::to_string(q.in_degree(v)) + "." + std::to_string(q.out_degree(v)) + "." +
                   std::to_string(loops));
  }
  std::sort(vsig.begin(), vsig.end());
  std::vector<std::string> asig;
  for (const auto& a : q.arrows) {
    asig.push_back(std::to_string(q.in_degree(a.src)) + "," + std::to_string(q.out_degree(a.src)) +
                   ">" + std::to_string(q.in_degree(a.tgt)) + "," + std::to_string(q.out_degree(a.tgt)));
  }
  std::sort(asig.begin(), asig.end());
  std::string key = std::to_string(q.num_vertices()) + "|";
  for (const auto& s : vsig) key += s + ";";
  key += "|";
  for (const auto& s : asig) key += s + ";";
  return key;
}

}  // namespace msa
