// Path algebras of acyclic quivers with exact structure constants.
//
// The basis is the set of paths (trivial paths included); the product of two
// basis paths is their concatenation or zero, so the whole multiplication
// table is an index table. Composition is written left to right: p*q walks
// p first, and is nonzero iff target(p) = source(q).
#pragma once

#include "msa/linalg.hpp"
#include "msa/quiver.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace msa {

struct Path {
  int src = 0;               // vertex index
  int tgt = 0;               // vertex index
  std::vector<int> arrows;   // arrow ids, in walking order

  int length() const { return static_cast<int>(arrows.size()); }

  bool operator==(const Path& o) const { return src == o.src && arrows == o.arrows; }
  bool operator<(const Path& o) const {
    if (length() != o.length()) return length() < o.length();
    if (src != o.src) return src < o.src;
    return arrows < o.arrows;
  }
};

class PathAlgebra {
 public:
  // trunc: paths of length >= trunc are deleted (kQ/J^trunc); nullopt = kQ.
  PathAlgebra(Quiver quiver, std::optional<int> trunc = std::nullopt)
      : quiver_(std::move(quiver)), trunc_(trunc) {
    if (!quiver_.acyclic()) throw std::invalid_argument("not acyclic");
    if (trunc_ && *trunc_ < 2) throw std::invalid_argument("truncation exponent must be >= 2");
    enumerate_paths();
    build_table();
  }

  const Quiver& quiver() const { return quiver_; }
  bool hereditary() const { return !trunc_.has_value(); }
  std::optional<int> truncation() const { return trunc_; }

  int dim() const { return static_cast<int>(paths_.size()); }
  const std::vector<Path>& paths() const { return paths_; }
  const Path& path(int i) const { return paths_.at(static_cast<std::size_t>(i)); }
  int max_path_length() const { return paths_.empty() ? 0 : paths_.back().length(); }

  int path_index(const Path& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
  }
  int vertex_path_index(int vertex) const { return vertex_paths_.at(static_cast<std::size_t>(vertex)); }
  int arrow_path_index(int arrow_id) const { return arrow_paths_.at(static_cast<std::size_t>(arrow_id)); }

  // Index of p*q in the basis, or -1 when the product is zero.
  int mult(int p, int q) const {
    return table_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
  }

  // Number of basis paths of length >= r (dim J^r).
  int dim_paths_of_length_at_least(int r) const {
    int c = 0;
    for (const auto& p : paths_) c += (p.length() >= r);
    return c;
  }

  std::string path_str(int i) const {
    const Path& p = paths_.at(static_cast<std::size_t>(i));
    if (p.arrows.empty()) return "e(" + quiver_.vertices[static_cast<std::size_t>(p.src)].str() + ")";
    std::string s;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
      if (k) s += "*";
      const Arrow& a = quiver_.arrows[static_cast<std::size_t>(p.arrows[k])];
      s += a.name.empty() ? ("a" + std::to_string(a.id)) : a.name;
    }
    return s;
  }

  // Image of each basis path under a quiver automorphism/isomorphism, as a
  // permutation of basis indices (defined whenever sigma maps this quiver to
  // the quiver of `other`).
  std::vector<int> path_map(const VertexMap& sigma, const PathAlgebra& other) const {
    std::vector<int> out(paths_.size());
    for (std::size_t i = 0; i < paths_.size(); ++i) {
      Path im;
      im.src = sigma.vertex[static_cast<std::size_t>(paths_[i].src)];
      im.tgt = sigma.vertex[static_cast<std::size_t>(paths_[i].tgt)];
      for (int a : paths_[i].arrows) im.arrows.push_back(sigma.arrow[static_cast<std::size_t>(a)]);
      int idx = other.path_index(im);
      if (idx < 0) throw std::runtime_error("path image missing; map is not an isomorphism");
      out[i] = idx;
    }
    return out;
  }

 private:
  void enumerate_paths() {
    const int nv = quiver_.num_vertices();
    std::vector<Path> frontier;
    for (int v = 0; v < nv; ++v) {
      Path p;
      p.src = p.tgt = v;
      frontier.push_back(p);
    }
    std::vector<Path> all = frontier;
    while (!frontier.empty()) {
      std::vector<Path> next;
      for (const auto& p : frontier) {
        if (trunc_ && p.length() + 1 >= *trunc_) continue;
        for (const auto& a : quiver_.arrows) {
          if (a.src != p.tgt) continue;
          Path q = p;
          q.arrows.push_back(a.id);
          q.tgt = a.tgt;
          next.push_back(q);
        }
      }
      all.insert(all.end(), next.begin(), next.end());
      frontier = std::move(next);
      if (all.size() > 200000) throw std::runtime_error("path explosion");
    }
    std::sort(all.begin(), all.end());
    paths_ = std::move(all);
    for (std::size_t i = 0; i < paths_.size(); ++i) index_[paths_[i]] = static_cast<int>(i);
    vertex_paths_.assign(static_cast<std::size_t>(nv), -1);
    for (int v = 0; v < nv; ++v) {
      Path p;
      p.src = p.tgt = v;
      vertex_paths_[static_cast<std::size_t>(v)] = path_index(p);
    }
    arrow_paths_.assign(quiver_.arrows.size(), -1);
    for (const auto& a : quiver_.arrows) {
      Path p;
      p.src = a.src;
      p.tgt = a.tgt;
      p.arrows = {a.id};
      arrow_paths_[static_cast<std::size_t>(a.id)] = path_index(p);
    }
  }

  void build_table() {
    const std::size_t d = paths_.size();
    table_.assign(d, std::vector<int>(d, -1));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (paths_[i].tgt != paths_[j].src) continue;
        Path pq;
        pq.src = paths_[i].src;
        pq.tgt = paths_[j].tgt;
        pq.arrows = paths_[i].arrows;
        pq.arrows.insert(pq.arrows.end(), paths_[j].arrows.begin(), paths_[j].arrows.end());
        table_[i][j] = path_index(pq);  // -1 when truncated away
      }
    }
  }

  Quiver quiver_;
  std::optional<int> trunc_;
  std::vector<Path> paths_;
  std::map<Path, int> index_;
  std::vector<int> vertex_paths_;
  std::vector<int> arrow_paths_;
  std::vector<std::vector<int>> table_;
};

inline PathAlgebra build_path_algebra(const Quiver& q) { return PathAlgebra(q); }

inline PathAlgebra truncate(const Quiver& q, int n) { return PathAlgebra(q, n); }

// An element of a path algebra: sparse coefficient vector over the path
// basis, kept sorted by index with no explicit zeros.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<std::pair<int, Rational>> terms) : terms_(std::move(terms)) {
    normalize();
  }
  static Element basis(int path_idx, Rational c = Rational(1)) {
    return Element({{path_idx, std::move(c)}});
  }
  static Element zero() { return Element(); }

  const std::vector<std::pair<int, Rational>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Element& operator+=(const Element& o) {
    std::vector<std::pair<int, Rational>> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        merged.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        merged.push_back(o.terms_[j++]);
      } else {
        Rational c = terms_[i].second + o.terms_[j].second;
        if (c != 0) merged.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(merged);
    return *this;
  }

  Element operator+(const Element& o) const {
    Element r = *this;
    r += o;
    return r;
  }

  Element operator*(const Rational& c) const {
    if (c == 0) return Element();
    Element r = *this;
    for (auto& [idx, coef] : r.terms_) coef *= c;
    return r;
  }

  Element operator-(const Element& o) const { return *this + o * Rational(-1); }

  Vec dense(int dim) const {
    Vec v(static_cast<std::size_t>(dim), Rational(0));
    for (const auto& [idx, c] : terms_) v[static_cast<std::size_t>(idx)] = c;
    return v;
  }

  static Element from_dense(const Vec& v) {
    std::vector<std::pair<int, Rational>> t;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) t.emplace_back(static_cast<int>(i), v[i]);
    }
    return Element(std::move(t));
  }

  bool operator==(const Element& o) const { return terms_ == o.terms_; }

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, Rational>> out;
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
        if (out.back().second == 0) out.pop_back();
      } else if (t.second != 0) {
        out.push_back(std::move(t));
      }
    }
    terms_ = std::move(out);
  }

  std::vector<std::pair<int, Rational>> terms_;
};

inline Element multiply(const PathAlgebra& B, const Element& x, const Element& y) {
  std::vector<std::pair<int, Rational>> acc;
  for (const auto& [i, a] : x.terms()) {
    for (const auto& [j, b] : y.terms()) {
      int k = B.mult(i, j);
      if (k >= 0) acc.emplace_back(k, a * b);
    }
  }
  return Element(std::move(acc));
}

inline Element unit_element(const PathAlgebra& B) {
  std::vector<std::pair<int, Rational>> t;
  for (int v = 0; v < B.quiver().num_vertices(); ++v) t.emplace_back(B.vertex_path_index(v), 1);
  return Element(std::move(t));
}

inline Element vertex_idempotent(const PathAlgebra& B, int vertex_index) {
  return Element::basis(B.vertex_path_index(vertex_index));
}

inline std::string element_str(const PathAlgebra& B, const Element& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [idx, c] : x.terms()) {
    if (!first) s += (c > 0 ? " + " : " - ");
    if (first && c < 0) s += "-";
    Rational a = abs(c);
    if (a != 1) s += rational_str(a) + "*";
    s += B.path_str(idx);
    first = false;
  }
  return s;
}

inline nlohmann::json element_to_json(const Element& x) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [idx, c] : x.terms()) j[std::to_string(idx)] = rational_str(c);
  return j;
}

inline Element element_from_json(const nlohmann::json& j) {
  std::vector<std::pair<int, Rational>> t;
  for (auto it = j.begin(); it != j.end(); ++it) {
    t.emplace_back(std::stoi(it.key()), parse_rational(it.value().get<std::string>()));
  }
  return Element(std::move(t));
}

}  // namespace msa
