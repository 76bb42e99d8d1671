// Shape and word calculus for split subalgebras of type-A path algebras.
//
// Splitting the edge at letter position i deletes that edge from the Ext
// quiver and adds at most two chords: one between pred(i) and succ(i) when
// w(pred(i)) = w(i), one between i and succ^2(i) when w(succ(i)) = w(i).
// Both chords give a commutative square (non-hereditary); one chord gives a
// line or a trivalent tree; no chord disconnects the quiver.
//
// Path lengths of trivalent shapes are always measured on the constructed
// Ext quiver. The closed forms stated alongside are kept as predictions
// only: the even-vertex-count forms disagree with direct measurement (the
// right-path forms are off by one for L and read m+i-2 where measurement
// gives m-i-2 for R), so callers report divergence instead of asserting.
#pragma once

#include "msa/maxsub.hpp"
#include "msa/word.hpp"

#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace msa {

struct SplitShape {
  enum class Kind { Disconnected, NonHereditary, Line, Trivalent };
  enum class Variant { None, L, R };

  Kind kind = Kind::Disconnected;
  Variant variant = Variant::None;
  bool chord_left = false;   // edge between pred(i) and succ(i)
  bool chord_right = false;  // edge between i and succ^2(i)

  // trivalent data, measured on the Ext quiver
  int root_label = 0;
  bool root_is_source = false;
  int left_len = 0;   // arrows on the tree path from the root to v_{-m}
  int right_len = 0;  // arrows on the tree path from the root to v_m

  // closed-form predictions, stated for i <= -1 only
  std::optional<int> formula_left;
  std::optional<int> formula_right;

  std::string kind_str() const {
    switch (kind) {
      case Kind::Disconnected: return "disconnected";
      case Kind::NonHereditary: return "non-hereditary";
      case Kind::Line: return "line";
      case Kind::Trivalent: return variant == Variant::L ? "trivalent-L" : "trivalent-R";
    }
    return "?";
  }
};

namespace detail {

inline int tree_distance(const Quiver& q, int from, int to) {
  std::vector<int> dist(static_cast<std::size_t>(q.num_vertices()), -1);
  std::deque<int> bfs{from};
  dist[static_cast<std::size_t>(from)] = 0;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop_front();
    for (const auto& a : q.arrows) {
      for (int w : {a.src == v ? a.tgt : -1, a.tgt == v ? a.src : -1}) {
        if (w >= 0 && dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          bfs.push_back(w);
        }
      }
    }
  }
  if (dist[static_cast<std::size_t>(to)] < 0) throw std::runtime_error("vertices not connected");
  return dist[static_cast<std::size_t>(to)];
}

}  // namespace detail

inline SplitShape split_shape(const BinaryWord& w, int i) {
  if (!w.is_position(i)) throw std::invalid_argument("not a letter position");
  TypeALabels lab = w.labels();
  const int m = lab.m();

  // build A_i and its Ext quiver
  Quiver Q = word_to_quiver(w);
  PathAlgebra B(Q);
  int k = lab.index_of(i);
  const Arrow& edge = Q.arrows[static_cast<std::size_t>(k)];
  Subalgebra A = build_split(B, SplitSpec{edge.src, edge.tgt, {}});
  Quiver G = ext_quiver(A);

  SplitShape s;
  auto pred_pos = lab.pred(i);
  auto succ_label = lab.succ(i);
  bool has_succ_pos = succ_label && w.is_position(*succ_label);
  s.chord_left = pred_pos && w.at_position(*pred_pos) == w.at_position(i);
  s.chord_right = has_succ_pos && w.at_position(*succ_label) == w.at_position(i);

  if (!G.connected()) {
    s.kind = SplitShape::Kind::Disconnected;
    return s;
  }
  if (s.chord_left && s.chord_right) {
    s.kind = SplitShape::Kind::NonHereditary;
    return s;
  }
  bool trivalent = false;
  for (int v = 0; v < G.num_vertices() && !trivalent; ++v) {
    trivalent = G.in_degree(v) + G.out_degree(v) >= 3;
  }
  if (!trivalent) {
    s.kind = SplitShape::Kind::Line;
    return s;
  }
  s.kind = SplitShape::Kind::Trivalent;
  s.variant = s.chord_left ? SplitShape::Variant::L : SplitShape::Variant::R;
  // root: the endpoint of the deleted edge left with a single neighbor
  s.root_label = (s.variant == SplitShape::Variant::L) ? i : *succ_label;
  int root = G.vertex_index(s.root_label);
  s.root_is_source = G.out_degree(root) == 1;
  int leftmost = G.vertex_index(-m);
  int rightmost = G.vertex_index(m);
  s.left_len = detail::tree_distance(G, root, leftmost);
  s.right_len = detail::tree_distance(G, root, rightmost);
  if (i <= -1) {
    if (s.variant == SplitShape::Variant::L) {
      s.formula_left = i + m;
      s.formula_right = lab.even() ? m - i - 1 : m - i + 1;
    } else {
      s.formula_left = m + i + 2;
      s.formula_right = lab.even() ? m + i - 2 : m - i - 1;
    }
  }
  return s;
}

// The five factors of w cut at the vertices -j, i, -i, j (with i < 0 < j and
// |i| < |j|).
struct WordDecomposition {
  BinaryWord w1, w2, w3, w4, w5;
  BinaryWord reassemble() const { return concat(concat(concat(concat(w1, w2), w3), w4), w5); }
};

inline WordDecomposition decompose_word(const BinaryWord& w, int i, int j) {
  TypeALabels lab = w.labels();
  if (!lab.is_label(i) || !lab.is_label(j) || !lab.is_label(-i) || !lab.is_label(-j))
    throw std::invalid_argument("not vertex labels");
  if (!(i < 0 && j > 0 && -i < j)) throw std::invalid_argument("need i < 0 <= j with |i| < |j|");
  auto slice = [&](int from_idx, int to_idx) {
    std::vector<int> letters;
    for (int t = from_idx; t < to_idx; ++t) letters.push_back(w.at_index(t));
    return BinaryWord(letters);
  };
  WordDecomposition d;
  d.w1 = slice(0, lab.index_of(-j));
  d.w2 = slice(lab.index_of(-j), lab.index_of(i));
  d.w3 = slice(lab.index_of(i), lab.index_of(-i));
  d.w4 = slice(lab.index_of(-i), lab.index_of(j));
  d.w5 = slice(lab.index_of(j), w.length());
  return d;
}

// All (w2, w3) with w3 * star(w2) = w2 * w3, len(w2) >= 1,
// len(w2) + len(w3) <= max_total_len. Exhaustive, in deterministic order.
inline std::vector<std::pair<BinaryWord, BinaryWord>> word_equation_solutions(int max_total_len) {
  std::vector<std::pair<BinaryWord, BinaryWord>> out;
  for (int l2 = 1; l2 <= max_total_len; ++l2) {
    for (int l3 = 0; l2 + l3 <= max_total_len; ++l3) {
      for (const auto& w2 : all_words(l2)) {
        BinaryWord rhs_prefix = star(w2);
        for (const auto& w3 : all_words(l3)) {
          if (concat(w3, rhs_prefix) == concat(w2, w3)) out.emplace_back(w2, w3);
        }
      }
    }
  }
  return out;
}

}  // namespace msa
