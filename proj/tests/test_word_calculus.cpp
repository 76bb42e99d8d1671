#include "msa/word_calculus.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using msa::BinaryWord;
using msa::SplitShape;
using msa::split_shape;

TEST_CASE("split shape fixtures") {
  // interior all-equal pattern: commutative square
  REQUIRE(split_shape(BinaryWord::parse("+++"), -1).kind == SplitShape::Kind::NonHereditary);
  REQUIRE(split_shape(BinaryWord::parse("---"), -1).kind == SplitShape::Kind::NonHereditary);

  // the (+1)(+1)(-1) pattern at the left boundary: A_{-m+1} is a line
  REQUIRE(split_shape(BinaryWord::parse("++-"), -1).kind == SplitShape::Kind::Line);

  // the leftmost split of "++-" keeps its chord on the right and is a
  // 3-star: trivalent with variant R
  SplitShape s = split_shape(BinaryWord::parse("++-"), -2);
  REQUIRE(s.kind == SplitShape::Kind::Trivalent);
  REQUIRE(s.variant == SplitShape::Variant::R);
  REQUIRE(s.root_label == -1);

  // no chord at all: disconnected
  REQUIRE(split_shape(BinaryWord::parse("+-+"), -2).kind == SplitShape::Kind::Disconnected);
  REQUIRE(split_shape(BinaryWord::parse("+-+"), -1).kind == SplitShape::Kind::Disconnected);
}

TEST_CASE("trivalent shapes: chords, roots and measured lengths") {
  for (int len = 2; len <= 9; ++len) {
    for (const auto& w : msa::all_words(len)) {
      msa::TypeALabels lab = w.labels();
      const int n = lab.n();
      const int m = lab.m();
      int lines = 0;
      for (int k = 0; k < len; ++k) {
        int i = w.position_at(k);
        SplitShape s = split_shape(w, i);
        REQUIRE((s.chord_left || s.chord_right || s.kind == SplitShape::Kind::Disconnected));
        switch (s.kind) {
          case SplitShape::Kind::NonHereditary:
            REQUIRE((s.chord_left && s.chord_right));
            break;
          case SplitShape::Kind::Disconnected:
            REQUIRE_FALSE(s.chord_left);
            REQUIRE_FALSE(s.chord_right);
            break;
          case SplitShape::Kind::Line: {
            ++lines;
            // lines occur only at the two near-boundary indices
            int mirror = *lab.pred(-i);  // flip image of the position
            int left_line = -m + 1;
            REQUIRE((i == left_line || mirror == left_line || n <= 3));
            break;
          }
          case SplitShape::Kind::Trivalent: {
            REQUIRE((s.chord_left != s.chord_right));  // exactly one chord
            REQUIRE(s.left_len + s.right_len == n);    // the two paths share one edge
            REQUIRE(s.left_len >= 1);
            REQUIRE(s.right_len >= 1);
            if (i <= -1) {
              REQUIRE(s.formula_left.has_value());
              // left-path forms match measurement in both parities
              REQUIRE(s.left_len == *s.formula_left);
              if (!lab.even()) {
                REQUIRE(s.right_len == *s.formula_right);  // odd n: stated forms are exact
              } else if (s.variant == SplitShape::Variant::L) {
                REQUIRE(s.right_len == *s.formula_right + 1);  // stated form is one short
              } else {
                REQUIRE(s.right_len == m - i - 2);  // stated form reads m+i-2
              }
            }
            break;
          }
        }
      }
      (void)lines;
    }
  }
}

TEST_CASE("trivalent chord matches the Ext quiver arrows") {
  for (int len = 3; len <= 7; ++len) {
    for (const auto& w : msa::all_words(len)) {
      msa::TypeALabels lab = w.labels();
      msa::Quiver Q = msa::word_to_quiver(w);
      msa::PathAlgebra B(Q);
      for (int k = 0; k < len; ++k) {
        int i = w.position_at(k);
        SplitShape s = split_shape(w, i);
        if (s.kind != SplitShape::Kind::Trivalent) continue;
        const msa::Arrow& edge = Q.arrows[static_cast<std::size_t>(k)];
        msa::Quiver G = msa::ext_quiver(msa::build_split(B, msa::SplitSpec{edge.src, edge.tgt, {}}));
        auto has_edge_between = [&](int a, int b) {
          int ia = G.vertex_index(a), ib = G.vertex_index(b);
          for (const auto& arr : G.arrows) {
            if ((arr.src == ia && arr.tgt == ib) || (arr.src == ib && arr.tgt == ia)) return true;
          }
          return false;
        };
        bool left_present = lab.pred(i) && has_edge_between(*lab.pred(i), *lab.succ(i));
        bool right_present = lab.succ(*lab.succ(i)) && has_edge_between(i, *lab.succ(*lab.succ(i)));
        REQUIRE(left_present == s.chord_left);
        REQUIRE(right_present == s.chord_right);
      }
    }
  }
}

TEST_CASE("word decomposition fixtures") {
  // boundary factors vanish at i = -1, j = m
  BinaryWord w = BinaryWord::parse("++-+");
  auto d = msa::decompose_word(w, -1, 2);
  REQUIRE(d.w1.length() == 0);
  REQUIRE(d.w5.length() == 0);
  REQUIRE(d.reassemble() == w);

  // n = 5, (i, j) = (-1, 2): the middle factor spans v_-1 to v_1, length 2
  BinaryWord w5 = BinaryWord::parse("+-+-");
  auto d5 = msa::decompose_word(w5, -1, 2);
  REQUIRE(d5.w3.length() == 2);
  REQUIRE(d5.w3.length() % 2 == 0);
  REQUIRE(d5.reassemble() == w5);

  REQUIRE_THROWS_AS(msa::decompose_word(w5, -2, 1), std::invalid_argument);  // |i| >= |j|
  REQUIRE_THROWS_AS(msa::decompose_word(w5, 1, 2), std::invalid_argument);   // i >= 0
}

TEST_CASE("word decomposition reassembles on random instances") {
  std::mt19937 rng(20240517);
  int done = 0;
  while (done < 200) {
    int len = 2 + static_cast<int>(rng() % 10);
    auto words = msa::all_words(len);
    const BinaryWord& w = words[rng() % words.size()];
    msa::TypeALabels lab = w.labels();
    int m = lab.m();
    int j = 1 + static_cast<int>(rng() % m);
    int i = -1 - static_cast<int>(rng() % std::max(1, j - 1));
    if (!(i < 0 && -i < j)) continue;
    auto d = msa::decompose_word(w, i, j);
    REQUIRE(d.reassemble() == w);
    // factor boundaries: lengths sum correctly and w3 runs from v_i to v_-i
    REQUIRE(d.w3.length() == lab.index_of(-i) - lab.index_of(i));
    ++done;
  }
}

TEST_CASE("word equation solutions") {
  auto sols = msa::word_equation_solutions(10);
  bool found = false;
  for (const auto& [w2, w3] : sols) {
    if (w2.str() == "+-" && w3.str() == "+-") found = true;
    REQUIRE(w3.length() % 2 == 0);
    REQUIRE(star(w3) == w3);
    REQUIRE(concat(w3, star(w2)) == concat(w2, w3));
  }
  REQUIRE(found);

  // no solutions with len(w3) = 1 and len(w2) in {1, 2}: twelve cases
  int checked = 0;
  for (int l2 : {1, 2}) {
    for (const auto& w2 : msa::all_words(l2)) {
      for (const auto& w3 : msa::all_words(1)) {
        ++checked;
        REQUIRE_FALSE(concat(w3, star(w2)) == concat(w2, w3));
      }
    }
  }
  REQUIRE(checked == 12);

  REQUIRE(msa::word_equation_solutions(0).empty());
}
