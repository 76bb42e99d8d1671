#include "msa/presentation.hpp"

#include <catch2/catch_amalgamated.hpp>

using msa::BinaryWord;
using msa::BoundQuiverAlgebra;
using msa::Element;
using msa::PathAlgebra;
using msa::Presentation;
using msa::Quiver;
using msa::Relation;
using msa::RelationTerm;
using msa::SeparableSpec;
using msa::SplitSpec;
using msa::word_to_quiver;

namespace {

PathAlgebra doubled_arrow_algebra() {
  Quiver q;
  for (int v = 1; v <= 4; ++v) q.vertices.emplace_back(v);
  q.arrows = {{0, 0, 1, "a"}, {1, 1, 2, "b1"}, {2, 1, 2, "b2"}, {3, 2, 3, "c"}};
  return PathAlgebra(q);
}

int relation_count(const Presentation& p) { return static_cast<int>(p.relations.size()); }

}  // namespace

TEST_CASE("bound quiver algebra: loop with a square-zero relation") {
  Quiver q;
  q.vertices.emplace_back(1);
  q.arrows = {{0, 0, 0, "l"}};
  BoundQuiverAlgebra bq(q, {Relation{RelationTerm{{0, 0}, msa::Rational(1)}}});
  REQUIRE(bq.dim() == 2);
  REQUIRE(bq.graded_dims() == std::vector<int>{1, 1});
}

TEST_CASE("bound quiver algebra: oriented 3-cycle with one composite killed") {
  Quiver q;
  for (int v = 0; v < 3; ++v) q.vertices.emplace_back(v);
  q.arrows = {{0, 0, 1, "a"}, {1, 1, 2, "b"}, {2, 2, 0, "c"}};
  // kill c then a
  BoundQuiverAlgebra bq(q, {Relation{RelationTerm{{2, 0}, msa::Rational(1)}}});
  REQUIRE(bq.graded_dims() == std::vector<int>{3, 3, 2, 1});
  REQUIRE(bq.dim() == 9);
}

TEST_CASE("bound quiver algebra input validation") {
  Quiver q;
  for (int v = 0; v < 3; ++v) q.vertices.emplace_back(v);
  q.arrows = {{0, 0, 1, "a"}, {1, 1, 2, "b"}};
  REQUIRE_THROWS_AS(BoundQuiverAlgebra(q, {Relation{RelationTerm{{0}, msa::Rational(1)}}}),
                    std::invalid_argument);  // degree 1
  REQUIRE_THROWS_AS(BoundQuiverAlgebra(q, {Relation{RelationTerm{{1, 0}, msa::Rational(1)}}}),
                    std::invalid_argument);  // not a path
  REQUIRE_THROWS_AS(
      BoundQuiverAlgebra(q, {Relation{RelationTerm{{0, 1}, msa::Rational(1)},
                                      RelationTerm{{0}, msa::Rational(1)}}}),
      std::invalid_argument);  // mixed degrees
}

TEST_CASE("separable presentations of the equioriented A4 match the tables") {
  PathAlgebra B(word_to_quiver(BinaryWord::parse("+++")));
  const Quiver& Q = B.quiver();
  auto present = [&](int u, int v) {
    Presentation P = msa::present_separable(B, SeparableSpec{Q.vertex_index(u), Q.vertex_index(v)});
    msa::check_presentation(P, msa::build_separable(B, SeparableSpec{Q.vertex_index(u), Q.vertex_index(v)}));
    return P;
  };

  // glue the two ends of one arrow: a loop with a square-zero relation
  Presentation p12 = present(-2, -1);
  REQUIRE(relation_count(p12) == 1);
  REQUIRE(p12.relations[0].size() == 1);
  REQUIRE(p12.relations[0][0].arrows == std::vector<int>{0, 0});

  // distance two: a 2-cycle bound by one composite
  Presentation p13 = present(-2, 1);
  REQUIRE(relation_count(p13) == 1);
  REQUIRE(p13.relations[0][0].arrows == std::vector<int>{1, 0});

  // the ends: an oriented 3-cycle bound by one composite
  Presentation p14 = present(-2, 2);
  REQUIRE(relation_count(p14) == 1);
  REQUIRE(p14.relations[0][0].arrows == std::vector<int>{2, 0});

  // adjacent interior pair: the loop relation plus the skip composite
  Presentation p23 = present(-1, 1);
  REQUIRE(relation_count(p23) == 2);
  std::vector<std::vector<int>> rels{p23.relations[0][0].arrows, p23.relations[1][0].arrows};
  std::sort(rels.begin(), rels.end());
  REQUIRE(rels == std::vector<std::vector<int>>{{0, 2}, {1, 1}});

  Presentation p24 = present(-1, 2);
  REQUIRE(relation_count(p24) == 1);
  REQUIRE(p24.relations[0][0].arrows == std::vector<int>{2, 1});

  Presentation p34 = present(1, 2);
  REQUIRE(relation_count(p34) == 1);
  REQUIRE(p34.relations[0][0].arrows == std::vector<int>{2, 2});
}

TEST_CASE("split presentations of the equioriented A4 match the tables") {
  PathAlgebra B(word_to_quiver(BinaryWord::parse("+++")));

  Presentation first = msa::present_split_hereditary(B, SplitSpec{0, 1, {}});
  msa::check_presentation(first, msa::build_split(B, SplitSpec{0, 1, {}}));
  REQUIRE(first.relations.empty());
  REQUIRE(first.gamma.num_arrows() == 3);

  Presentation mid = msa::present_split_hereditary(B, SplitSpec{1, 2, {}});
  msa::check_presentation(mid, msa::build_split(B, SplitSpec{1, 2, {}}));
  REQUIRE(mid.gamma.num_arrows() == 4);
  REQUIRE(mid.relations.size() == 1);
  REQUIRE(mid.relations[0].size() == 2);  // bar(a)*c - a*under(c)
  REQUIRE(mid.relations[0][0].coeff + mid.relations[0][1].coeff == 0);

  Presentation last = msa::present_split_hereditary(B, SplitSpec{2, 3, {}});
  msa::check_presentation(last, msa::build_split(B, SplitSpec{2, 3, {}}));
  REQUIRE(last.relations.empty());

  // the shortcut arrow is dictionary-mapped to the length-2 composite
  bool found_bar = false;
  for (const auto& a : mid.gamma.arrows) {
    if (a.name.rfind("bar(", 0) == 0) {
      found_bar = true;
      const Element& img = mid.arrow_dict.at(a.id);
      REQUIRE(img.terms().size() == 1);
      REQUIRE(B.path(img.terms()[0].first).length() == 2);
    }
  }
  REQUIRE(found_bar);
}

TEST_CASE("split presentation of the doubled-arrow quiver") {
  PathAlgebra D = doubled_arrow_algebra();
  Element b1 = Element::basis(D.arrow_path_index(1));
  SplitSpec spec{1, 2, {b1}};
  Presentation P = msa::present_split_hereditary(D, spec);
  msa::check_presentation(P, msa::build_split(D, spec));
  REQUIRE(P.gamma.num_arrows() == 5);  // a, kept b1, c, bar(a), under(c)
  REQUIRE(P.relations.size() == 1);
  REQUIRE(P.relations[0].size() == 2);
  // kept arrow carries the chosen line of the arrow span
  REQUIRE(P.arrow_dict.at(0) == b1);
  int bars = 0, unders = 0;
  for (const auto& a : P.gamma.arrows) {
    bars += a.name.rfind("bar(", 0) == 0;
    unders += a.name.rfind("under(", 0) == 0;
  }
  REQUIRE(bars == 1);
  REQUIRE(unders == 1);
  BoundQuiverAlgebra bq(P.gamma, P.relations);
  REQUIRE(bq.dim() == D.dim() - 1);
}

TEST_CASE("the complement choice does not change the presentation") {
  PathAlgebra D = doubled_arrow_algebra();
  Element b1 = Element::basis(D.arrow_path_index(1));
  Element b2 = Element::basis(D.arrow_path_index(2));
  SplitSpec spec{1, 2, {b1}};
  Presentation def = msa::present_split_hereditary(D, spec);           // complement = b2
  Presentation alt = msa::present_split_hereditary(D, spec, b1 + b2);  // another complement
  msa::check_presentation(alt, msa::build_split(D, spec));
  REQUIRE(msa::presentations_structurally_equal(def, alt));
  REQUIRE_THROWS_AS(msa::present_split_hereditary(D, spec, b1), std::invalid_argument);
}

TEST_CASE("split presentations require a hereditary ambient") {
  PathAlgebra T2 = msa::truncate(word_to_quiver(BinaryWord::parse("+++")), 2);
  REQUIRE_THROWS_AS(msa::present_split_hereditary(T2, SplitSpec{0, 1, {}}), std::invalid_argument);
}

TEST_CASE("separable presentation over a truncated ambient appends generalized relations") {
  PathAlgebra T3 = msa::truncate(word_to_quiver(BinaryWord::parse("+++")), 3);
  // the ideal J^3 of the path algebra is generated by the long path a0*a1*a2
  Relation gen{RelationTerm{{0, 1, 2}, msa::Rational(1)}};
  Presentation P = msa::present_separable(T3, SeparableSpec{0, 1}, {gen});
  REQUIRE(P.generalized_relations.size() == 1);
  // its dictionary image vanishes in the truncated algebra
  Element img = P.vertex_dict.at(0);  // start at the glued vertex
  for (int aid : gen.front().arrows) img = multiply(T3, img, P.arrow_dict.at(aid));
  REQUIRE(img.is_zero());
}

TEST_CASE("presentation soundness catches wrong relation sets") {
  PathAlgebra B(word_to_quiver(BinaryWord::parse("+++")));
  Presentation P = msa::present_separable(B, SeparableSpec{1, 2});  // glue v_-1, v_1
  msa::Subalgebra A = msa::build_separable(B, SeparableSpec{1, 2});
  msa::check_presentation(P, A);
  // dropping the skip relation breaks the graded dimension count
  Presentation broken = P;
  broken.relations.erase(broken.relations.begin());
  REQUIRE_THROWS_AS(msa::check_presentation(broken, A), std::runtime_error);
}

TEST_CASE("structural comparison distinguishes the glued rows") {
  PathAlgebra B(word_to_quiver(BinaryWord::parse("+++")));
  Presentation p12 = msa::present_separable(B, SeparableSpec{0, 1});
  Presentation p34 = msa::present_separable(B, SeparableSpec{2, 3});
  Presentation p23 = msa::present_separable(B, SeparableSpec{1, 2});
  REQUIRE_FALSE(msa::presentations_structurally_equal(p12, p23));
  REQUIRE_FALSE(msa::presentations_structurally_equal(p12, p34));
  REQUIRE(msa::presentations_structurally_equal(p12, p12));
}

TEST_CASE("presentation JSON round trip") {
  PathAlgebra B(word_to_quiver(BinaryWord::parse("+++")));
  Presentation P = msa::present_split_hereditary(B, SplitSpec{1, 2, {}});
  nlohmann::json j = msa::presentation_to_json(P);
  Presentation back = msa::presentation_from_json(j);
  REQUIRE(msa::presentations_structurally_equal(P, back));
  REQUIRE(back.gamma.vertices == P.gamma.vertices);
  REQUIRE(back.relations.size() == P.relations.size());
}

TEST_CASE("present_representative matches the direct constructions") {
  PathAlgebra B(word_to_quiver(BinaryWord::parse("+-+")));
  for (const auto& rep : msa::enumerate_representatives(B)) {
    Presentation P = msa::present_representative(B, rep.tag);
    msa::check_presentation(P, rep.algebra);
  }
}
