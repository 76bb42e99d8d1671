// The two families of maximal subalgebras of a basic algebra B = kQ/I:
//
//   separable type  A(u+v)  : fuse the vertex idempotents u and v,
//   split type      A(u,v,U): replace the arrow span u->v by a
//                             codimension-1 subspace U,
//
// plus canonical representative enumeration for type-A quivers and Ext
// quiver extraction.
#pragma once

#include "msa/subalgebra.hpp"
#include "msa/word.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace msa {

struct SeparableSpec {
  int u = 0;  // vertex indices in the ambient quiver
  int v = 0;
};

struct SplitSpec {
  int u = 0;
  int v = 0;
  std::vector<Element> U;  // spans a codimension-1 subspace of u kQ1 v
};

inline std::vector<int> arrows_between(const Quiver& q, int u, int v) {
  std::vector<int> out;
  for (const auto& a : q.arrows) {
    if (a.src == u && a.tgt == v) out.push_back(a.id);
  }
  return out;
}

inline Subalgebra build_separable(const PathAlgebra& B, const SeparableSpec& spec) {
  const int nv = B.quiver().num_vertices();
  if (spec.u == spec.v) throw std::invalid_argument("separable spec needs two distinct vertices");
  if (spec.u < 0 || spec.u >= nv || spec.v < 0 || spec.v >= nv)
    throw std::invalid_argument("vertex out of range");
  std::vector<Element> span;
  span.push_back(vertex_idempotent(B, spec.u) + vertex_idempotent(B, spec.v));
  for (int w = 0; w < nv; ++w) {
    if (w != spec.u && w != spec.v) span.push_back(vertex_idempotent(B, w));
  }
  for (int i = 0; i < B.dim(); ++i) {
    if (B.path(i).length() >= 1) span.push_back(Element::basis(i));
  }
  return Subalgebra::from_closed_span(B, span);
}

inline Subalgebra build_split(const PathAlgebra& B, const SplitSpec& spec) {
  const Quiver& Q = B.quiver();
  std::vector<int> uv_arrows = arrows_between(Q, spec.u, spec.v);
  if (uv_arrows.empty()) throw std::invalid_argument("split spec needs at least one arrow u->v");

  // U must be a codimension-1 subspace of the arrow span u kQ1 v.
  SparseRowSpace arrow_span;
  for (int a : uv_arrows) arrow_span.insert(SparseVec{{B.arrow_path_index(a), Rational(1)}});
  SparseRowSpace u_span;
  for (const auto& x : spec.U) {
    if (!arrow_span.contains(x.terms()))
      throw std::invalid_argument("U is not a subspace of the arrow span u->v");
    u_span.insert(x.terms());
  }
  if (u_span.dim() + 1 != arrow_span.dim())
    throw std::invalid_argument("U is not codimension 1 in the arrow span u->v");

  std::vector<Element> span;
  for (int w = 0; w < Q.num_vertices(); ++w) span.push_back(vertex_idempotent(B, w));
  for (const auto& x : spec.U) span.push_back(x);
  for (const auto& a : Q.arrows) {
    if (a.src == spec.u && a.tgt == spec.v) continue;
    span.push_back(Element::basis(B.arrow_path_index(a.id)));
  }
  for (int i = 0; i < B.dim(); ++i) {
    if (B.path(i).length() >= 2) span.push_back(Element::basis(i));
  }
  return Subalgebra::from_closed_span(B, span);
}

// A canonical representative index: A(i,j) fuses v_i and v_j; A(i) splits
// the arrow on the edge between v_i and its successor with U = {0}.
struct RepTag {
  enum class Kind { Separable, Split };
  Kind kind = Kind::Separable;
  int i = 0;  // signed vertex label / letter position
  int j = 0;  // second label, separable only

  std::string str() const {
    if (kind == Kind::Separable)
      return "A(" + std::to_string(i) + "," + std::to_string(j) + ")";
    return "A(" + std::to_string(i) + ")";
  }
  bool operator==(const RepTag& o) const { return kind == o.kind && i == o.i && j == o.j; }
  bool operator<(const RepTag& o) const {
    if (kind != o.kind) return kind == Kind::Separable;  // separable first
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

struct Representative {
  RepTag tag;
  Subalgebra algebra;
};

// One representative per index for a type-A path algebra: all A(i,j) with
// i < j in label order, then all A(i). Arrow spaces of a type-A quiver are
// one-dimensional, so U = {0} is the only split choice.
inline std::vector<Representative> enumerate_representatives(const PathAlgebra& B) {
  const Quiver& Q = B.quiver();
  if (!Q.is_type_a() && Q.num_vertices() > 1) {
    throw std::invalid_argument(
        "enumerate_representatives needs a type-A quiver; call build_separable/build_split "
        "directly for general acyclic quivers");
  }
  std::vector<Representative> out;
  const int nv = Q.num_vertices();
  for (int a = 0; a < nv; ++a) {
    for (int b = a + 1; b < nv; ++b) {
      RepTag tag;
      tag.kind = RepTag::Kind::Separable;
      tag.i = Q.vertices[static_cast<std::size_t>(a)].parts.at(0);
      tag.j = Q.vertices[static_cast<std::size_t>(b)].parts.at(0);
      out.push_back({tag, build_separable(B, SeparableSpec{a, b})});
    }
  }
  for (const auto& arr : Q.arrows) {
    RepTag tag;
    tag.kind = RepTag::Kind::Split;
    // the split index is the letter position of the edge: the smaller label
    tag.i = std::min(Q.vertices[static_cast<std::size_t>(arr.src)].parts.at(0),
                     Q.vertices[static_cast<std::size_t>(arr.tgt)].parts.at(0));
    tag.j = 0;
    out.push_back({tag, build_split(B, SplitSpec{arr.src, arr.tgt, {}})});
  }
  std::sort(out.begin(), out.end(),
            [](const Representative& x, const Representative& y) { return x.tag < y.tag; });
  return out;
}

// Gabriel quiver of a based subalgebra: one vertex per primitive idempotent
// block, dim u (J/J^2) v arrows u -> v.
inline Quiver ext_quiver(const Subalgebra& A) {
  const PathAlgebra& B = A.ambient();
  std::vector<Element> idems = A.block_idempotents();
  for (const auto& e : idems) {
    if (!A.contains(e)) {
      throw std::runtime_error("non-basic quotient: block idempotent does not lie in the subalgebra");
    }
  }
  Quiver G;
  for (const auto& blk : A.blocks()) {
    VertexLabel lab;
    for (int v : blk) {
      for (int part : B.quiver().vertices[static_cast<std::size_t>(v)].parts) lab.parts.push_back(part);
    }
    std::sort(lab.parts.begin(), lab.parts.end());
    G.vertices.push_back(lab);
  }
  int next_id = 0;
  for (std::size_t bu = 0; bu < idems.size(); ++bu) {
    for (std::size_t bv = 0; bv < idems.size(); ++bv) {
      int mult = A.graded_hom_dim(idems[bu], idems[bv], 1);
      for (int k = 0; k < mult; ++k) {
        Arrow a;
        a.id = next_id++;
        a.src = static_cast<int>(bu);
        a.tgt = static_cast<int>(bv);
        a.name = "x" + std::to_string(a.id);
        G.arrows.push_back(a);
      }
    }
  }
  return G;
}

inline bool is_connected_ext(const Subalgebra& A) { return ext_quiver(A).connected(); }

}  // namespace msa
