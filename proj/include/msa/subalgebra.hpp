// Unital subalgebras of a path algebra, given by a spanning set and carrying
// their radical filtration.
//
// The radical is computed as A ∩ J(B) (the span of positive-length paths)
// and then re-verified from scratch: it must be a two-sided ideal of A, it
// must be nilpotent, and the semisimple quotient must be spanned by the
// 0/1 indicator vectors of a vertex partition whose block count equals
// dim A - dim J(A). This keeps the code from assuming the structure results
// it is used to test.
#pragma once

#include "msa/path_algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace msa {

class Subalgebra {
 public:
  // subalgebras keep a pointer to their ambient algebra: never pass a temporary
  static Subalgebra from_spanning_set(PathAlgebra&&, const std::vector<Element>&) = delete;
  static Subalgebra from_closed_span(PathAlgebra&&, const std::vector<Element>&) = delete;
  static Subalgebra whole_algebra(PathAlgebra&&) = delete;

  static Subalgebra from_spanning_set(const PathAlgebra& B, const std::vector<Element>& gens) {
    Subalgebra A(B);
    A.list_.push_back(unit_element(B));
    A.space_.insert(A.list_.back().terms());
    for (const auto& g : gens) {
      if (A.space_.insert(g.terms())) A.list_.push_back(g);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < A.list_.size(); ++i) {
        for (std::size_t j = 0; j < A.list_.size(); ++j) {
          Element p = multiply(B, A.list_[i], A.list_[j]);
          if (!p.is_zero() && A.space_.insert(p.terms())) {
            A.list_.push_back(p);
            changed = true;
          }
        }
      }
    }
    A.finalize();
    return A;
  }

  // For spans that are closed by construction; closure is still verified.
  static Subalgebra from_closed_span(const PathAlgebra& B, const std::vector<Element>& span) {
    Subalgebra A(B);
    A.list_.push_back(unit_element(B));
    A.space_.insert(A.list_.back().terms());
    for (const auto& g : span) {
      if (A.space_.insert(g.terms())) A.list_.push_back(g);
    }
    for (std::size_t i = 0; i < A.list_.size(); ++i) {
      for (std::size_t j = 0; j < A.list_.size(); ++j) {
        Element p = multiply(B, A.list_[i], A.list_[j]);
        if (!p.is_zero() && !A.space_.contains(p.terms())) {
          throw std::invalid_argument("span is not multiplicatively closed");
        }
      }
    }
    A.finalize();
    return A;
  }

  static Subalgebra whole_algebra(const PathAlgebra& B) {
    std::vector<Element> all;
    for (int i = 0; i < B.dim(); ++i) all.push_back(Element::basis(i));
    return from_closed_span(B, all);
  }

  const PathAlgebra& ambient() const { return *ambient_; }
  int dim() const { return static_cast<int>(space_.dim()); }
  bool contains(const Element& x) const { return space_.contains(x.terms()); }
  const SparseRowSpace& span() const { return space_; }

  std::vector<Element> basis_elements() const {
    std::vector<Element> out;
    for (const auto& r : space_.canonical_rows()) out.emplace_back(Element(r));
    return out;
  }

  const SparseRowSpace& radical() const { return radical_powers_[0]; }
  int radical_dim() const { return static_cast<int>(radical_powers_[0].dim()); }

  // J(A)^r; r = 0 gives A itself.
  const SparseRowSpace& radical_power(int r) const {
    if (r == 0) return space_;
    if (r <= static_cast<int>(radical_powers_.size()))
      return radical_powers_[static_cast<std::size_t>(r - 1)];
    return radical_powers_.back();  // zero space
  }

  // [dim A, dim J, dim J^2, ..., 0]
  std::vector<int> radical_power_dims() const {
    std::vector<int> out{dim()};
    for (const auto& p : radical_powers_) out.push_back(static_cast<int>(p.dim()));
    if (out.back() != 0) out.push_back(0);
    while (out.size() >= 2 && out[out.size() - 2] == 0) out.pop_back();
    return out;
  }

  int nilpotency_degree() const {  // least k with J^k = 0
    return static_cast<int>(radical_power_dims().size()) - 1;
  }

  // Vertex partition of the semisimple quotient and its indicator
  // idempotents (elements of the degree-0 part of B; they lie in A for every
  // construction in this project, which ext_quiver re-checks).
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::vector<Element> block_idempotents() const {
    std::vector<Element> out;
    for (const auto& blk : blocks_) {
      SparseVec t;
      for (int v : blk) t.emplace_back(ambient_->vertex_path_index(v), Rational(1));
      std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      out.emplace_back(Element(t));
    }
    return out;
  }

  // dim u (J^r / J^{r+1}) v for idempotents u, v in A.
  int graded_hom_dim(const Element& u, const Element& v, int r) const {
    check_idempotent(u);
    check_idempotent(v);
    auto corner_rank = [&](const SparseRowSpace& sp) {
      SparseRowSpace acc;
      for (const auto& row : sp.canonical_rows()) {
        Element x = multiply(*ambient_, multiply(*ambient_, u, Element(row)), v);
        if (!x.is_zero()) acc.insert(x.terms());
      }
      return static_cast<int>(acc.dim());
    };
    return corner_rank(radical_power(r)) - corner_rank(radical_power(r + 1));
  }

 private:
  explicit Subalgebra(const PathAlgebra& B) : ambient_(&B) {}

  void check_idempotent(const Element& u) const {
    if (!(multiply(*ambient_, u, u) == u)) throw std::invalid_argument("not an idempotent");
    if (!contains(u)) throw std::invalid_argument("idempotent not in the subalgebra");
  }

  void finalize() {
    compute_radical();
    verify_radical();
    compute_blocks();
  }

  void compute_radical() {
    // A ∩ span(paths of length >= 1): kernel of the degree-0 projection.
    const auto rows = space_.canonical_rows();
    const int nv = ambient_->quiver().num_vertices();
    std::vector<int> vertex_cols;
    for (int v = 0; v < nv; ++v) vertex_cols.push_back(ambient_->vertex_path_index(v));
    std::vector<Vec> projected;
    projected.reserve(rows.size());
    for (const auto& r : rows) {
      Vec p(static_cast<std::size_t>(nv), Rational(0));
      for (const auto& [idx, c] : r) {
        for (int v = 0; v < nv; ++v) {
          if (vertex_cols[static_cast<std::size_t>(v)] == idx) p[static_cast<std::size_t>(v)] = c;
        }
      }
      projected.push_back(std::move(p));
    }
    std::vector<Vec> combos = coefficient_kernel(projected, static_cast<std::size_t>(nv));
    SparseRowSpace rad;
    for (const auto& c : combos) {
      std::map<int, Rational> acc;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (const auto& [idx, a] : rows[i]) {
          acc[idx] += c[i] * a;
          if (acc[idx] == 0) acc.erase(idx);
        }
      }
      rad.insert(SparseVec(acc.begin(), acc.end()));
    }
    radical_powers_.clear();
    radical_powers_.push_back(std::move(rad));
    // powers until zero
    while (radical_powers_.back().dim() > 0) {
      const auto& prev = radical_powers_.back();
      SparseRowSpace next;
      for (const auto& x : prev.canonical_rows()) {
        for (const auto& y : radical_powers_[0].canonical_rows()) {
          Element p = multiply(*ambient_, Element(x), Element(y));
          if (!p.is_zero()) next.insert(p.terms());
        }
      }
      if (next.dim() >= prev.dim()) throw std::runtime_error("not a based subalgebra: radical not nilpotent");
      radical_powers_.push_back(std::move(next));
    }
  }

  void verify_radical() {
    const auto& rad = radical_powers_[0];
    for (const auto& x : rad.canonical_rows()) {
      for (const auto& b : space_.canonical_rows()) {
        Element xb = multiply(*ambient_, Element(x), Element(b));
        Element bx = multiply(*ambient_, Element(b), Element(x));
        if (!rad.contains(xb.terms()) || !rad.contains(bx.terms())) {
          throw std::runtime_error("not a based subalgebra: radical is not an ideal");
        }
      }
    }
  }

  void compute_blocks() {
    const int nv = ambient_->quiver().num_vertices();
    // vertices u ~ v iff every element of A has equal degree-0 coordinates
    // at u and v
    std::vector<int> rep(static_cast<std::size_t>(nv));
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](int x) {
      while (rep[static_cast<std::size_t>(x)] != x) x = rep[static_cast<std::size_t>(x)];
      return x;
    };
    const auto rows = space_.canonical_rows();
    std::vector<std::map<int, Rational>> deg0(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (const auto& [idx, c] : rows[i]) {
        const Path& p = ambient_->path(idx);
        if (p.length() == 0) deg0[i][p.src] = c;
      }
    }
    for (int u = 0; u < nv; ++u) {
      for (int v = u + 1; v < nv; ++v) {
        bool same = true;
        for (const auto& d : deg0) {
          auto iu = d.find(u);
          auto iv = d.find(v);
          Rational cu = iu == d.end() ? Rational(0) : iu->second;
          Rational cv = iv == d.end() ? Rational(0) : iv->second;
          if (cu != cv) {
            same = false;
            break;
          }
        }
        if (same) rep[static_cast<std::size_t>(find(u))] = find(v);
      }
    }
    std::map<int, std::vector<int>> by_rep;
    for (int v = 0; v < nv; ++v) by_rep[find(v)].push_back(v);
    blocks_.clear();
    for (auto& [r, blk] : by_rep) blocks_.push_back(std::move(blk));
    std::sort(blocks_.begin(), blocks_.end());
    if (static_cast<int>(blocks_.size()) != dim() - radical_dim()) {
      throw std::runtime_error("not a based subalgebra: semisimple quotient dimension mismatch");
    }
  }

  const PathAlgebra* ambient_;
  SparseRowSpace space_;
  std::vector<Element> list_;
  std::vector<SparseRowSpace> radical_powers_;  // J^1, J^2, ..., 0
  std::vector<std::vector<int>> blocks_;
};

inline Subalgebra subalgebra_from_spanning_set(const PathAlgebra& B, const std::vector<Element>& gens) {
  return Subalgebra::from_spanning_set(B, gens);
}

inline std::vector<int> radical_power_dims(const PathAlgebra& B) {
  std::vector<int> out;
  for (int r = 0;; ++r) {
    out.push_back(B.dim_paths_of_length_at_least(r));
    if (out.back() == 0) break;
  }
  return out;
}

inline std::vector<int> radical_power_dims(const Subalgebra& A) { return A.radical_power_dims(); }

// Span of paths of length >= 1 in B, as a row space (J(B)).
inline SparseRowSpace arrow_ideal_space(const PathAlgebra& B, int power = 1) {
  SparseRowSpace s;
  for (int i = 0; i < B.dim(); ++i) {
    if (B.path(i).length() >= power) s.insert(SparseVec{{i, Rational(1)}});
  }
  return s;
}

}  // namespace msa
