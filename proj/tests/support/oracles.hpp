// Test-side oracles, independent of the implementation paths they check.
#pragma once

#include "msa/isomorphism.hpp"
#include "msa/subalgebra.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

// Counts paths of the quiver by naive recursion (trivial paths included).
inline int count_paths_brute(const msa::Quiver& q, int min_len = 0, int max_len = 1 << 20) {
  int total = 0;
  auto walk = [&](auto&& self, int at, int len) -> void {
    if (len >= min_len && len <= max_len) ++total;
    if (len >= max_len) return;
    for (const auto& a : q.arrows) {
      if (a.src == at) self(self, a.tgt, len + 1);
    }
  };
  for (int v = 0; v < q.num_vertices(); ++v) walk(walk, v, 0);
  return total;
}

// Counts quiver isomorphisms by trying every vertex permutation and every
// matching of parallel arrows. Only sensible for tiny quivers.
inline long count_isomorphisms_brute(const msa::Quiver& q1, const msa::Quiver& q2) {
  if (q1.num_vertices() != q2.num_vertices() || q1.num_arrows() != q2.num_arrows()) return 0;
  const int n = q1.num_vertices();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  auto arrows_between = [](const msa::Quiver& q, int u, int v) {
    int c = 0;
    for (const auto& a : q.arrows) c += (a.src == u && a.tgt == v);
    return c;
  };
  do {
    bool ok = true;
    long matchings = 1;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = 0; v < n && ok; ++v) {
        int c1 = arrows_between(q1, u, v);
        int c2 = arrows_between(q2, perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        if (c1 != c2) ok = false;
        for (int k = 2; k <= c1; ++k) matchings *= k;  // parallel arrows permute freely
      }
    }
    if (ok) count += matchings;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// star via the position formula w*(i) = -w(pred(-i)), independent of the
// reverse-and-negate implementation.
inline msa::BinaryWord star_by_formula(const msa::BinaryWord& w) {
  if (w.length() == 0) return w;
  msa::TypeALabels lab = w.labels();
  std::vector<int> letters(static_cast<std::size_t>(w.length()));
  for (int k = 0; k < w.length(); ++k) {
    int i = w.position_at(k);
    int p = *lab.pred(-i);
    letters[static_cast<std::size_t>(k)] = -w.at_position(p);
  }
  return msa::BinaryWord(letters);
}

// Jacobson radical by the characteristic-zero trace criterion: the radical
// of the bilinear form (x, y) -> trace(L_{xy}) on the subalgebra, with L the
// left regular representation. Completely independent of the
// intersect-with-arrow-ideal route.
inline msa::SparseRowSpace radical_by_trace(const msa::Subalgebra& A) {
  const msa::PathAlgebra& B = A.ambient();
  std::vector<msa::Element> basis = A.basis_elements();
  const std::size_t d = basis.size();
  msa::detail::CoordFrame frame;
  for (const auto& b : basis) frame.add(b.terms());

  auto trace_of_left_mult = [&](const msa::Element& x) {
    msa::Rational tr(0);
    for (std::size_t k = 0; k < d; ++k) {
      msa::Element xk = multiply(B, x, basis[k]);
      if (xk.is_zero()) continue;
      tr += frame.coords(xk.terms())[k];
    }
    return tr;
  };

  std::vector<msa::Vec> gram(d, msa::Vec(d, msa::Rational(0)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      gram[i][j] = trace_of_left_mult(multiply(B, basis[i], basis[j]));
    }
  }
  msa::SparseRowSpace rad;
  for (const auto& combo : msa::coefficient_kernel(gram, d)) {
    msa::Element x;
    for (std::size_t i = 0; i < d; ++i) {
      if (combo[i] != 0) x += basis[i] * combo[i];
    }
    if (!x.is_zero()) rad.insert(x.terms());
  }
  return rad;
}

}  // namespace oracle
