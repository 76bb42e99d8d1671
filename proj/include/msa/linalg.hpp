// Dense rational row spaces in reduced row echelon form. Dimensions in this
// project stay below ~60, so everything is dense and quadratic/cubic without
// apology. RREF is maintained incrementally, which makes subspace equality a
// row-by-row comparison.
#pragma once

#include "msa/rational.hpp"

#include <cassert>
#include <cstddef>
#include <map>
#include <vector>

namespace msa {

using Vec = std::vector<Rational>;

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

// A subspace of Q^n kept as reduced row echelon rows (pivot 1, pivot columns
// cleared above and below, rows ordered by pivot column).
class RowSpace {
 public:
  RowSpace() = default;
  explicit RowSpace(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Reduces v against the rows in place; returns the residual.
  Vec reduce(Vec v) const {
    assert(v.size() == ambient_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = v[static_cast<std::size_t>(pivots_[r])];
      if (c != 0) {
        Rational f = c;  // pivot entry is 1
        const Vec& row = rows_[r];
        for (std::size_t k = static_cast<std::size_t>(pivots_[r]); k < ambient_; ++k) {
          if (row[k] != 0) v[k] -= f * row[k];
        }
      }
    }
    return v;
  }

  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

  // Inserts v if independent; returns true on growth.
  bool insert(Vec v) {
    v = reduce(std::move(v));
    int p = -1;
    for (std::size_t k = 0; k < ambient_; ++k) {
      if (v[k] != 0) {
        p = static_cast<int>(k);
        break;
      }
    }
    if (p < 0) return false;
    Rational inv = v[static_cast<std::size_t>(p)];
    for (auto& x : v) x /= inv;
    // clear the new pivot column in existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Rational c = rows_[r][static_cast<std::size_t>(p)];
      if (c != 0) {
        for (std::size_t k = 0; k < ambient_; ++k) {
          if (v[k] != 0) rows_[r][k] -= c * v[k];
        }
      }
    }
    // keep rows sorted by pivot column
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
  }

  bool operator==(const RowSpace& o) const {
    return ambient_ == o.ambient_ && pivots_ == o.pivots_ && rows_ == o.rows_;
  }
  bool operator!=(const RowSpace& o) const { return !(*this == o); }

  bool contains_space(const RowSpace& o) const {
    for (const auto& r : o.rows_) {
      if (!contains(r)) return false;
    }
    return true;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

inline RowSpace span_of(std::size_t ambient, const std::vector<Vec>& vecs) {
  RowSpace s(ambient);
  for (const auto& v : vecs) s.insert(v);
  return s;
}

inline RowSpace space_sum(const RowSpace& a, const RowSpace& b) {
  assert(a.ambient_dim() == b.ambient_dim());
  RowSpace s = a;
  for (const auto& r : b.rows()) s.insert(r);
  return s;
}

// Nullspace of the linear map Q^m -> Q^n given by m row vectors (the map
// sends coordinates c to sum c_i rows[i]). Returns a basis of coefficient
// vectors in Q^m.
inline std::vector<Vec> coefficient_kernel(const std::vector<Vec>& rows, std::size_t ambient) {
  const std::size_t m = rows.size();
  // Gaussian elimination on the m x ambient matrix, tracking row operations
  // on an identity block.
  std::vector<Vec> mat = rows;
  std::vector<Vec> ops(m, Vec(m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) ops[i][i] = 1;

  std::size_t rank = 0;
  for (std::size_t col = 0; col < ambient && rank < m; ++col) {
    std::size_t sel = m;
    for (std::size_t r = rank; r < m; ++r) {
      if (mat[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel == m) continue;
    std::swap(mat[sel], mat[rank]);
    std::swap(ops[sel], ops[rank]);
    Rational inv = mat[rank][col];
    for (auto& x : mat[rank]) x /= inv;
    for (auto& x : ops[rank]) x /= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank) continue;
      Rational c = mat[r][col];
      if (c != 0) {
        for (std::size_t k = 0; k < ambient; ++k) mat[r][k] -= c * mat[rank][k];
        for (std::size_t k = 0; k < m; ++k) ops[r][k] -= c * ops[rank][k];
      }
    }
    ++rank;
  }
  std::vector<Vec> kernel;
  for (std::size_t r = rank; r < m; ++r) kernel.push_back(ops[r]);
  return kernel;
}

// Intersection of two subspaces.
inline RowSpace space_intersect(const RowSpace& a, const RowSpace& b) {
  assert(a.ambient_dim() == b.ambient_dim());
  // x in a∩b  <=>  x = sum c_i a_i with residual 0 mod b.
  std::vector<Vec> residuals;
  residuals.reserve(a.dim());
  for (const auto& r : a.rows()) residuals.push_back(b.reduce(r));
  std::vector<Vec> combos = coefficient_kernel(residuals, a.ambient_dim());
  RowSpace out(a.ambient_dim());
  for (const auto& c : combos) {
    Vec x(a.ambient_dim(), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] != 0) {
        for (std::size_t k = 0; k < a.ambient_dim(); ++k) x[k] += c[i] * a.rows()[i][k];
      }
    }
    out.insert(std::move(x));
  }
  return out;
}

inline std::size_t rank_of(const std::vector<Vec>& vecs, std::size_t ambient) {
  return span_of(ambient, vecs).dim();
}

using SparseVec = std::vector<std::pair<int, Rational>>;  // sorted, no zeros

// Same RREF discipline as RowSpace but sparse, for subalgebra bases where
// almost every row is a unit path vector.
class SparseRowSpace {
 public:
  SparseRowSpace() = default;

  std::size_t dim() const { return rows_.size(); }

  std::map<int, Rational> reduce(const SparseVec& v) const {
    std::map<int, Rational> w(v.begin(), v.end());
    auto it = w.begin();
    while (it != w.end()) {
      auto p = pivot_index_.find(it->first);
      if (p == pivot_index_.end()) {
        ++it;
        continue;
      }
      const int col = it->first;
      const Rational c = it->second;
      for (const auto& [k, a] : rows_[static_cast<std::size_t>(p->second)]) {
        auto jt = w.find(k);
        if (jt == w.end()) {
          Rational x = -c * a;
          if (x != 0) w.emplace(k, std::move(x));
        } else {
          jt->second -= c * a;
          if (jt->second == 0) w.erase(jt);
        }
      }
      it = w.upper_bound(col);
    }
    return w;
  }

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  bool insert(const SparseVec& v) {
    std::map<int, Rational> w = reduce(v);
    if (w.empty()) return false;
    const int pivot = w.begin()->first;
    Rational inv = w.begin()->second;
    for (auto& [k, c] : w) c /= inv;
    for (auto& row : rows_) {
      auto jt = row.find(pivot);
      if (jt == row.end()) continue;
      Rational c = jt->second;
      for (const auto& [k, a] : w) {
        auto rt = row.find(k);
        if (rt == row.end()) {
          Rational x = -c * a;
          if (x != 0) row.emplace(k, std::move(x));
        } else {
          rt->second -= c * a;
          if (rt->second == 0) row.erase(rt);
        }
      }
    }
    pivot_index_[pivot] = static_cast<int>(rows_.size());
    rows_.emplace_back(w.begin(), w.end());
    return true;
  }

  // Rows in pivot order; canonical for equality tests.
  std::vector<SparseVec> canonical_rows() const {
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    for (const auto& [col, r] : pivot_index_) {
      const auto& row = rows_[static_cast<std::size_t>(r)];
      out.emplace_back(row.begin(), row.end());
    }
    return out;
  }

  bool operator==(const SparseRowSpace& o) const { return canonical_rows() == o.canonical_rows(); }
  bool operator!=(const SparseRowSpace& o) const { return !(*this == o); }

  bool contains_space(const SparseRowSpace& o) const {
    for (const auto& r : o.canonical_rows()) {
      if (!contains(r)) return false;
    }
    return true;
  }

 private:
  std::vector<std::map<int, Rational>> rows_;
  std::map<int, int> pivot_index_;
};

}  // namespace msa
