// Bound quiver presentations of maximal subalgebras.
//
// Separable type: glue the two vertices; relations are the length-2
// compositions through the glued vertex that die in the subalgebra (arrow
// into u followed by arrow out of v, and vice versa), plus the image of any
// supplied ambient ideal as generalized (possibly non-admissible) relations.
//
// Split type (hereditary ambient only): drop the split arrow span down to U,
// and add shortcut arrows bar(g) = g * c and under(g) = c * g for the
// complement generator c of U, with the commutation relations
// bar(b) g - b under(g).
#pragma once

#include "msa/maxsub.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace msa {

struct RelationTerm {
  std::vector<int> arrows;  // path in the presentation quiver, as arrow ids
  Rational coeff = Rational(1);
};
using Relation = std::vector<RelationTerm>;

struct Presentation {
  Quiver gamma;
  std::vector<Relation> relations;
  std::vector<Relation> generalized_relations;  // may not be admissible
  std::map<int, Element> arrow_dict;            // gamma arrow id -> element of A
  std::map<int, Element> vertex_dict;           // gamma vertex index -> idempotent of A
};

// ---------------------------------------------------------------------------
// Finite-dimensional quotients k(gamma)/(relations) with homogeneous
// relations of degree >= 2. Used to verify presentations by graded dimension
// count and to realize presented algebras concretely.
// ---------------------------------------------------------------------------
class BoundQuiverAlgebra {
 public:
  struct GPath {
    int src = 0, tgt = 0;
    std::vector<int> arrows;
  };

  BoundQuiverAlgebra(Quiver gamma, std::vector<Relation> relations, int degree_cap = 64)
      : gamma_(std::move(gamma)), relations_(std::move(relations)) {
    for (const auto& rel : relations_) validate_relation(rel);
    build(degree_cap);
  }

  const Quiver& quiver() const { return gamma_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  // dim of degree-d piece of the quotient
  const std::vector<int>& graded_dims() const { return graded_dims_; }
  int max_degree() const { return static_cast<int>(graded_dims_.size()) - 1; }

  int num_paths(int degree) const {
    return degree < static_cast<int>(paths_.size())
               ? static_cast<int>(paths_[static_cast<std::size_t>(degree)].size())
               : 0;
  }
  int ideal_dim(int degree) const {
    return degree < static_cast<int>(ideal_.size())
               ? static_cast<int>(ideal_[static_cast<std::size_t>(degree)].dim())
               : 0;
  }

  // basis access: pairs (degree, path)
  const std::vector<std::pair<int, GPath>>& basis() const { return basis_; }

  // Coefficients of path modulo the ideal, over the quotient basis.
  Vec reduce_path(int degree, const GPath& p) const {
    const auto& level = paths_[static_cast<std::size_t>(degree)];
    std::size_t idx = path_pos(degree, p);
    Vec unit(level.size(), Rational(0));
    unit[idx] = 1;
    Vec residual = ideal_[static_cast<std::size_t>(degree)].reduce(std::move(unit));
    Vec out(basis_.size(), Rational(0));
    for (std::size_t k = 0; k < level.size(); ++k) {
      if (residual[k] != 0) {
        auto it = basis_pos_.find({degree, static_cast<int>(k)});
        if (it == basis_pos_.end()) throw std::runtime_error("reduction left a non-basis path");
        out[it->second] = residual[k];
      }
    }
    return out;
  }

  // Product of two quotient-basis elements, as coefficients over the basis.
  Vec mult_basis(std::size_t i, std::size_t j) const {
    const auto& [di, pi] = basis_[i];
    const auto& [dj, pj] = basis_[j];
    Vec zero(basis_.size(), Rational(0));
    if (pi.tgt != pj.src) return zero;
    int d = di + dj;
    GPath prod;
    prod.src = pi.src;
    prod.tgt = pj.tgt;
    prod.arrows = pi.arrows;
    prod.arrows.insert(prod.arrows.end(), pj.arrows.begin(), pj.arrows.end());
    if (d >= static_cast<int>(paths_.size())) return zero;  // beyond top nonzero degree
    return reduce_path(d, prod);
  }

 private:
  void validate_relation(const Relation& rel) const {
    if (rel.empty()) throw std::invalid_argument("empty relation");
    int deg = static_cast<int>(rel.front().arrows.size());
    if (deg < 2) throw std::invalid_argument("relation of degree < 2 is not admissible");
    auto ends = [&](const RelationTerm& t) {
      int s = gamma_.arrows[static_cast<std::size_t>(t.arrows.front())].src;
      int e = gamma_.arrows[static_cast<std::size_t>(t.arrows.back())].tgt;
      for (std::size_t k = 0; k + 1 < t.arrows.size(); ++k) {
        if (gamma_.arrows[static_cast<std::size_t>(t.arrows[k])].tgt !=
            gamma_.arrows[static_cast<std::size_t>(t.arrows[k + 1])].src)
          throw std::invalid_argument("relation term is not a path");
      }
      return std::pair<int, int>{s, e};
    };
    auto [s0, e0] = ends(rel.front());
    for (const auto& t : rel) {
      if (static_cast<int>(t.arrows.size()) != deg)
        throw std::invalid_argument("relation is not homogeneous");
      auto [s, e] = ends(t);
      if (s != s0 || e != e0) throw std::invalid_argument("relation terms have mixed endpoints");
    }
  }

  std::size_t path_pos(int degree, const GPath& p) const {
    auto it = path_index_[static_cast<std::size_t>(degree)].find(p.arrows.empty()
                                                                     ? std::vector<int>{-1 - p.src}
                                                                     : p.arrows);
    if (it == path_index_[static_cast<std::size_t>(degree)].end())
      throw std::runtime_error("unknown path");
    return it->second;
  }

  void build(int degree_cap) {
    // paths level by level
    std::vector<GPath> level;
    for (int v = 0; v < gamma_.num_vertices(); ++v) level.push_back(GPath{v, v, {}});
    int degree = 0;
    std::vector<int> quotient_dims;
    while (!level.empty()) {
      if (degree > degree_cap) throw std::runtime_error("presentation quotient does not terminate");
      paths_.push_back(level);
      path_index_.emplace_back();
      for (std::size_t k = 0; k < level.size(); ++k) {
        const auto& p = level[k];
        path_index_.back()[p.arrows.empty() ? std::vector<int>{-1 - p.src} : p.arrows] = k;
      }
      // degree-d component of the relation ideal
      RowSpace comp(level.size());
      for (const auto& rel : relations_) {
        int g = static_cast<int>(rel.front().arrows.size());
        if (g > degree) continue;
        int rs = gamma_.arrows[static_cast<std::size_t>(rel.front().arrows.front())].src;
        int rt = gamma_.arrows[static_cast<std::size_t>(rel.front().arrows.back())].tgt;
        for (int a = 0; a + g <= degree; ++a) {
          int b = degree - g - a;
          for (const auto& p : paths_[static_cast<std::size_t>(a)]) {
            if (p.tgt != rs) continue;
            for (const auto& q : paths_[static_cast<std::size_t>(b)]) {
              if (q.src != rt) continue;
              Vec row(level.size(), Rational(0));
              for (const auto& t : rel) {
                GPath full;
                full.src = p.src;
                full.tgt = q.tgt;
                full.arrows = p.arrows;
                full.arrows.insert(full.arrows.end(), t.arrows.begin(), t.arrows.end());
                full.arrows.insert(full.arrows.end(), q.arrows.begin(), q.arrows.end());
                row[path_pos(degree, full)] += t.coeff;
              }
              comp.insert(std::move(row));
            }
          }
        }
      }
      int qdim = static_cast<int>(level.size() - comp.dim());
      ideal_.push_back(std::move(comp));
      quotient_dims.push_back(qdim);
      if (qdim == 0 && degree > 0) {
        // once a graded piece vanishes, everything above it does too
        // (the algebra is generated in degree 1 over degree 0)
        paths_.pop_back();
        path_index_.pop_back();
        ideal_.pop_back();
        quotient_dims.pop_back();
        break;
      }
      // next level
      std::vector<GPath> next;
      for (const auto& p : level) {
        for (const auto& a : gamma_.arrows) {
          if (a.src != p.tgt) continue;
          GPath q = p;
          q.arrows.push_back(a.id);
          q.tgt = a.tgt;
          next.push_back(q);
        }
      }
      level = std::move(next);
      ++degree;
      if (paths_.size() > 1 && paths_.back().size() > 100000)
        throw std::runtime_error("path explosion in bound quiver");
    }
    graded_dims_ = std::move(quotient_dims);
    // select basis: non-pivot paths per degree
    for (int d = 0; d < static_cast<int>(paths_.size()); ++d) {
      const auto& piv = ideal_[static_cast<std::size_t>(d)].pivots();
      std::size_t pk = 0;
      for (std::size_t k = 0; k < paths_[static_cast<std::size_t>(d)].size(); ++k) {
        if (pk < piv.size() && piv[pk] == static_cast<int>(k)) {
          ++pk;
          continue;
        }
        basis_pos_[{d, static_cast<int>(k)}] = basis_.size();
        basis_.emplace_back(d, paths_[static_cast<std::size_t>(d)][k]);
      }
    }
  }

  Quiver gamma_;
  std::vector<Relation> relations_;
  std::vector<std::vector<GPath>> paths_;                       // by degree
  std::vector<std::map<std::vector<int>, std::size_t>> path_index_;  // by degree
  std::vector<RowSpace> ideal_;                                 // by degree
  std::vector<int> graded_dims_;
  std::vector<std::pair<int, GPath>> basis_;
  std::map<std::pair<int, int>, std::size_t> basis_pos_;  // (degree, path idx) -> basis idx
};

// ---------------------------------------------------------------------------
// Presentation soundness: graded dimensions of k(gamma)/(relations) match the
// radical filtration of A, and the dictionary generates A.
// ---------------------------------------------------------------------------
inline void check_presentation(const Presentation& P, const Subalgebra& A) {
  if (!P.generalized_relations.empty()) return;  // non-admissible quotient, nothing to certify
  BoundQuiverAlgebra bq(P.gamma, P.relations);
  std::vector<int> layer_dims = A.radical_power_dims();  // [dim A, dim J, ...]
  std::vector<int> expected;                             // dim J^d / J^{d+1}
  for (std::size_t r = 0; r + 1 < layer_dims.size(); ++r)
    expected.push_back(layer_dims[r] - layer_dims[r + 1]);
  if (bq.graded_dims() != expected) throw std::runtime_error("presentation graded dimensions differ");

  // endpoint compatibility and generation
  const PathAlgebra& B = A.ambient();
  std::vector<Element> gens;
  for (const auto& [vid, e] : P.vertex_dict) {
    if (!A.contains(e)) throw std::runtime_error("presentation vertex image not in subalgebra");
    gens.push_back(e);
  }
  for (const auto& a : P.gamma.arrows) {
    const Element& x = P.arrow_dict.at(a.id);
    if (!A.contains(x)) throw std::runtime_error("presentation arrow image not in subalgebra");
    const Element& eu = P.vertex_dict.at(a.src);
    const Element& ev = P.vertex_dict.at(a.tgt);
    if (!(multiply(B, multiply(B, eu, x), ev) == x))
      throw std::runtime_error("presentation arrow image has wrong endpoints");
    gens.push_back(x);
  }
  Subalgebra generated = Subalgebra::from_spanning_set(B, gens);
  if (generated.dim() != A.dim() || !A.span().contains_space(generated.span()))
    throw std::runtime_error("presentation dictionary does not generate the subalgebra");

  // relations actually hold under the dictionary
  auto eval_term = [&](const RelationTerm& t) {
    Element acc = P.vertex_dict.at(P.gamma.arrows[static_cast<std::size_t>(t.arrows.front())].src);
    for (int aid : t.arrows) acc = multiply(B, acc, P.arrow_dict.at(aid));
    return acc * t.coeff;
  };
  for (const auto& rel : P.relations) {
    Element sum;
    for (const auto& t : rel) sum += eval_term(t);
    if (!sum.is_zero()) throw std::runtime_error("presentation relation does not vanish");
  }
}

// ---------------------------------------------------------------------------
// Separable type (Prop. gluing construction).
// ideal_gens: generators of the ambient ideal as relations in Q's arrows;
// their images are appended verbatim as generalized relations.
// ---------------------------------------------------------------------------
inline Presentation present_separable(const PathAlgebra& B, const SeparableSpec& spec,
                                      const std::vector<Relation>& ideal_gens = {}) {
  const Quiver& Q = B.quiver();
  if (spec.u == spec.v) throw std::invalid_argument("separable spec needs two distinct vertices");
  const int glue_at = std::min(spec.u, spec.v);
  const int drop = std::max(spec.u, spec.v);

  Presentation P;
  std::vector<int> vmap(static_cast<std::size_t>(Q.num_vertices()), -1);
  for (int v = 0; v < Q.num_vertices(); ++v) {
    if (v == drop) continue;
    int idx = static_cast<int>(P.gamma.vertices.size());
    if (v == glue_at) {
      VertexLabel lab;
      for (int part : Q.vertices[static_cast<std::size_t>(spec.u)].parts) lab.parts.push_back(part);
      for (int part : Q.vertices[static_cast<std::size_t>(spec.v)].parts) lab.parts.push_back(part);
      std::sort(lab.parts.begin(), lab.parts.end());
      P.gamma.vertices.push_back(lab);
    } else {
      P.gamma.vertices.push_back(Q.vertices[static_cast<std::size_t>(v)]);
    }
    vmap[static_cast<std::size_t>(v)] = idx;
  }
  vmap[static_cast<std::size_t>(drop)] = vmap[static_cast<std::size_t>(glue_at)];

  for (const auto& a : Q.arrows) {
    Arrow g = a;  // same ids: the arrow bijection phi is the identity on ids
    g.src = vmap[static_cast<std::size_t>(a.src)];
    g.tgt = vmap[static_cast<std::size_t>(a.tgt)];
    P.gamma.arrows.push_back(g);
    P.arrow_dict[a.id] = Element::basis(B.arrow_path_index(a.id));
  }
  for (int v = 0; v < Q.num_vertices(); ++v) {
    if (v == drop) continue;
    P.vertex_dict[vmap[static_cast<std::size_t>(v)]] =
        (v == glue_at) ? vertex_idempotent(B, spec.u) + vertex_idempotent(B, spec.v)
                       : vertex_idempotent(B, v);
  }

  auto add_relations = [&](int into, int outof) {
    for (const auto& a : Q.arrows) {
      if (a.tgt != into) continue;
      for (const auto& b : Q.arrows) {
        if (b.src != outof) continue;
        P.relations.push_back(Relation{RelationTerm{{a.id, b.id}, Rational(1)}});
      }
    }
  };
  add_relations(spec.u, spec.v);
  add_relations(spec.v, spec.u);
  std::sort(P.relations.begin(), P.relations.end(), [](const Relation& x, const Relation& y) {
    return x.front().arrows < y.front().arrows;
  });
  for (const auto& r : ideal_gens) P.generalized_relations.push_back(r);
  return P;
}

// ---------------------------------------------------------------------------
// Split type over a hereditary ambient (Prop. arrow surgery).
// complement: optional generator of a complement of U inside the arrow span
// u->v; defaults to the lowest-id arrow outside the echelonized span of U.
// ---------------------------------------------------------------------------
inline Presentation present_split_hereditary(const PathAlgebra& B, const SplitSpec& spec,
                                             std::optional<Element> complement = std::nullopt) {
  if (!B.hereditary())
    throw std::invalid_argument("split presentations need a hereditary ambient algebra");
  const Quiver& Q = B.quiver();
  std::vector<int> uv_arrows = arrows_between(Q, spec.u, spec.v);
  if (uv_arrows.empty()) throw std::invalid_argument("split spec needs at least one arrow u->v");

  SparseRowSpace u_span;
  for (const auto& x : spec.U) u_span.insert(x.terms());
  if (u_span.dim() + 1 != uv_arrows.size())
    throw std::invalid_argument("U is not codimension 1 in the arrow span u->v");

  Element comp;
  if (complement) {
    comp = *complement;
    SparseRowSpace full = u_span;
    if (!full.insert(comp.terms()))
      throw std::invalid_argument("complement generator lies in the span of U");
  } else {
    for (int aid : uv_arrows) {
      Element cand = Element::basis(B.arrow_path_index(aid));
      if (!u_span.contains(cand.terms())) {
        comp = cand;
        break;
      }
    }
    if (comp.is_zero()) throw std::invalid_argument("no complement generator found");
  }

  Presentation P;
  P.gamma.vertices = Q.vertices;
  for (int v = 0; v < Q.num_vertices(); ++v) P.vertex_dict[v] = vertex_idempotent(B, v);

  int next_id = 0;
  auto add_arrow = [&](int src, int tgt, const std::string& name, const Element& img) {
    Arrow a;
    a.id = next_id++;
    a.src = src;
    a.tgt = tgt;
    a.name = name;
    P.gamma.arrows.push_back(a);
    P.arrow_dict[a.id] = img;
    return a.id;
  };

  // kept arrows u->v: the echelonized basis of U
  auto u_rows = u_span.canonical_rows();
  for (std::size_t k = 0; k < u_rows.size(); ++k) {
    add_arrow(spec.u, spec.v, "u" + std::to_string(k), Element(u_rows[k]));
  }
  // all arrows not from u to v survive unchanged
  std::map<int, int> kept;  // Q arrow id -> gamma arrow id
  for (const auto& a : Q.arrows) {
    if (a.src == spec.u && a.tgt == spec.v) continue;
    kept[a.id] = add_arrow(a.src, a.tgt, a.name, Element::basis(B.arrow_path_index(a.id)));
  }
  // shortcut arrows through the complement generator
  std::map<int, int> bar, under;  // Q arrow id -> gamma arrow id
  for (const auto& g : Q.arrows) {
    if (g.tgt != spec.u) continue;
    Element img = multiply(B, Element::basis(B.arrow_path_index(g.id)), comp);
    bar[g.id] = add_arrow(g.src, spec.v, "bar(" + g.name + ")", img);
  }
  for (const auto& g : Q.arrows) {
    if (g.src != spec.v) continue;
    Element img = multiply(B, comp, Element::basis(B.arrow_path_index(g.id)));
    under[g.id] = add_arrow(spec.u, g.tgt, "under(" + g.name + ")", img);
  }
  // relations bar(b) g - b under(g)
  for (const auto& b : Q.arrows) {
    if (b.tgt != spec.u) continue;
    for (const auto& g : Q.arrows) {
      if (g.src != spec.v) continue;
      Relation rel;
      rel.push_back(RelationTerm{{bar.at(b.id), kept.at(g.id)}, Rational(1)});
      rel.push_back(RelationTerm{{kept.at(b.id), under.at(g.id)}, Rational(-1)});
      P.relations.push_back(std::move(rel));
    }
  }
  return P;
}

// ---------------------------------------------------------------------------
// Structural comparison of presentations: some quiver isomorphism must carry
// the relation spans of one onto the other, component by component. Labels
// and arrow names are ignored.
// ---------------------------------------------------------------------------
namespace detail {

inline std::vector<std::vector<int>> paths_of_degree(const Quiver& q, int src, int tgt, int deg) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int at, int remaining) -> void {
    if (remaining == 0) {
      if (at == tgt) out.push_back(cur);
      return;
    }
    for (const auto& a : q.arrows) {
      if (a.src != at) continue;
      cur.push_back(a.id);
      self(self, a.tgt, remaining - 1);
      cur.pop_back();
    }
  };
  dfs(dfs, src, deg);
  return out;
}

struct RelationGroupKey {
  int src, tgt, deg;
  bool operator<(const RelationGroupKey& o) const {
    return std::tie(src, tgt, deg) < std::tie(o.src, o.tgt, o.deg);
  }
};

inline std::map<RelationGroupKey, std::vector<Relation>> group_relations(const Presentation& p) {
  std::map<RelationGroupKey, std::vector<Relation>> out;
  auto add = [&](const Relation& rel) {
    const auto& t = rel.front();
    int s = p.gamma.arrows[static_cast<std::size_t>(t.arrows.front())].src;
    int e = p.gamma.arrows[static_cast<std::size_t>(t.arrows.back())].tgt;
    out[{s, e, static_cast<int>(t.arrows.size())}].push_back(rel);
  };
  for (const auto& r : p.relations) add(r);
  for (const auto& r : p.generalized_relations) add(r);
  return out;
}

inline RowSpace relation_span(const std::vector<Relation>& rels,
                              const std::vector<std::vector<int>>& paths,
                              const std::vector<int>* arrow_map = nullptr) {
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = i;
  RowSpace span(paths.size());
  for (const auto& rel : rels) {
    Vec row(paths.size(), Rational(0));
    for (const auto& t : rel) {
      std::vector<int> path = t.arrows;
      if (arrow_map) {
        for (int& a : path) a = (*arrow_map)[static_cast<std::size_t>(a)];
      }
      auto it = index.find(path);
      if (it == index.end()) throw std::runtime_error("relation path missing from component");
      row[it->second] += t.coeff;
    }
    span.insert(std::move(row));
  }
  return span;
}

}  // namespace detail

inline bool presentations_structurally_equal(const Presentation& a, const Presentation& b) {
  auto ga = detail::group_relations(a);
  auto gb = detail::group_relations(b);
  if (ga.size() != gb.size()) return false;
  for (const auto& sigma : quiver_isomorphisms(a.gamma, b.gamma)) {
    bool ok = true;
    std::set<detail::RelationGroupKey> matched;
    for (const auto& [key, rels] : ga) {
      detail::RelationGroupKey ikey{sigma.vertex[static_cast<std::size_t>(key.src)],
                                    sigma.vertex[static_cast<std::size_t>(key.tgt)], key.deg};
      auto it = gb.find(ikey);
      if (it == gb.end()) {
        ok = false;
        break;
      }
      matched.insert(ikey);
      auto bpaths = detail::paths_of_degree(b.gamma, ikey.src, ikey.tgt, ikey.deg);
      RowSpace mapped = detail::relation_span(rels, bpaths, &sigma.arrow);
      RowSpace target = detail::relation_span(it->second, bpaths);
      if (mapped != target) {
        ok = false;
        break;
      }
    }
    if (ok && matched.size() == gb.size()) return true;
  }
  return false;
}

// Presentation of a canonical representative of a type-A path algebra.
inline Presentation present_representative(const PathAlgebra& B, const RepTag& tag) {
  const Quiver& Q = B.quiver();
  if (tag.kind == RepTag::Kind::Separable) {
    return present_separable(B, SeparableSpec{Q.vertex_index(tag.i), Q.vertex_index(tag.j)});
  }
  for (const auto& arr : Q.arrows) {
    int lo = std::min(Q.vertices[static_cast<std::size_t>(arr.src)].parts.at(0),
                      Q.vertices[static_cast<std::size_t>(arr.tgt)].parts.at(0));
    if (lo == tag.i) return present_split_hereditary(B, SplitSpec{arr.src, arr.tgt, {}});
  }
  throw std::invalid_argument("split tag does not name an edge: " + tag.str());
}

inline nlohmann::json relation_to_json(const Relation& rel) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : rel) {
    out.push_back({{"path", t.arrows}, {"coeff", rational_str(t.coeff)}});
  }
  return out;
}

inline Relation relation_from_json(const nlohmann::json& j) {
  Relation rel;
  for (const auto& t : j) {
    RelationTerm term;
    term.arrows = t.at("path").get<std::vector<int>>();
    term.coeff = parse_rational(t.at("coeff").get<std::string>());
    rel.push_back(term);
  }
  return rel;
}

inline nlohmann::json presentation_to_json(const Presentation& p) {
  nlohmann::json j;
  j["quiver"] = quiver_to_json(p.gamma);
  j["relations"] = nlohmann::json::array();
  for (const auto& r : p.relations) j["relations"].push_back(relation_to_json(r));
  if (!p.generalized_relations.empty()) {
    j["generalized_relations"] = nlohmann::json::array();
    for (const auto& r : p.generalized_relations)
      j["generalized_relations"].push_back(relation_to_json(r));
  }
  j["arrow_dict"] = nlohmann::json::object();
  for (const auto& [id, e] : p.arrow_dict) j["arrow_dict"][std::to_string(id)] = element_to_json(e);
  return j;
}

inline Presentation presentation_from_json(const nlohmann::json& j) {
  Presentation p;
  p.gamma = quiver_from_json(j.at("quiver"));
  for (const auto& r : j.at("relations")) p.relations.push_back(relation_from_json(r));
  if (j.contains("generalized_relations")) {
    for (const auto& r : j.at("generalized_relations"))
      p.generalized_relations.push_back(relation_from_json(r));
  }
  if (j.contains("arrow_dict")) {
    for (auto it = j.at("arrow_dict").begin(); it != j.at("arrow_dict").end(); ++it) {
      p.arrow_dict[std::stoi(it.key())] = element_from_json(it.value());
    }
  }
  return p;
}

}  // namespace msa
