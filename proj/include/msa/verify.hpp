// The main-theorem harness: for every orientation word, the Aut(Q)-orbit
// partition of the canonical representatives must agree with the isomorphism
// partition on the representatives with connected Ext quiver.
//
// Along the way the harness checks, for every recorded orbit merge, that the
// automorphism transports one subalgebra exactly onto the other (same orbit
// implies isomorphic, connected or not), and it aborts if an exhausted
// isomorphism search ever contradicts an orbit merge.
#pragma once

#include "msa/isomorphism.hpp"
#include "msa/orbits.hpp"
#include "msa/word_calculus.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace msa {

struct RepInfo {
  RepTag tag;
  int dim = 0;
  bool connected = false;
  Quiver ext;
};

struct VerificationReport {
  BinaryWord word;
  int n = 0;
  std::vector<RepInfo> reps;
  OrbitPartition orbit_partition;
  std::vector<std::vector<RepTag>> isoclasses;  // on connected reps only
  bool pass = false;
  std::string counterexample;
  std::vector<std::string> notes;

  // soundness bookkeeping
  int certificates_verified = 0;
  int pairs_tested = 0;
};

namespace detail {

inline std::vector<std::vector<RepTag>> restrict_partition(
    const std::vector<std::vector<RepTag>>& blocks, const std::set<RepTag>& keep) {
  std::vector<std::vector<RepTag>> out;
  for (const auto& blk : blocks) {
    std::vector<RepTag> b;
    for (const auto& t : blk) {
      if (keep.count(t)) b.push_back(t);
    }
    if (!b.empty()) {
      std::sort(b.begin(), b.end());
      out.push_back(std::move(b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline VerificationReport verify_word(const BinaryWord& w) {
  VerificationReport rep;
  rep.word = w;
  rep.n = w.n_vertices();

  Quiver Q = word_to_quiver(w);
  PathAlgebra B(Q);
  std::vector<Representative> reps = enumerate_representatives(B);
  std::vector<RepTag> tags;
  for (const auto& r : reps) tags.push_back(r.tag);
  rep.orbit_partition = orbits(Q, tags);

  std::vector<QuadraticModel> models;
  models.reserve(reps.size());
  for (const auto& r : reps) models.push_back(quadratic_model(r.algebra));
  for (std::size_t k = 0; k < reps.size(); ++k) {
    RepInfo info;
    info.tag = reps[k].tag;
    info.dim = reps[k].algebra.dim();
    info.ext = models[k].gamma;
    info.connected = info.ext.connected();
    rep.reps.push_back(std::move(info));
    if (!rep.reps.back().connected)
      rep.notes.push_back(rep.reps.back().tag.str() + " has a disconnected Ext quiver");
  }

  // orbit merges transport subalgebras exactly
  for (const auto& merge : rep.orbit_partition.merges) {
    auto locate = [&](const RepTag& t) -> const Subalgebra& {
      for (const auto& r : reps) {
        if (r.tag == t) return r.algebra;
      }
      throw std::runtime_error("tag not found");
    };
    const Subalgebra& from = locate(merge.from);
    const Subalgebra& to = locate(merge.to);
    std::vector<int> pmap = B.path_map(merge.sigma, B);
    SparseRowSpace transported;
    for (const auto& row : from.span().canonical_rows()) {
      SparseVec img;
      for (const auto& [idx, c] : row) img.emplace_back(pmap[static_cast<std::size_t>(idx)], c);
      std::sort(img.begin(), img.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      transported.insert(img);
    }
    if (!(transported == to.span())) {
      rep.pass = false;
      rep.counterexample = "orbit merge " + merge.from.str() + " -> " + merge.to.str() +
                           " does not transport the subalgebra exactly";
      return rep;
    }
  }

  // pairwise isomorphism on all representatives; the partition itself is
  // formed on the connected ones
  std::vector<std::size_t> parent(reps.size());
  for (std::size_t k = 0; k < reps.size(); ++k) parent[k] = k;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  auto invariant_key = [&](std::size_t k) {
    return detail::dims_str(models[k].radical_layers) + "|" + quiver_invariant_key(models[k].gamma);
  };
  std::vector<std::string> keys;
  for (std::size_t k = 0; k < reps.size(); ++k) keys.push_back(invariant_key(k));

  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      bool both_connected = rep.reps[i].connected && rep.reps[j].connected;
      bool same_orbit = rep.orbit_partition.same_block(tags[i], tags[j]);
      if (keys[i] != keys[j] && !same_orbit) continue;  // cannot be isomorphic
      ++rep.pairs_tested;
      IsoCertificate cert = decide_isomorphism(models[i], models[j]);
      if (cert.isomorphic()) {
        ++rep.certificates_verified;
        if (cert.sigma && sigma_negates_all_labels(*cert.sigma, models[i].gamma, models[j].gamma)) {
          if (!(star(w) == w)) {
            throw std::runtime_error("label-negating certificate on a non-symmetric word: " + w.str());
          }
        }
        if (both_connected) {
          parent[std::max(find(i), find(j))] = std::min(find(i), find(j));
        } else if (!same_orbit) {
          rep.notes.push_back(tags[i].str() + " ~ " + tags[j].str() +
                              " isomorphic but in different orbits (disconnected; excluded "
                              "from the verdict)");
        }
      } else {
        if (same_orbit && cert.invariant == "exhausted-search") {
          throw std::runtime_error("soundness: exhausted search contradicts orbit merge for " +
                                   tags[i].str() + ", " + tags[j].str() + " on word " + w.str());
        }
        if (same_orbit) {
          throw std::runtime_error("soundness: orbit-merged pair reported NotIsomorphic (" +
                                   cert.invariant + ") for " + tags[i].str() + ", " + tags[j].str());
        }
      }
    }
  }

  std::set<RepTag> connected_tags;
  for (const auto& info : rep.reps) {
    if (info.connected) connected_tags.insert(info.tag);
  }
  std::map<std::size_t, std::vector<RepTag>> by_root;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    if (connected_tags.count(tags[k])) by_root[find(k)].push_back(tags[k]);
  }
  for (auto& [root, blk] : by_root) {
    std::sort(blk.begin(), blk.end());
    rep.isoclasses.push_back(std::move(blk));
  }
  std::sort(rep.isoclasses.begin(), rep.isoclasses.end());

  auto orbit_restricted = detail::restrict_partition(rep.orbit_partition.blocks, connected_tags);
  rep.pass = (orbit_restricted == rep.isoclasses);
  if (!rep.pass) {
    rep.counterexample = "orbit and isomorphism partitions differ on connected representatives";
  }
  return rep;
}

// Words of every length from 0 to max_n - 1, i.e. all type-A quivers on
// 1..max_n vertices.
inline std::vector<VerificationReport> verify_theorem(int max_n, int workers = 0) {
  if (max_n < 2) throw std::invalid_argument("verify_theorem needs max_n >= 2");
  std::vector<BinaryWord> words;
  for (int len = 0; len < max_n; ++len) {
    for (const auto& w : all_words(len)) words.push_back(w);
  }
  std::vector<VerificationReport> reports(words.size());
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers == 1) {
    for (std::size_t k = 0; k < words.size(); ++k) reports[k] = verify_word(words[k]);
    return reports;
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<std::thread> pool;
  std::atomic<bool> failed{false};
  std::string error_msg;
  std::mutex error_mutex;
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&]() {
      while (true) {
        std::size_t k = cursor.fetch_add(1);
        if (k >= words.size() || failed.load()) break;
        try {
          reports[k] = verify_word(words[k]);
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(error_mutex);
          failed.store(true);
          error_msg = e.what();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failed.load()) throw std::runtime_error(error_msg);
  return reports;
}

inline nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["word"] = r.word.str();
  j["n"] = r.n;
  j["reps"] = nlohmann::json::array();
  for (const auto& info : r.reps) {
    j["reps"].push_back({{"tag", info.tag.str()},
                         {"dim", info.dim},
                         {"connected", info.connected},
                         {"ext_quiver", quiver_to_json(info.ext)}});
  }
  auto blocks_json = [](const std::vector<std::vector<RepTag>>& blocks) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& blk : blocks) {
      nlohmann::json b = nlohmann::json::array();
      for (const auto& t : blk) b.push_back(t.str());
      out.push_back(b);
    }
    return out;
  };
  j["orbits"] = blocks_json(r.orbit_partition.blocks);
  j["isoclasses"] = blocks_json(r.isoclasses);
  j["verdict"] = r.pass ? "pass" : "fail";
  j["notes"] = r.notes;
  return j;
}

}  // namespace msa
