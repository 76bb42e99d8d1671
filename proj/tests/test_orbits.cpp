#include "msa/orbits.hpp"

#include <catch2/catch_amalgamated.hpp>

using msa::BinaryWord;
using msa::OrbitPartition;
using msa::PathAlgebra;
using msa::RepTag;
using msa::word_to_quiver;

namespace {

std::vector<std::vector<std::string>> block_strings(const OrbitPartition& p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& blk : p.blocks) {
    std::vector<std::string> b;
    for (const auto& t : blk) b.push_back(t.str());
    out.push_back(b);
  }
  return out;
}

OrbitPartition orbits_of(const std::string& word) {
  BinaryWord w = BinaryWord::parse(word);
  PathAlgebra B(word_to_quiver(w));
  std::vector<RepTag> tags;
  for (const auto& r : msa::enumerate_representatives(B)) tags.push_back(r.tag);
  return msa::orbits(B.quiver(), tags);
}

}  // namespace

TEST_CASE("trivial automorphism group gives singleton orbits") {
  OrbitPartition p = orbits_of("+++");
  REQUIRE(p.blocks.size() == 9);
  for (const auto& blk : p.blocks) REQUIRE(blk.size() == 1);
  REQUIRE(p.merges.empty());
}

TEST_CASE("the flip merges mirror tags on a symmetric word") {
  OrbitPartition p = orbits_of("+-");
  REQUIRE(block_strings(p) == std::vector<std::vector<std::string>>{
                                  {"A(-1,0)", "A(0,1)"}, {"A(-1,1)"}, {"A(-1)", "A(0)"}});
  REQUIRE_FALSE(p.merges.empty());
  REQUIRE(p.same_block(p.merges.front().from, p.merges.front().to));
}

TEST_CASE("single vertex has no representatives and no orbits") {
  OrbitPartition p = orbits_of("");
  REQUIRE(p.blocks.empty());
}

TEST_CASE("recorded merges really map one tag to the other") {
  for (const auto& s : {"+-", "-+", "++--", "+--+", "+-+-"}) {
    BinaryWord w = BinaryWord::parse(s);
    PathAlgebra B(word_to_quiver(w));
    std::vector<RepTag> tags;
    for (const auto& r : msa::enumerate_representatives(B)) tags.push_back(r.tag);
    OrbitPartition p = msa::orbits(B.quiver(), tags);
    for (const auto& merge : p.merges) {
      REQUIRE(msa::apply_to_tag(B.quiver(), merge.sigma, merge.from) == merge.to);
    }
  }
}

TEST_CASE("orbit sizes are at most two, two exactly off the mirror axis") {
  for (int len = 1; len <= 8; ++len) {
    for (const auto& w : msa::all_words(len)) {
      PathAlgebra B(word_to_quiver(w));
      std::vector<RepTag> tags;
      for (const auto& r : msa::enumerate_representatives(B)) tags.push_back(r.tag);
      OrbitPartition p = msa::orbits(B.quiver(), tags);
      bool symmetric = star(w) == w;
      std::size_t total = 0;
      for (const auto& blk : p.blocks) {
        total += blk.size();
        REQUIRE(blk.size() <= 2);
        if (!symmetric) REQUIRE(blk.size() == 1);
      }
      REQUIRE(total == tags.size());
    }
  }
}
