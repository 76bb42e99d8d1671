// Orientation words of type-A quivers and the signed vertex/position
// labeling that goes with them.
//
// A quiver whose underlying graph is the n-vertex path is encoded by a word
// of n-1 signs. Vertices are labeled v_{-m},...,v_m with 0 skipped when
// n = 2m is even and included when n = 2m+1 is odd. Letter i sits on the
// edge between v_i and its successor and is +1 exactly when that edge
// points away from v_i. Letter positions therefore run over the vertex
// labels minus the last one.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace msa {

// The signed labeling for an n-vertex type-A quiver.
class TypeALabels {
 public:
  explicit TypeALabels(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("type-A labeling needs n >= 1");
    even_ = (n % 2 == 0);
    m_ = even_ ? n / 2 : (n - 1) / 2;
  }

  int n() const { return n_; }
  int m() const { return m_; }
  bool even() const { return even_; }

  // storage index (0-based, left to right) -> signed label
  int label_at(int index) const {
    if (index < 0 || index >= n_) throw std::out_of_range("vertex index out of range");
    int lab = index - m_;
    if (even_ && lab >= 0) ++lab;  // no label 0 when n is even
    return lab;
  }

  int index_of(int label) const {
    if (!is_label(label)) throw std::out_of_range("not a vertex label: " + std::to_string(label));
    int idx = label + m_;
    if (even_ && label > 0) --idx;
    return idx;
  }

  bool is_label(int label) const {
    if (label < -m_ || label > m_) return false;
    if (even_ && label == 0) return false;
    return true;
  }

  std::optional<int> succ(int label) const {
    int idx = index_of(label);
    if (idx + 1 >= n_) return std::nullopt;
    return label_at(idx + 1);
  }

  std::optional<int> pred(int label) const {
    int idx = index_of(label);
    if (idx == 0) return std::nullopt;
    return label_at(idx - 1);
  }

  std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) out.push_back(label_at(i));
    return out;
  }

 private:
  int n_;
  int m_;
  bool even_;
};

class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int s : letters_) {
      if (s != 1 && s != -1) throw std::invalid_argument("binary word letters must be +1/-1");
    }
  }
  static BinaryWord parse(const std::string& s) {
    std::vector<int> v;
    v.reserve(s.size());
    for (char c : s) {
      if (c == '+')
        v.push_back(1);
      else if (c == '-')
        v.push_back(-1);
      else
        throw std::invalid_argument(std::string("bad word character '") + c + "'");
    }
    return BinaryWord(std::move(v));
  }

  int length() const { return static_cast<int>(letters_.size()); }
  int n_vertices() const { return length() + 1; }
  TypeALabels labels() const { return TypeALabels(n_vertices()); }

  // Letter by storage index (0 = leftmost = w(-m)).
  int at_index(int k) const { return letters_.at(static_cast<std::size_t>(k)); }

  // Letter by signed position. Positions are the vertex labels without the
  // rightmost one.
  int at_position(int pos) const {
    TypeALabels lab = labels();
    int idx = lab.index_of(pos);
    if (idx >= length()) throw std::out_of_range("not a letter position");
    return letters_[static_cast<std::size_t>(idx)];
  }

  int position_at(int k) const { return labels().label_at(k); }

  bool is_position(int pos) const {
    TypeALabels lab = labels();
    return lab.is_label(pos) && lab.index_of(pos) < length();
  }

  std::vector<int> positions() const {
    std::vector<int> out;
    for (int k = 0; k < length(); ++k) out.push_back(position_at(k));
    return out;
  }

  const std::vector<int>& raw() const { return letters_; }

  std::string str() const {
    std::string s;
    s.reserve(letters_.size());
    for (int v : letters_) s.push_back(v > 0 ? '+' : '-');
    return s;
  }

  bool operator==(const BinaryWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const BinaryWord& o) const { return !(*this == o); }

 private:
  std::vector<int> letters_;
};

// w*(i) = -w(pred(-i)): the orientation word of the reflected quiver.
// On raw letters this is reverse-and-negate; the position formula is kept
// as a property test.
inline BinaryWord star(const BinaryWord& w) {
  std::vector<int> out(w.raw().rbegin(), w.raw().rend());
  for (int& s : out) s = -s;
  return BinaryWord(std::move(out));
}

inline BinaryWord concat(const BinaryWord& a, const BinaryWord& b) {
  std::vector<int> v = a.raw();
  v.insert(v.end(), b.raw().begin(), b.raw().end());
  return BinaryWord(std::move(v));
}

// All words of a given length in deterministic order ("+++...", then
// flipping letters from the right as a binary counter with '-' = 1).
inline std::vector<BinaryWord> all_words(int length) {
  if (length < 0) throw std::invalid_argument("negative word length");
  std::vector<BinaryWord> out;
  const unsigned long total = 1ul << length;
  out.reserve(total);
  for (unsigned long bits = 0; bits < total; ++bits) {
    std::vector<int> letters(static_cast<std::size_t>(length));
    for (int k = 0; k < length; ++k) {
      letters[static_cast<std::size_t>(k)] = (bits >> (length - 1 - k)) & 1ul ? -1 : 1;
    }
    out.emplace_back(std::move(letters));
  }
  return out;
}

}  // namespace msa
