#pragma once

// Alternating multi-indices: signed sorting, canonical bases of wedge powers
// and the block-wise canonical form used to store cochains.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nlr/exact.hpp"

namespace nlr {

using Index = std::vector<std::size_t>;

struct SignedIndex {
  int sign = 0;  // 0 when the tuple has a repeated entry
  Index canonical;
};

inline std::string to_string(const Index& idx) {
  std::string out = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(idx[i]);
  }
  return out + ")";
}

/// Sorts a tuple and records the parity of the sorting permutation.
inline SignedIndex canonical_index(Index tuple, std::size_t ambient_dim) {
  for (auto i : tuple)
    if (i >= ambient_dim)
      throw DimensionError("index " + std::to_string(i) + " out of range for dimension " +
                           std::to_string(ambient_dim));
  int sign = 1;
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
      if (tuple[j - 1] == tuple[j]) return {0, {}};
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  }
  return {sign, std::move(tuple)};
}

/// All strictly increasing k-tuples below d, lexicographic.
inline std::vector<Index> enumerate_blocks(std::size_t d, std::size_t k) {
  std::vector<Index> out;
  if (k > d) return out;
  Index cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == d - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Canonical basis of the k-th wedge power of a d-dimensional space.
class BlockBasis {
 public:
  BlockBasis() = default;
  BlockBasis(std::size_t d, std::size_t k) : d_(d), k_(k), blocks_(enumerate_blocks(d, k)) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) pos_.emplace(blocks_[i], i);
  }

  std::size_t ambient() const { return d_; }
  std::size_t arity() const { return k_; }
  std::size_t size() const { return blocks_.size(); }
  const Index& operator[](std::size_t i) const { return blocks_[i]; }
  const std::vector<Index>& blocks() const { return blocks_; }

  /// Position of an already canonical block.
  std::size_t rank(const Index& canonical) const {
    auto it = pos_.find(canonical);
    if (it == pos_.end()) throw DimensionError("block " + to_string(canonical) + " is not canonical");
    return it->second;
  }

  /// Sign and position of an arbitrary tuple; sign 0 on repeats.
  std::pair<int, std::size_t> locate(const Index& tuple) const {
    SignedIndex s = canonical_index(tuple, d_);
    if (s.sign == 0) return {0, 0};
    return {s.sign, rank(s.canonical)};
  }

  /// Coordinates of v_1 ∧ … ∧ v_k in this basis.
  Vector wedge(const std::vector<Vector>& vs) const {
    if (vs.size() != k_) throw DimensionError("wedge: expected " + std::to_string(k_) + " factors");
    Vector out(size());
    Index tuple(k_);
    wedge_rec(vs, 0, Scalar(1), tuple, out);
    return out;
  }

 private:
  void wedge_rec(const std::vector<Vector>& vs, std::size_t slot, const Scalar& coef, Index& tuple,
                 Vector& out) const {
    if (slot == k_) {
      auto [sign, pos] = locate(tuple);
      if (sign != 0) out[pos] += sign * coef;
      return;
    }
    const Vector& v = vs[slot];
    if (v.size() != d_) throw DimensionError("wedge: factor length mismatch");
    for (std::size_t i = 0; i < d_; ++i) {
      if (sgn(v[i]) == 0) continue;
      tuple[slot] = i;
      wedge_rec(vs, slot + 1, coef * v[i], tuple, out);
    }
  }

  std::size_t d_ = 0;
  std::size_t k_ = 0;
  std::vector<Index> blocks_;
  std::map<Index, std::size_t> pos_;
};

struct BlockTuple {
  std::vector<Index> blocks;
  std::size_t last = 0;
  friend bool operator==(const BlockTuple&, const BlockTuple&) = default;
};

/// Sorts each block independently; blocks keep their order and the final
/// argument is left alone. Sign 0 when a block repeats an index.
inline std::pair<int, BlockTuple> block_canonicalize(const BlockTuple& args, std::size_t n,
                                                     std::size_t ambient_dim) {
  if (n < 2) throw DimensionError("block_canonicalize: arity must be at least 2");
  if (args.last >= ambient_dim) throw DimensionError("block_canonicalize: final index out of range");
  int sign = 1;
  BlockTuple out;
  out.last = args.last;
  for (const auto& b : args.blocks) {
    if (b.size() != n - 1)
      throw DimensionError("block_canonicalize: block of size " + std::to_string(b.size()) +
                           ", expected " + std::to_string(n - 1));
    SignedIndex s = canonical_index(b, ambient_dim);
    if (s.sign == 0) return {0, {}};
    sign *= s.sign;
    out.blocks.push_back(std::move(s.canonical));
  }
  return {sign, std::move(out)};
}

}  // namespace nlr
