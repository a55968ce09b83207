#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ktypes {

/// Fixed-length bit vector used for atom sets, diagram sets and relation
/// tables. The ordering compares population count first and then the sorted
/// list of set indices lexicographically, which gives the canonical listing
/// order for diagrams ({} first, then singletons in atom order, ...).
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void reset(std::size_t i) { set(i, false); }
  void set_all();

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }

  bool is_subset_of(const BitVec& other) const;
  bool is_strict_subset_of(const BitVec& other) const {
    return is_subset_of(other) && *this != other;
  }

  BitVec& operator&=(const BitVec& other);
  BitVec& operator|=(const BitVec& other);
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  BitVec complement() const;

  std::vector<std::size_t> ones() const;

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b);

  std::size_t hash() const;

 private:
  void trim();

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& b) const { return b.hash(); }
};

}  // namespace ktypes
