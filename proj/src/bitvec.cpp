#include "ktypes/bitvec.hpp"

#include <bit>

namespace ktypes {

void BitVec::set_all() {
  for (auto& w : words_) w = ~std::uint64_t{0};
  trim();
}

void BitVec::trim() {
  if (n_ % 64 != 0 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
}

std::size_t BitVec::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitVec::none() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool BitVec::is_subset_of(const BitVec& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVec BitVec::complement() const {
  BitVec out = *this;
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

std::vector<std::size_t> BitVec::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w != 0) {
      out.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.count() <=> b.count(); c != 0) return c;
  // Equal counts: the first differing bit decides. The vector holding the
  // lower index there has the lexicographically smaller index list.
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    const std::uint64_t low = diff & (~diff + 1);
    return (a.words_[i] & low) ? std::strong_ordering::less
                               : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t BitVec::hash() const {
  std::size_t h = n_ * 0x9e3779b97f4a7c15ull;
  for (auto w : words_) h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace ktypes
