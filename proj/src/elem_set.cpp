#include "omegalab/elem_set.hpp"

namespace omegalab {

std::size_t ElemSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElemSet::is_subset_of(const ElemSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

ElemSet ElemSet::operator&(const ElemSet& other) const {
  ElemSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
  return out;
}

ElemSet ElemSet::operator|(const ElemSet& other) const {
  ElemSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
  return out;
}

std::vector<Elem> ElemSet::elements() const {
  std::vector<Elem> out;
  out.reserve(count());
  for_each([&](Elem x) { out.push_back(x); });
  return out;
}

std::strong_ordering ElemSet::operator<=>(const ElemSet& other) const {
  if (auto c = universe_ <=> other.universe_; c != 0) return c;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t diff = words_[i] ^ other.words_[i];
    if (diff == 0) continue;
    // The lowest differing element decides.
    const std::uint64_t low = diff & (~diff + 1);
    return (words_[i] & low) != 0 ? std::strong_ordering::greater
                                  : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::size_t ElemSet::hash() const {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ull;
  for (auto w : words_) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
  return h;
}

}  // namespace omegalab
