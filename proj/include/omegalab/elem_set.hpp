#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace omegalab {

using Elem = std::uint32_t;

/// Dense bit-per-element subset of {0, ..., size-1}.
///
/// Ordering is lexicographic on the bit sequence read from element 0 upward,
/// with an absent element sorting before a present one. This is the
/// canonical order used for ideal families.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }

  bool contains(Elem x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void insert(Elem x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Elem x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool is_subset_of(const ElemSet& other) const;

  ElemSet operator&(const ElemSet& other) const;
  ElemSet operator|(const ElemSet& other) const;

  std::vector<Elem> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  bool operator==(const ElemSet& other) const = default;
  std::strong_ordering operator<=>(const ElemSet& other) const;

  std::size_t hash() const;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace omegalab

template <>
struct std::hash<omegalab::ElemSet> {
  std::size_t operator()(const omegalab::ElemSet& s) const { return s.hash(); }
};
