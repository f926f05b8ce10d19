#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "omegalab/elem_set.hpp"
#include "omegalab/limits.hpp"
#include "omegalab/ring.hpp"

namespace omegalab {

/// An ideal of a finite ring, stored as its full element set.
class Ideal {
 public:
  Ideal(RingPtr ring, ElemSet elements, std::vector<Elem> generators = {});

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const ElemSet& elements() const { return elements_; }
  const std::vector<Elem>& generators() const { return generators_; }

  bool contains(Elem x) const { return elements_.contains(x); }
  std::size_t size() const { return elements_.count(); }
  bool is_proper() const { return !elements_.contains(ring_->one()); }
  bool is_zero() const { return size() == 1; }

  // "<g1,g2,...>" using the stored generators, or a greedy generating set.
  std::string label() const;

  bool operator==(const Ideal& other) const {
    return ring_ == other.ring_ && elements_ == other.elements_;
  }
  std::strong_ordering operator<=>(const Ideal& other) const {
    return elements_ <=> other.elements_;
  }

 private:
  RingPtr ring_;
  ElemSet elements_;
  std::vector<Elem> generators_;
};

/// Non-empty, duplicate-free, canonically ordered set of proper ideals of
/// one ring.
class IdealFamily {
 public:
  // Sorts and deduplicates `members`. Throws NotProper for an improper
  // member and RingMismatch if members live in different rings.
  IdealFamily(RingPtr ring, std::vector<Ideal> members, std::string label);

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const std::vector<Ideal>& members() const { return members_; }
  const Ideal& operator[](std::size_t i) const { return members_[i]; }
  std::size_t size() const { return members_.size(); }
  const std::string& label() const { return label_; }

  std::optional<std::size_t> index_of(const ElemSet& elements) const;

  bool operator==(const IdealFamily& other) const {
    return ring_ == other.ring_ && members_ == other.members_;
  }

 private:
  RingPtr ring_;
  std::vector<Ideal> members_;
  std::string label_;
  std::unordered_map<ElemSet, std::size_t> index_;
};

enum class FamilyKind { Prp, Max, Rd };
std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view text);

Ideal zero_ideal(const RingPtr& ring);
Ideal whole_ring(const RingPtr& ring);

/// Least ideal containing `gens`.
Ideal generate(const RingPtr& ring, const std::vector<Elem>& gens);

/// Every ideal of the ring (the ring itself included), canonically ordered.
std::vector<Ideal> all_ideals(const RingPtr& ring, const Limits& limits = {});

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal radical(const Ideal& ideal);

bool is_prime(const Ideal& ideal);
bool is_maximal(const Ideal& ideal);
// Radical route: the radical is prime.
bool is_primary(const Ideal& ideal);
// Definition route: xy in I implies x in I or some power of y in I.
bool is_primary_by_definition(const Ideal& ideal);
bool is_radical(const Ideal& ideal);

IdealFamily family(const RingPtr& ring, FamilyKind kind, const Limits& limits = {});

}  // namespace omegalab
