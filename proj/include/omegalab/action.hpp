#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "omegalab/ideal.hpp"
#include "omegalab/limits.hpp"
#include "omegalab/omega.hpp"
#include "omegalab/perm.hpp"
#include "omegalab/report.hpp"

namespace omegalab {

/// Ring automorphism as a bijection on element indices.
struct RingAut {
  RingPtr ring;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
  bool is_identity() const;
  bool is_involution() const;  // map o map = id (the identity included)
  // Exhaustive check of 0, 1, addition and multiplication.
  bool is_automorphism() const;
};

/// All automorphisms, sorted by map (identity first). Backtracks over
/// images of the smallest undetermined element, propagating every value
/// forced by addition and multiplication and pruning by additive order.
/// Throws CapExceeded above limits.aut_cap.
std::vector<RingAut> aut_group(const RingPtr& ring, const Limits& limits = {});

/// Every subgroup of Aut(R), each as its full element list.
std::vector<std::vector<RingAut>> aut_subgroups(const RingPtr& ring, const Limits& limits = {});

Ideal apply(const RingAut& aut, const Ideal& ideal);

using FamilyPtr = std::shared_ptr<const IdealFamily>;

/// A subgroup of Perm(family), materialized element by element.
class IdealPermGroup {
 public:
  enum class Provenance { FromAut, Abstract };

  // Group generated by arbitrary permutations of the family indices.
  static IdealPermGroup abstract(FamilyPtr family, std::vector<Perm> generators,
                                 const Limits& limits = {});

  const IdealFamily& family() const { return *family_; }
  const FamilyPtr& family_ptr() const { return family_; }
  const std::vector<Perm>& generators() const { return generators_; }
  // Sorted lexicographically; elements()[0] is the identity.
  const std::vector<Perm>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  Provenance provenance() const { return provenance_; }
  // For FromAut groups: one inducing automorphism per element, same order.
  const std::vector<RingAut>& inducing() const { return inducing_; }

 private:
  friend IdealPermGroup induced_group(const FamilyPtr&, const std::vector<RingAut>&,
                                      const Limits&);
  IdealPermGroup() = default;

  FamilyPtr family_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  Provenance provenance_ = Provenance::Abstract;
  std::vector<RingAut> inducing_;
};

/// Partition of the members of a family into blocks.
class EquivRelation {
 public:
  // Validates that blocks are non-empty, disjoint and cover the family, then
  // sorts each block and orders blocks by least member. Throws InvalidSpec.
  EquivRelation(FamilyPtr family, std::vector<std::vector<std::size_t>> blocks);

  static EquivRelation equality(FamilyPtr family);
  static EquivRelation universal(FamilyPtr family);
  static EquivRelation omega_relation(FamilyPtr family, const OmegaPartition& partition);

  const IdealFamily& family() const { return *family_; }
  const FamilyPtr& family_ptr() const { return family_; }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  bool related(std::size_t i, std::size_t j) const { return block_of_[i] == block_of_[j]; }

  bool operator==(const EquivRelation& other) const { return blocks_ == other.blocks_; }

 private:
  FamilyPtr family_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

bool is_invariant(const IdealFamily& family, const std::vector<RingAut>& group);

/// H_G(family). Duplicate induced permutations are collapsed. Throws
/// NotInvariant when some g(I) leaves the family.
IdealPermGroup induced_group(const FamilyPtr& family, const std::vector<RingAut>& group,
                             const Limits& limits = {});

/// H-orbits, each sorted, ordered by least member.
std::vector<std::vector<std::size_t>> orbits(const IdealPermGroup& group);
EquivRelation orbit_relation(const IdealPermGroup& group);

struct StabilityResult {
  bool stable = true;
  // Least (element index, member index) with omega(h(I)) != omega(I).
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

StabilityResult is_omega_stable(const IdealPermGroup& group, const OmegaPartition& omega);
bool is_transitive(const IdealPermGroup& group);

/// For all h and I, J: I ~ J iff h(I) ~ h(J). Throws FamilyMismatch.
bool is_g_congruence(const EquivRelation& rel, const IdealPermGroup& group);
/// Every block lies inside one omega-class.
bool is_omega_congruence(const EquivRelation& rel, const OmegaPartition& omega);

/// Every subgroup of Perm(family), for families of at most 6 members.
std::vector<IdealPermGroup> perm_subgroups(const FamilyPtr& family, const Limits& limits = {});

/// Subgroups H of Perm(family) for which ~omega is an H-congruence but the
/// H-orbit relation is not an omega-congruence.
std::vector<IdealPermGroup> explore_converse(const FamilyPtr& family, const OmegaPartition& omega,
                                             const Limits& limits = {});

/// Stable and transitive forces a single omega value.
CheckReport check_prop_4_1(const IdealPermGroup& group, const OmegaPartition& omega);

/// Result of looking for an omega-stable transitive group on a family.
struct StableTransitiveSearch {
  bool exists = false;
  // "search" when Perm(family) was enumerated, "structural" when the family
  // was too large and the answer follows from orbit/class comparison.
  std::string mode;
  std::optional<Perm> witness_generator;
};

StableTransitiveSearch find_stable_transitive(const FamilyPtr& family, const OmegaPartition& omega,
                                              const Limits& limits = {});

/// Stable transitive group on Prp(R) exists iff R is a field.
CheckReport check_cor_4_3(const RingPtr& ring, const Limits& limits = {});

/// In a domain, a stable transitive group on a family containing 0 forces all
/// members prime; outside domains checks the contrapositive on Prp(R).
CheckReport check_cor_4_1(const RingPtr& ring, const Limits& limits = {});

/// For every subgroup G of Aut(R) made of involutions: H_G(Rd(R)) transitive
/// implies every radical ideal is prime; reports prime and primary.
CheckReport check_cor_4_2(const RingPtr& ring, const Limits& limits = {});

}  // namespace omegalab
