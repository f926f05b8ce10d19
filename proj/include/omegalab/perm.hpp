#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "omegalab/limits.hpp"

namespace omegalab {

/// Permutation of {0, ..., degree-1} in image form: p[i] is the image of i.
using Perm = std::vector<std::uint32_t>;

Perm identity_perm(std::size_t degree);
// (a * b)(i) = a(b(i)): apply b first.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_identity(const Perm& p);
bool is_permutation(const Perm& p);

/// Elements of the group generated by `gens`, sorted lexicographically
/// (identity first). Throws CapExceeded beyond `order_cap` elements.
std::vector<Perm> group_closure(const std::vector<Perm>& gens, std::size_t degree,
                                std::size_t order_cap);

std::vector<Perm> all_permutations(std::size_t degree);

struct Subgroup {
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // sorted
};

/// Every subgroup of the group whose elements are `ambient`, each once,
/// ordered by (order, element list). Subgroups are grown one generator at a
/// time from the trivial group, trying one representative per coset.
/// Throws CapExceeded after limits.subgroup_budget subgroups.
std::vector<Subgroup> enumerate_subgroups(const std::vector<Perm>& ambient, std::size_t degree,
                                          const Limits& limits = {});

/// Cycle notation, e.g. "(0 1)(2)". Fixed points other than a lone identity
/// are omitted; the identity prints as "()".
std::string format_cycles(const Perm& p);
/// Parses cycle notation; points not mentioned are fixed. Throws Usage.
Perm parse_cycles(std::string_view text, std::size_t degree);

}  // namespace omegalab
