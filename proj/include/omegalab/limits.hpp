#pragma once

#include <cstddef>
#include <cstdint>

namespace omegalab {

// Bounds on every exhaustive search in the library. Exceeding one raises
// ErrorKind::CapExceeded; no search ever returns a partial answer.
struct Limits {
  // Largest ring for which ideal lattices, families and omega are computed.
  std::size_t ideal_cap = 4096;
  // Largest ring whose automorphism group is enumerated.
  std::size_t aut_cap = 64;
  // Largest number of tuples one absorbing check may enumerate.
  std::uint64_t search_budget = 100'000'000;
  // Largest number of subgroups a subgroup enumeration may produce.
  std::size_t subgroup_budget = 2000;
  // Largest permutation group that is materialized element by element.
  std::size_t group_order_cap = 40320;
};

}  // namespace omegalab
