#pragma once

#include <optional>
#include <vector>

#include "omegalab/action.hpp"
#include "omegalab/ideal.hpp"
#include "omegalab/omega.hpp"

// Unoptimized reference implementations. They share nothing with the
// optimized paths beyond ring arithmetic and ideal membership, and are used
// to cross-check those paths in tests and in the verification report.
namespace omegalab::oracle {

/// Scans every ordered (n+1)-tuple of R: no quotient, no pruning.
AbsorbCheck naive_check_n_absorbing(const Ideal& ideal, std::size_t n);

/// Least n <= max_n with naive_check_n_absorbing true.
std::optional<std::size_t> naive_omega(const Ideal& ideal, std::size_t max_n);

/// For every multiset of `arity` elements with product in I, some `n` of
/// them already have product in I (any n-subset, not only leave-one-out).
bool every_product_has_n_subproduct(const Ideal& ideal, std::size_t n, std::size_t arity);

/// All ideals by testing every subset containing 0; orders up to 24.
std::vector<ElemSet> subset_scan_ideals(const RingPtr& ring);

/// All automorphisms by scanning every bijection; orders up to 8.
std::vector<std::vector<Elem>> bijection_scan_automorphisms(const RingPtr& ring);

}  // namespace omegalab::oracle
