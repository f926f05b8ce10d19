#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "omegalab/limits.hpp"
#include "omegalab/omega.hpp"

namespace omegalab {

using ZInt = unsigned __int128;

std::string to_string(ZInt value);
// Decimal digits only; throws Usage on anything else or on overflow.
ZInt parse_zint(std::string_view text);

/// The ideal <m> of Z; m = 0 is the zero ideal.
struct ZIdeal {
  ZInt m = 0;
  bool is_proper() const { return m != 1; }
};

/// Prime factors with multiplicity, ascending. Trial division up to 10^6,
/// then Miller-Rabin and Pollard-Brent on the cofactor. A cofactor is only
/// declared prime inside the range where the fixed Miller-Rabin bases are
/// proven deterministic; otherwise it must be split or FactorizationTimeout
/// is thrown. Precondition: n >= 2.
std::vector<ZInt> factorize(ZInt n);

bool is_probable_prime_deterministic(ZInt n);

/// omega of <m> in Z: 1 for m = 0, else the number of prime factors of m
/// counted with multiplicity. Throws NotProper for m = 1.
OmegaValue z_omega(ZInt m);

/// {z_omega(2^j) : 1 <= j <= k}; throws InternalBoundViolated unless it is
/// {1, ..., k}. Requires 1 <= k <= 64.
std::set<std::uint64_t> z_spectrum_prefix(unsigned k);

struct ZConsistency {
  std::uint64_t m = 0, n = 0;
  OmegaValue integer_side = OmegaValue::finite(1);
  OmegaValue residue_side = OmegaValue::finite(1);
  bool consistent() const { return integer_side == residue_side; }
};

/// Compares z_omega(m) with omega of <m> in Z/nZ computed by search.
/// Throws KernelNotContained unless m divides n.
ZConsistency z_consistency(std::uint64_t m, std::uint64_t n, const Limits& limits = {});

}  // namespace omegalab
