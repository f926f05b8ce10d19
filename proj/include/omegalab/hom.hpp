#pragma once

#include <vector>

#include "omegalab/ideal.hpp"
#include "omegalab/ring.hpp"

namespace omegalab {

/// Ring homomorphism between finite rings, stored as an element map.
struct RingHom {
  RingPtr source;
  RingPtr target;
  std::vector<Elem> map;
  Ideal kernel;
  bool surjective = false;

  Elem operator()(Elem x) const { return map[x]; }

  // Exhaustive check that 0, 1, addition and multiplication are preserved.
  bool preserves_operations() const;
};

struct Quotient {
  RingPtr ring;
  RingHom projection;
};

/// R/I as a table ring whose elements are the cosets, each represented by
/// its least element index and ordered by that representative. A residue
/// ring Z/nZ modulo <d> gives Z/dZ itself, which has the same indexing. Throws
/// NotProper when I = R.
Quotient quotient(const Ideal& ideal);

/// f(I) for a surjective homomorphism f.
Ideal image(const RingHom& hom, const Ideal& ideal);

}  // namespace omegalab
