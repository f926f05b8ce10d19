#include "omegalab/hom.hpp"

#include "omegalab/errors.hpp"

namespace omegalab {

bool RingHom::preserves_operations() const {
  const Ring& s = *source;
  const Ring& t = *target;
  if (map[0] != 0 || map[s.one()] != t.one()) return false;
  for (Elem a = 0; a < s.order(); ++a)
    for (Elem b = a; b < s.order(); ++b)
      if (map[s.add(a, b)] != t.add(map[a], map[b]) ||
          map[s.mul(a, b)] != t.mul(map[a], map[b]))
        return false;
  return true;
}

Quotient quotient(const Ideal& ideal) {
  if (!ideal.is_proper())
    throw Error(ErrorKind::NotProper, "cannot take the quotient by the whole ring");
  const Ring& r = ideal.ring();
  const std::size_t m = r.order();
  if (r.is_residue_ring()) {
    // Z/nZ modulo <d> is Z/dZ, with x -> x mod d.
    Elem d = static_cast<Elem>(m);
    ideal.elements().for_each([&](Elem x) {
      if (x != 0 && x < d) d = x;
    });
    std::vector<Elem> map(m);
    for (Elem x = 0; x < m; ++x) map[x] = x % d;
    auto ring = std::make_shared<const Ring>(std::uint64_t{d});
    RingHom hom{ideal.ring_ptr(), ring, std::move(map), ideal, true};
    return Quotient{std::move(ring), std::move(hom)};
  }
  const std::vector<Elem> members = ideal.elements().elements();

  // Scanning x upward, the first unassigned element of each coset is its
  // least index, and cosets are discovered in representative order.
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> coset(m, kUnset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < m; ++x) {
    if (coset[x] != kUnset) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem i : members) coset[r.add(x, i)] = id;
  }

  const std::size_t q = reps.size();
  std::vector<Elem> add(q * q), mul(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      add[a * q + b] = coset[r.add(reps[a], reps[b])];
      mul[a * q + b] = coset[r.mul(reps[a], reps[b])];
    }
  std::vector<std::string> names(q);
  for (std::size_t a = 0; a < q; ++a) names[a] = "[" + r.element_name(reps[a]) + "]";
  // Derived rings carry an empty table spec; Ring::table_spec() materializes it.
  auto ring = std::make_shared<const Ring>(r.name() + "/" + ideal.label(), RingSpec::table({}, {}),
                                           q, std::move(add), std::move(mul), std::move(names));
  RingHom hom{ideal.ring_ptr(), ring, std::move(coset), ideal, true};
  return Quotient{std::move(ring), std::move(hom)};
}

Ideal image(const RingHom& hom, const Ideal& ideal) {
  if (ideal.ring_ptr() != hom.source)
    throw Error(ErrorKind::RingMismatch, "ideal is not in the homomorphism's source ring");
  ElemSet out(hom.target->order());
  ideal.elements().for_each([&](Elem x) { out.insert(hom.map[x]); });
  std::vector<Elem> gens;
  for (Elem g : ideal.generators()) gens.push_back(hom.map[g]);
  return Ideal(hom.target, std::move(out), std::move(gens));
}

}  // namespace omegalab
