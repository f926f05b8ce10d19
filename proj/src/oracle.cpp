#include "omegalab/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "omegalab/errors.hpp"

namespace omegalab::oracle {

AbsorbCheck naive_check_n_absorbing(const Ideal& ideal, std::size_t n) {
  const Ring& r = ideal.ring();
  const auto m = static_cast<Elem>(r.order());
  std::vector<Elem> t(n + 1, 0);
  for (;;) {
    Elem full = r.one();
    for (Elem x : t) full = r.mul(full, x);
    if (ideal.contains(full)) {
      bool absorbed = false;
      for (std::size_t skip = 0; skip <= n && !absorbed; ++skip) {
        Elem p = r.one();
        for (std::size_t i = 0; i <= n; ++i)
          if (i != skip) p = r.mul(p, t[i]);
        absorbed = ideal.contains(p);
      }
      if (!absorbed) return AbsorbCheck{false, t};
    }
    // Odometer over R^(n+1).
    std::size_t k = n + 1;
    while (k > 0 && ++t[k - 1] == m) t[--k] = 0;
    if (k == 0) break;
  }
  return AbsorbCheck{true, {}};
}

std::optional<std::size_t> naive_omega(const Ideal& ideal, std::size_t max_n) {
  for (std::size_t n = 1; n <= max_n; ++n)
    if (naive_check_n_absorbing(ideal, n).absorbing) return n;
  return std::nullopt;
}

bool every_product_has_n_subproduct(const Ideal& ideal, std::size_t n, std::size_t arity) {
  const Ring& r = ideal.ring();
  const auto m = static_cast<Elem>(r.order());
  std::vector<Elem> t(arity, 0);
  std::vector<bool> mask(arity);
  for (;;) {
    Elem full = r.one();
    for (Elem x : t) full = r.mul(full, x);
    if (ideal.contains(full)) {
      std::fill(mask.begin(), mask.end(), false);
      std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(n), true);
      bool absorbed = false;
      do {
        Elem p = r.one();
        for (std::size_t i = 0; i < arity; ++i)
          if (mask[i]) p = r.mul(p, t[i]);
        absorbed = ideal.contains(p);
      } while (!absorbed && std::prev_permutation(mask.begin(), mask.end()));
      if (!absorbed) return false;
    }
    // Next nondecreasing tuple.
    std::size_t k = arity;
    while (k > 0 && t[k - 1] == m - 1) --k;
    if (k == 0) break;
    ++t[k - 1];
    for (std::size_t i = k; i < arity; ++i) t[i] = t[k - 1];
  }
  return true;
}

std::vector<ElemSet> subset_scan_ideals(const RingPtr& ring) {
  const Ring& r = *ring;
  const std::size_t m = r.order();
  if (m > 24) throw Error(ErrorKind::CapExceeded, "subset scan is limited to 24 elements");
  // multiples[x] = {r*x : r in R} as a bit mask.
  std::vector<std::uint32_t> multiples(m, 0);
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) multiples[x] |= 1u << r.mul(y, x);

  std::vector<ElemSet> out;
  // Element 0 is always present; enumerate the other m-1 bits.
  for (std::uint32_t rest = 0; rest < (1u << (m - 1)); ++rest) {
    const std::uint32_t s = (rest << 1) | 1u;
    bool ok = true;
    for (Elem x = 0; x < m && ok; ++x)
      if ((s >> x) & 1u) ok = (multiples[x] & ~s) == 0;
    for (Elem x = 0; x < m && ok; ++x) {
      if (!((s >> x) & 1u)) continue;
      for (Elem y = x; y < m && ok; ++y)
        if ((s >> y) & 1u) ok = (s >> r.add(x, y)) & 1u;
    }
    if (!ok) continue;
    ElemSet e(m);
    for (Elem x = 0; x < m; ++x)
      if ((s >> x) & 1u) e.insert(x);
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Elem>> bijection_scan_automorphisms(const RingPtr& ring) {
  const Ring& r = *ring;
  const std::size_t m = r.order();
  if (m > 8) throw Error(ErrorKind::CapExceeded, "bijection scan is limited to 8 elements");
  std::vector<Elem> map(m);
  std::iota(map.begin(), map.end(), Elem{0});
  std::vector<std::vector<Elem>> out;
  do {
    RingAut candidate{ring, map};
    if (candidate.is_automorphism()) out.push_back(map);
  } while (std::next_permutation(map.begin(), map.end()));
  return out;
}

}  // namespace omegalab::oracle
