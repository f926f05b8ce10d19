#include "omegalab/omega.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "omegalab/errors.hpp"
#include "omegalab/hom.hpp"

namespace omegalab {

namespace {

// C(r + k - 1, k): multisets of size k drawn from r elements, saturating at
// UINT64_MAX.
std::uint64_t multiset_count(std::uint64_t r, std::uint64_t k) {
  if (r == 0) return k == 0 ? 1 : 0;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = r + i - 1;
    const __uint128_t next = static_cast<__uint128_t>(result) * num / i;
    if (next > ~std::uint64_t{0}) return ~std::uint64_t{0};
    result = static_cast<std::uint64_t>(next);
  }
  return result;
}

// Search state over the zero ideal of a quotient ring.
class ZeroIdealSearch {
 public:
  ZeroIdealSearch(const Ring& ring, std::size_t n) : ring_(ring), n_(n) {
    for (Elem x = 1; x < ring.order(); ++x)
      if (!ring.is_unit(x)) relevant_.push_back(x);
    tuple_.assign(n + 1, 0);
    prefix_.assign(n + 2, ring.one());
    suffix_.assign(n + 2, ring.one());
  }

  std::uint64_t tuple_count() const { return multiset_count(relevant_.size(), n_ + 1); }

  // Returns true if every tuple passes; otherwise tuple() holds the
  // lexicographically least counterexample.
  bool run() { return descend(0, 0); }
  const std::vector<Elem>& tuple() const { return tuple_; }

 private:
  // prefix_[d] is the product of tuple_[0..d-1]. Tuples with a zero or a unit
  // entry always pass, so only nonzero nonunits are enumerated. A zero
  // prefix of length <= n makes every completion pass (leave out the last
  // element), so that subtree is skipped.
  bool descend(std::size_t depth, std::size_t start) {
    if (depth == n_ + 1) return leaf();
    for (std::size_t i = start; i < relevant_.size(); ++i) {
      tuple_[depth] = relevant_[i];
      prefix_[depth + 1] = ring_.mul(prefix_[depth], relevant_[i]);
      if (depth < n_ && prefix_[depth + 1] == 0) continue;
      if (!descend(depth + 1, i)) return false;
    }
    return true;
  }

  bool leaf() {
    if (prefix_[n_ + 1] != 0) return true;
    suffix_[n_ + 1] = ring_.one();
    for (std::size_t i = n_ + 1; i-- > 0;) suffix_[i] = ring_.mul(tuple_[i], suffix_[i + 1]);
    for (std::size_t skip = 0; skip <= n_; ++skip)
      if (ring_.mul(prefix_[skip], suffix_[skip + 1]) == 0) return true;
    return false;
  }

  const Ring& ring_;
  std::size_t n_;
  std::vector<Elem> relevant_;
  std::vector<Elem> tuple_, prefix_, suffix_;
};

// Least element of R in each coset, indexed by quotient element.
std::vector<Elem> coset_representatives(const RingHom& projection) {
  std::vector<Elem> reps(projection.target->order(), 0);
  std::vector<bool> seen(projection.target->order(), false);
  for (Elem x = 0; x < projection.source->order(); ++x) {
    const Elem c = projection.map[x];
    if (!seen[c]) {
      seen[c] = true;
      reps[c] = x;
    }
  }
  return reps;
}

void require_proper(const Ideal& ideal) {
  if (!ideal.is_proper())
    throw Error(ErrorKind::NotProper, "ideal " + ideal.label() + " is the whole ring");
}

AbsorbCheck check_in_quotient(const Ring& q, const std::vector<Elem>& reps, std::size_t n,
                              const Limits& limits) {
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "n must be positive");
  ZeroIdealSearch search(q, n);
  const auto count = search.tuple_count();
  if (count > limits.search_budget)
    throw Error(ErrorKind::CapExceeded, std::to_string(n) + "-absorbing check needs " +
                                            std::to_string(count) + " tuples, budget is " +
                                            std::to_string(limits.search_budget));
  AbsorbCheck out;
  out.absorbing = search.run();
  if (!out.absorbing)
    for (Elem e : search.tuple()) out.counterexample.push_back(reps[e]);
  return out;
}

std::size_t stabilization_bound(const RingPtr& q, const Limits& limits) {
  std::size_t total = 0;
  if (q->is_residue_ring()) {
    // Maximal ideals of Z/dZ are <p> for primes p | d, and <p>^e = <gcd(p^e, d)>.
    std::uint64_t d = q->order(), rest = d;
    for (std::uint64_t p = 2; rest > 1; ++p) {
      if (p * p > rest) p = rest;
      if (rest % p != 0) continue;
      std::uint64_t power = p, e = 1;
      while (std::gcd(power * p, d) != std::gcd(power, d)) power *= p, ++e;
      while (rest % p == 0) rest /= p;
      total += e;
    }
    return total;
  }
  for (const auto& m : all_ideals(q, limits)) {
    if (!m.is_proper() || !is_maximal(m)) continue;
    std::size_t e = 1;
    Ideal power = m;
    for (;;) {
      Ideal next = ideal_product(power, m);
      if (next.elements() == power.elements()) break;
      power = std::move(next);
      ++e;
    }
    total += e;
  }
  return total;
}

}  // namespace

bool verify_certificate(const Ideal& ideal, const AbsorbCertificate& cert) {
  const Ring& r = ideal.ring();
  if (cert.n < 2 || cert.witness.size() != cert.n) return false;
  for (Elem x : cert.witness)
    if (x >= r.order()) return false;
  Elem full = r.one();
  for (Elem x : cert.witness) full = r.mul(full, x);
  if (!ideal.contains(full)) return false;
  // No (n-1)-subproduct in I; it is enough to check the leave-one-out ones.
  for (std::size_t skip = 0; skip < cert.n; ++skip) {
    Elem p = r.one();
    for (std::size_t i = 0; i < cert.n; ++i)
      if (i != skip) p = r.mul(p, cert.witness[i]);
    if (ideal.contains(p)) return false;
  }
  return true;
}

AbsorbCheck check_n_absorbing(const Ideal& ideal, std::size_t n, const Limits& limits) {
  require_proper(ideal);
  auto [q, projection] = quotient(ideal);
  return check_in_quotient(*q, coset_representatives(projection), n, limits);
}

bool is_n_absorbing(const Ideal& ideal, std::size_t n, const Limits& limits) {
  return check_n_absorbing(ideal, n, limits).absorbing;
}

std::size_t omega_bound(const Ideal& ideal, const Limits& limits) {
  require_proper(ideal);
  return stabilization_bound(quotient(ideal).ring, limits);
}

OmegaResult omega(const Ideal& ideal, const Limits& limits) {
  require_proper(ideal);
  auto [q, projection] = quotient(ideal);
  const auto reps = coset_representatives(projection);
  OmegaResult result;
  result.bound = stabilization_bound(q, limits);

  std::vector<Elem> last_counterexample;
  for (std::size_t n = 1; n <= result.bound; ++n) {
    auto check = check_in_quotient(*q, reps, n, limits);
    if (!check.absorbing) {
      last_counterexample = std::move(check.counterexample);
      continue;
    }
    result.value = OmegaValue::finite(n);
    if (n >= 2) {
      AbsorbCertificate cert{n, std::move(last_counterexample)};
      if (!verify_certificate(ideal, cert))
        throw Error(ErrorKind::InternalBoundViolated,
                    "certificate for " + ideal.label() + " failed re-verification");
      result.certificate = std::move(cert);
    }
    return result;
  }
  throw Error(ErrorKind::InternalBoundViolated,
              "omega(" + ideal.label() + ") exceeds bound " + std::to_string(result.bound));
}

bool omega_equiv(const Ideal& a, const Ideal& b, const Limits& limits) {
  if (a.ring_ptr() != b.ring_ptr())
    throw Error(ErrorKind::RingMismatch, "ideals belong to different rings");
  return omega(a, limits).value == omega(b, limits).value;
}

const OmegaResult& OmegaCache::get(const Ideal& ideal) {
  auto it = memo_.find(ideal.elements());
  if (it != memo_.end()) return it->second;
  return memo_.emplace(ideal.elements(), omega(ideal, limits_)).first->second;
}

OmegaPartition partition_from_values(std::vector<OmegaValue> values) {
  OmegaPartition out;
  std::map<OmegaValue, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < values.size(); ++i) classes[values[i]].push_back(i);
  for (auto& [value, members] : classes) {
    out.classes.push_back(OmegaClass{value, std::move(members)});
    out.spectrum.push_back(value);
  }
  out.values = std::move(values);
  return out;
}

OmegaPartition spectrum(const IdealFamily& family, OmegaCache& cache) {
  std::vector<OmegaValue> values;
  values.reserve(family.size());
  for (const auto& member : family.members()) values.push_back(cache.get(member).value);
  return partition_from_values(std::move(values));
}

OmegaPartition spectrum(const IdealFamily& family, const Limits& limits) {
  OmegaCache cache(limits);
  return spectrum(family, cache);
}

}  // namespace omegalab
