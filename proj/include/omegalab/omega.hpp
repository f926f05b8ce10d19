#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "omegalab/ideal.hpp"
#include "omegalab/limits.hpp"

namespace omegalab {

/// Element of N u {inf}; infinity compares greater than every finite value.
class OmegaValue {
 public:
  static OmegaValue finite(std::uint64_t n) { return OmegaValue(n); }
  static OmegaValue infinite() { return OmegaValue(kInfinite); }

  bool is_infinite() const { return value_ == kInfinite; }
  std::uint64_t value() const { return value_; }
  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

  auto operator<=>(const OmegaValue&) const = default;

 private:
  static constexpr std::uint64_t kInfinite = ~std::uint64_t{0};
  explicit OmegaValue(std::uint64_t v) : value_(v) {}
  std::uint64_t value_;
};

/// n elements whose product lies in I while no product of n-1 of them does;
/// proves that I is not (n-1)-absorbing.
struct AbsorbCertificate {
  std::size_t n = 0;
  std::vector<Elem> witness;
};

bool verify_certificate(const Ideal& ideal, const AbsorbCertificate& cert);

struct AbsorbCheck {
  bool absorbing = false;
  // On failure: n+1 elements of R with product in I and no n-subproduct in I.
  std::vector<Elem> counterexample;
};

/// Decides whether I is n-absorbing by searching the zero ideal of R/I over
/// nondecreasing tuples of nonzero nonunits. Throws NotProper, or CapExceeded
/// when the number of tuples exceeds limits.search_budget.
AbsorbCheck check_n_absorbing(const Ideal& ideal, std::size_t n, const Limits& limits = {});
bool is_n_absorbing(const Ideal& ideal, std::size_t n, const Limits& limits = {});

struct OmegaResult {
  OmegaValue value = OmegaValue::finite(1);
  std::optional<AbsorbCertificate> certificate;  // present iff value >= 2
  std::size_t bound = 0;                         // termination bound used
};

/// Upper bound on omega(I): over the maximal ideals m of R/I, the sum of the
/// exponents at which the powers of m stabilize.
std::size_t omega_bound(const Ideal& ideal, const Limits& limits = {});

/// Least n for which I is n-absorbing, with a re-verified certificate.
OmegaResult omega(const Ideal& ideal, const Limits& limits = {});

bool omega_equiv(const Ideal& a, const Ideal& b, const Limits& limits = {});

/// Memoizes omega per ideal of one ring.
class OmegaCache {
 public:
  explicit OmegaCache(Limits limits = {}) : limits_(limits) {}
  const OmegaResult& get(const Ideal& ideal);
  const Limits& limits() const { return limits_; }

 private:
  Limits limits_;
  std::unordered_map<ElemSet, OmegaResult> memo_;
};

struct OmegaClass {
  OmegaValue value;
  std::vector<std::size_t> members;  // family indices, ascending
};

/// Omega values of a family, grouped into omega-classes by increasing value.
struct OmegaPartition {
  std::vector<OmegaValue> values;  // one per family member
  std::vector<OmegaClass> classes;
  std::vector<OmegaValue> spectrum;  // ascending

  bool same_class(std::size_t i, std::size_t j) const { return values[i] == values[j]; }
};

OmegaPartition spectrum(const IdealFamily& family, const Limits& limits = {});
OmegaPartition spectrum(const IdealFamily& family, OmegaCache& cache);
// Groups already-known values.
OmegaPartition partition_from_values(std::vector<OmegaValue> values);

}  // namespace omegalab
