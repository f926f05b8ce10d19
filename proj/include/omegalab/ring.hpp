#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omegalab/elem_set.hpp"

namespace omegalab {

/// Presentation of a finite commutative unital ring.
struct RingSpec {
  enum class Kind { Zn, Product, PolyQuotient, Table };

  Kind kind = Kind::Zn;
  std::uint64_t modulus = 0;                  // zn
  std::vector<RingSpec> factors;              // product
  std::uint64_t prime = 0;                    // poly_quotient
  std::vector<std::uint64_t> poly;            // poly_quotient, constant term first
  std::vector<std::vector<std::uint64_t>> add_table;  // table
  std::vector<std::vector<std::uint64_t>> mul_table;  // table

  static RingSpec zn(std::uint64_t n);
  static RingSpec product(std::vector<RingSpec> factors);
  static RingSpec poly_quotient(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  static RingSpec table(std::vector<std::vector<std::uint64_t>> add,
                        std::vector<std::vector<std::uint64_t>> mul);

  bool operator==(const RingSpec&) const = default;
};

std::string_view to_string(RingSpec::Kind kind);

/// A ring axiom that failed, with the elements exhibiting the failure.
struct AxiomViolation {
  std::string axiom;
  Elem a = 0, b = 0, c = 0;

  std::string describe() const;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Finite commutative unital ring on element indices 0..order-1.
///
/// Index 0 is always the additive identity; the index of 1 is discovered
/// from the multiplication table. Residue rings carry no tables and compute
/// their arithmetic directly, so they stay cheap for large moduli.
class Ring {
 public:
  // Residue ring Z/nZ.
  explicit Ring(std::uint64_t modulus);
  // Table ring. The tables are row-major order x order arrays and must
  // already satisfy the ring axioms (see build_ring for validated input).
  Ring(std::string name, RingSpec spec, std::size_t order, std::vector<Elem> add,
       std::vector<Elem> mul, std::vector<std::string> element_names);

  std::size_t order() const { return order_; }
  Elem zero() const { return 0; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const {
    if (modulus_ != 0) {
      const std::uint64_t s = std::uint64_t{a} + b;
      return static_cast<Elem>(s >= modulus_ ? s - modulus_ : s);
    }
    return add_[static_cast<std::size_t>(a) * order_ + b];
  }
  Elem mul(Elem a, Elem b) const {
    if (modulus_ != 0) return static_cast<Elem>((std::uint64_t{a} * b) % modulus_);
    return mul_[static_cast<std::size_t>(a) * order_ + b];
  }
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::uint64_t k) const;

  bool is_unit(Elem a) const { return inverse_[a] != kNoInverse; }
  // Precondition: is_unit(a).
  Elem inverse(Elem a) const { return inverse_[a]; }
  const ElemSet& units() const { return units_; }

  // Order of a in the additive group.
  std::size_t additive_order(Elem a) const;

  const std::string& name() const { return name_; }
  std::string element_name(Elem a) const;
  const RingSpec& spec() const { return spec_; }
  // Table presentation of this ring, whatever its original presentation.
  RingSpec table_spec() const;

  bool is_residue_ring() const { return modulus_ != 0; }

  // Equal order and identical addition and multiplication tables.
  bool same_tables(const Ring& other) const;

 private:
  static constexpr Elem kNoInverse = static_cast<Elem>(-1);

  void compute_units();

  std::string name_;
  RingSpec spec_;
  std::size_t order_ = 0;
  std::uint64_t modulus_ = 0;
  std::vector<Elem> add_, mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inverse_;
  std::vector<std::string> names_;
  ElemSet units_;
  Elem one_ = 0;
};

/// Builds and validates a ring. Throws Error{InvalidSpec} naming the first
/// violated condition, or Error{CapExceeded} for table-backed rings larger
/// than `table_cap` elements.
RingPtr build_ring(const RingSpec& spec, std::size_t table_cap = 4096);

/// Checks the commutative unital ring axioms; exhaustive for orders up to
/// `exhaustive_up_to`, on a fixed pseudo-random sample of triples above.
std::optional<AxiomViolation> check_ring_axioms(const Ring& ring,
                                                std::size_t exhaustive_up_to = 64);

bool is_field(const Ring& ring);
bool is_domain(const Ring& ring);

std::string canonical_name(const RingSpec& spec);

}  // namespace omegalab
