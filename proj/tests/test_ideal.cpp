#include <numeric>
#include <set>

#include "doctest.h"
#include "omegalab/errors.hpp"
#include "omegalab/ideal.hpp"
#include "omegalab/oracle.hpp"

using namespace omegalab;

namespace {

RingSpec z(std::uint64_t n) { return RingSpec::zn(n); }
RingSpec z2z2() { return RingSpec::product({z(2), z(2)}); }

std::vector<Elem> elems(const Ideal& i) { return i.elements().elements(); }

std::vector<RingSpec> small_rings() {
  std::vector<RingSpec> out;
  for (std::uint64_t n = 2; n <= 16; ++n) out.push_back(z(n));
  out.push_back(z(24));
  out.push_back(z2z2());
  out.push_back(RingSpec::product({z(2), z(3)}));
  out.push_back(RingSpec::poly_quotient(2, {1, 1, 1}));
  out.push_back(RingSpec::poly_quotient(3, {0, 0, 1}));
  out.push_back(RingSpec::poly_quotient(2, {1, 1, 0, 1}));
  return out;
}

}  // namespace

TEST_CASE("generate") {
  auto r = build_ring(z(12));
  CHECK(elems(generate(r, {4})) == std::vector<Elem>{0, 4, 8});
  CHECK(elems(generate(r, {})) == std::vector<Elem>{0});
  CHECK(elems(generate(r, {8, 6})) == std::vector<Elem>{0, 2, 4, 6, 8, 10});
  CHECK_FALSE(generate(r, {5}).is_proper());

  auto p = build_ring(z2z2());
  CHECK(elems(generate(p, {2})) == std::vector<Elem>{0, 2});  // (1,0)
  CHECK(generate(p, {2}).label() == "<(1,0)>");
}

TEST_CASE("all_ideals of zn(12) in canonical order") {
  auto r = build_ring(z(12));
  std::vector<std::string> labels;
  for (const auto& i : all_ideals(r)) labels.push_back(i.label());
  CHECK(labels == std::vector<std::string>{"<0>", "<6>", "<4>", "<3>", "<2>", "<1>"});
}

TEST_CASE("all_ideals of a field and of Z2xZ2") {
  CHECK(all_ideals(build_ring(z(5))).size() == 2);
  auto ideals = all_ideals(build_ring(z2z2()));
  REQUIRE(ideals.size() == 4);
  CHECK(elems(ideals[0]) == std::vector<Elem>{0});
  CHECK(elems(ideals[1]) == std::vector<Elem>{0, 2});  // Z2 x 0
  CHECK(elems(ideals[2]) == std::vector<Elem>{0, 1});  // 0 x Z2
  CHECK(elems(ideals[3]) == std::vector<Elem>{0, 1, 2, 3});
}

TEST_CASE("all_ideals agrees with the subset-scan oracle up to order 24") {
  for (const auto& s : small_rings()) {
    auto r = build_ring(s);
    CAPTURE(r->name());
    std::vector<ElemSet> fast;
    for (const auto& i : all_ideals(r)) fast.push_back(i.elements());
    CHECK(fast == oracle::subset_scan_ideals(r));
  }
}

TEST_CASE("ideals of zn(n) are the <d> for divisors d") {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    auto r = build_ring(z(n));
    std::size_t divisors = 0;
    for (std::uint64_t d = 1; d <= n; ++d) divisors += n % d == 0;
    auto ideals = all_ideals(r);
    CHECK(ideals.size() == divisors);
    for (const auto& i : ideals) {
      // <d> with d the least positive element (or n for the zero ideal).
      const auto e = elems(i);
      const std::uint64_t d = e.size() == 1 ? n : e[1];
      CHECK(n % d == 0);
      CHECK(e.size() == n / d);
    }
  }
}

TEST_CASE("sum, product, intersect in zn(12)") {
  auto r = build_ring(z(12));
  CHECK(ideal_intersect(generate(r, {2}), generate(r, {3})) == generate(r, {6}));
  CHECK(ideal_sum(generate(r, {4}), generate(r, {6})) == generate(r, {2}));
  CHECK(ideal_product(generate(r, {2}), generate(r, {2})) == generate(r, {4}));
  CHECK_THROWS_AS(ideal_sum(generate(r, {2}), generate(build_ring(z(12)), {2})), Error);
}

TEST_CASE("radical") {
  auto r = build_ring(z(12));
  CHECK(radical(generate(r, {4})) == generate(r, {2}));
  CHECK(radical(generate(r, {6})) == generate(r, {6}));
  auto r4 = build_ring(z(4));
  CHECK(radical(zero_ideal(r4)) == generate(r4, {2}));
}

TEST_CASE("prime, maximal, primary, radical predicates in zn(12)") {
  auto r = build_ring(z(12));
  auto two = generate(r, {2}), four = generate(r, {4}), six = generate(r, {6});
  CHECK(is_prime(two));
  CHECK(is_maximal(two));
  CHECK_FALSE(is_prime(four));
  CHECK(is_primary(four));
  CHECK(is_primary_by_definition(four));
  CHECK_FALSE(is_prime(six));
  CHECK(is_radical(six));
  CHECK_FALSE(is_primary(six));
  CHECK_THROWS_AS(is_prime(whole_ring(r)), Error);
}

TEST_CASE("families") {
  auto r = build_ring(z(12));
  CHECK(family(r, FamilyKind::Prp).size() == 5);
  auto max = family(r, FamilyKind::Max);
  REQUIRE(max.size() == 2);
  CHECK(max[0].label() == "<3>");
  CHECK(max[1].label() == "<2>");

  auto rd = family(build_ring(z2z2()), FamilyKind::Rd);
  CHECK(rd.size() == 3);
  CHECK(rd.label() == "rd");
}

TEST_CASE("custom families are canonicalized and validated") {
  auto r = build_ring(z(12));
  IdealFamily f(r, {generate(r, {2}), generate(r, {0}), generate(r, {10})}, "custom");
  REQUIRE(f.size() == 2);
  CHECK(f[0].is_zero());
  CHECK(f.index_of(generate(r, {2}).elements()) == std::optional<std::size_t>{1});
  CHECK_THROWS_AS(IdealFamily(r, {whole_ring(r)}, "custom"), Error);
  CHECK_THROWS_AS(IdealFamily(r, {zero_ideal(build_ring(z(12)))}, "custom"), Error);
}

TEST_CASE("lattice closure and radical laws on every small ring") {
  for (const auto& s : small_rings()) {
    auto r = build_ring(s);
    CAPTURE(r->name());
    auto ideals = all_ideals(r);
    std::set<ElemSet> known;
    for (const auto& i : ideals) known.insert(i.elements());
    for (const auto& a : ideals) {
      const auto rad = radical(a);
      CHECK(known.count(rad.elements()));
      CHECK(a.elements().is_subset_of(rad.elements()));
      CHECK(radical(rad) == rad);
      for (const auto& b : ideals) {
        CHECK(known.count(ideal_sum(a, b).elements()));
        CHECK(known.count(ideal_product(a, b).elements()));
        CHECK(known.count(ideal_intersect(a, b).elements()));
      }
      if (a.is_proper()) {
        CHECK(is_primary(a) == is_primary_by_definition(a));
        CHECK(is_primary(a) == is_prime(radical(a)));
        if (is_maximal(a)) CHECK(is_prime(a));
      }
    }
  }
}
