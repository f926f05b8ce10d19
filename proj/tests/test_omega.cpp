#include "doctest.h"
#include "omegalab/hom.hpp"
#include "omegalab/errors.hpp"
#include "omegalab/omega.hpp"
#include "omegalab/oracle.hpp"

using namespace omegalab;

namespace {

RingSpec z(std::uint64_t n) { return RingSpec::zn(n); }
RingSpec z2z2() { return RingSpec::product({z(2), z(2)}); }

std::vector<RingSpec> oracle_rings() {
  return {z(4), z(8), z(12), z(16), z2z2(), RingSpec::product({z(2), z(3)}),
          RingSpec::poly_quotient(3, {0, 0, 1}), RingSpec::poly_quotient(2, {1, 1, 0, 1})};
}

}  // namespace

TEST_CASE("OmegaValue ordering") {
  CHECK(OmegaValue::finite(3) < OmegaValue::infinite());
  CHECK(OmegaValue::finite(1) < OmegaValue::finite(2));
  CHECK(OmegaValue::infinite().to_string() == "inf");
  CHECK(OmegaValue::finite(4).to_string() == "4");
}

TEST_CASE("zero ideal of Z4") {
  auto r = build_ring(z(4));
  auto zero = zero_ideal(r);
  // 2 * 2 lands in 0 but 2 does not.
  auto one = check_n_absorbing(zero, 1);
  CHECK_FALSE(one.absorbing);
  CHECK(one.counterexample == std::vector<Elem>{2, 2});
  CHECK(is_n_absorbing(zero, 2));
  // Frozen from the all-triples oracle.
  CHECK(oracle::naive_check_n_absorbing(zero, 2).absorbing);
  CHECK(omega(zero).value == OmegaValue::finite(2));
}

TEST_CASE("maximal ideals are 1-absorbing") {
  for (const auto& s : oracle_rings()) {
    auto r = build_ring(s);
    const auto max = family(r, FamilyKind::Max);
    for (const auto& m : max.members()) CHECK(is_n_absorbing(m, 1));
  }
}

TEST_CASE("omega of <0> in Z12 is 3 with certificate (2,2,3)") {
  auto r = build_ring(z(12));
  auto res = omega(zero_ideal(r));
  CHECK(res.value == OmegaValue::finite(3));
  REQUIRE(res.certificate);
  CHECK(res.certificate->n == 3);
  CHECK(res.certificate->witness == std::vector<Elem>{2, 2, 3});
  CHECK(oracle::naive_omega(zero_ideal(r), 4) == std::optional<std::size_t>{3});
  // Bound: maximal ideals <2>, <3> of Z12 stabilize at exponents 2 and 1.
  CHECK(res.bound == 3);
}

TEST_CASE("omega of <6> in Z12 is 2 with certificate (2,3)") {
  auto r = build_ring(z(12));
  auto res = omega(generate(r, {6}));
  CHECK(res.value == OmegaValue::finite(2));
  REQUIRE(res.certificate);
  CHECK(res.certificate->witness == std::vector<Elem>{2, 3});
  CHECK(oracle::naive_omega(generate(r, {6}), 3) == std::optional<std::size_t>{2});
}

TEST_CASE("prime ideals have omega 1 and no certificate") {
  auto r = build_ring(z(12));
  for (Elem g : {2u, 3u}) {
    auto res = omega(generate(r, {g}));
    CHECK(res.value == OmegaValue::finite(1));
    CHECK_FALSE(res.certificate.has_value());
  }
}

TEST_CASE("errors") {
  auto r = build_ring(z(12));
  CHECK_THROWS_AS(omega(whole_ring(r)), Error);
  CHECK_THROWS_AS(is_n_absorbing(whole_ring(r), 1), Error);
  Limits tight;
  tight.search_budget = 10;
  try {
    is_n_absorbing(zero_ideal(build_ring(z(60))), 3, tight);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  CHECK_THROWS_AS(omega_equiv(zero_ideal(r), zero_ideal(build_ring(z(12)))), Error);
}

TEST_CASE("spectrum of prp(Z12)") {
  auto r = build_ring(z(12));
  auto part = spectrum(family(r, FamilyKind::Prp));
  // Canonical order: <0>, <6>, <4>, <3>, <2>.
  REQUIRE(part.spectrum.size() == 3);
  CHECK(part.spectrum[0] == OmegaValue::finite(1));
  CHECK(part.spectrum[2] == OmegaValue::finite(3));
  CHECK(part.classes[0].members == std::vector<std::size_t>{3, 4});
  CHECK(part.classes[1].members == std::vector<std::size_t>{1, 2});
  CHECK(part.classes[2].members == std::vector<std::size_t>{0});
}

TEST_CASE("spectrum of a field and of Z2xZ2") {
  auto f = spectrum(family(build_ring(RingSpec::poly_quotient(2, {1, 1, 1})), FamilyKind::Prp));
  CHECK(f.spectrum == std::vector<OmegaValue>{OmegaValue::finite(1)});

  auto p = spectrum(family(build_ring(z2z2()), FamilyKind::Prp));
  CHECK(p.spectrum == std::vector<OmegaValue>{OmegaValue::finite(1), OmegaValue::finite(2)});
  CHECK(p.classes[0].members == std::vector<std::size_t>{1, 2});
  CHECK(p.classes[1].members == std::vector<std::size_t>{0});
  CHECK(p.classes.size() == p.spectrum.size());
}

TEST_CASE("omega_equiv") {
  auto r = build_ring(z(12));
  CHECK(omega_equiv(generate(r, {2}), generate(r, {3})));
  CHECK(omega_equiv(generate(r, {4}), generate(r, {4})));
  CHECK_FALSE(omega_equiv(generate(r, {2}), generate(r, {4})));
}

TEST_CASE("optimized absorbing check agrees with the naive oracle") {
  for (const auto& s : oracle_rings()) {
    auto r = build_ring(s);
    CAPTURE(r->name());
    const auto prp = family(r, FamilyKind::Prp);
    for (const auto& ideal : prp.members())
      for (std::size_t n = 1; n <= 3; ++n) {
        CAPTURE(ideal.label());
        CAPTURE(n);
        CHECK(is_n_absorbing(ideal, n) == oracle::naive_check_n_absorbing(ideal, n).absorbing);
      }
  }
}

TEST_CASE("absorbing properties on small rings") {
  for (const auto& s : oracle_rings()) {
    auto r = build_ring(s);
    CAPTURE(r->name());
    OmegaCache cache;
    const auto prp = family(r, FamilyKind::Prp);
    for (const auto& a : prp.members()) {
      const auto& res = cache.get(a);
      const auto w = res.value.value();
      CHECK(w <= res.bound);
      // omega is 1 exactly on primes.
      CHECK((w == 1) == is_prime(a));
      // Monotone in n.
      for (std::size_t n = w; n <= w + 2; ++n) CHECK(is_n_absorbing(a, n));
      if (res.certificate) CHECK(verify_certificate(a, *res.certificate));
      // Products of more than n factors.
      if (r->order() <= 9)
        for (std::size_t arity = w + 1; arity <= w + 2; ++arity)
          CHECK(oracle::every_product_has_n_subproduct(a, w, arity));
      // Radical law, in the form x^omega(I) in I for x in rad(I).
      const auto rad = radical(a);
      CHECK(cache.get(rad).value <= res.value);
      rad.elements().for_each([&](Elem x) { CHECK(a.contains(r->pow(x, w))); });
      for (const auto& b : prp.members()) {
        const auto meet = ideal_intersect(a, b);
        CHECK(cache.get(meet).value.value() <= w + cache.get(b).value.value());
      }
    }
  }
}

TEST_CASE("certificates are rejected when tampered") {
  auto r = build_ring(z(12));
  auto zero = zero_ideal(r);
  CHECK(verify_certificate(zero, {3, {2, 2, 3}}));
  CHECK_FALSE(verify_certificate(zero, {3, {2, 3, 4}}));  // 4*3 = 0 already
  CHECK_FALSE(verify_certificate(zero, {3, {2, 2, 5}}));  // product not in I
  CHECK_FALSE(verify_certificate(zero, {2, {2, 2, 3}}));
}

TEST_CASE("quotient reduction preserves omega along chains") {
  auto r = build_ring(z(24));
  auto prp = family(r, FamilyKind::Prp);
  for (const auto& j : prp.members())
    for (const auto& i : prp.members()) {
      if (!j.elements().is_subset_of(i.elements())) continue;
      auto [q, hom] = quotient(j);
      CHECK(omega(image(hom, i)).value == omega(i).value);
    }
}

TEST_CASE("omega values in Z60 and the termination bound") {
  auto r = build_ring(z(60));
  auto res = omega(zero_ideal(r));
  CHECK(res.value == OmegaValue::finite(4));
  CHECK(res.bound == 4);
}
