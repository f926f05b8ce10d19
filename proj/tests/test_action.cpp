#include <algorithm>
#include <memory>
#include <set>

#include "doctest.h"
#include "omegalab/action.hpp"
#include "omegalab/errors.hpp"
#include "omegalab/oracle.hpp"

using namespace omegalab;

namespace {

RingSpec z(std::uint64_t n) { return RingSpec::zn(n); }
RingSpec z2z2() { return RingSpec::product({z(2), z(2)}); }
RingSpec f4() { return RingSpec::poly_quotient(2, {1, 1, 1}); }
RingSpec f8() { return RingSpec::poly_quotient(2, {1, 1, 0, 1}); }

FamilyPtr share(IdealFamily fam) { return std::make_shared<const IdealFamily>(std::move(fam)); }

std::vector<RingSpec> small_rings() {
  return {z(4),  z(6), z(8), z(12), z2z2(), RingSpec::product({z(2), z(3)}),
          f4(),  f8(), RingSpec::poly_quotient(3, {0, 0, 1})};
}

// {<0>, Z2 x 0} in Z2 x Z2: omega values 2 and 1.
FamilyPtr zero_and_axis() {
  auto r = build_ring(z2z2());
  return share(IdealFamily(r, {zero_ideal(r), generate(r, {2})}, "custom"));
}

std::vector<Perm> sorted_maps(const std::vector<RingAut>& auts) {
  std::vector<Perm> out;
  for (const auto& a : auts) out.emplace_back(a.map.begin(), a.map.end());
  return out;
}

}  // namespace

TEST_CASE("automorphism groups") {
  for (std::uint64_t n : {2, 6, 12, 60}) CHECK(aut_group(build_ring(z(n))).size() == 1);

  auto p = aut_group(build_ring(z2z2()));
  REQUIRE(p.size() == 2);
  CHECK(p[0].is_identity());
  CHECK(p[1].map == std::vector<Elem>{0, 2, 1, 3});
  CHECK(p[1].is_involution());

  auto f = aut_group(build_ring(f4()));
  REQUIRE(f.size() == 2);
  CHECK(f[1].map == std::vector<Elem>{0, 1, 3, 2});  // x -> x^2 = x+1

  auto e = aut_group(build_ring(f8()));
  CHECK(e.size() == 3);
  CHECK(std::count_if(e.begin(), e.end(), [](const RingAut& a) { return a.is_involution(); }) == 1);
}

TEST_CASE("automorphisms agree with the bijection-scan oracle") {
  for (const auto& s : small_rings()) {
    auto r = build_ring(s);
    if (r->order() > 8) continue;
    CAPTURE(r->name());
    auto expected = oracle::bijection_scan_automorphisms(r);
    std::sort(expected.begin(), expected.end());
    auto got = aut_group(r);
    std::vector<std::vector<Elem>> maps;
    for (const auto& a : got) maps.push_back(a.map);
    CHECK(maps == expected);
  }
}

TEST_CASE("automorphism groups are closed and verified") {
  for (const auto& s : {z2z2(), f4(), f8(), RingSpec::product({z(4), z(9)}),
                        RingSpec::product({z(2), z(2), z(2)})}) {
    auto r = build_ring(s);
    CAPTURE(r->name());
    auto auts = aut_group(r);
    auto maps = sorted_maps(auts);
    std::set<Perm> set(maps.begin(), maps.end());
    for (const auto& a : auts) CHECK(a.is_automorphism());
    for (const auto& a : maps) {
      CHECK(set.count(inverse(a)) == 1);
      for (const auto& b : maps) CHECK(set.count(compose(a, b)) == 1);
    }
  }
  CHECK(aut_group(build_ring(RingSpec::product({z(2), z(2), z(2)}))).size() == 6);
}

TEST_CASE("aut cap") {
  Limits tight;
  tight.aut_cap = 16;
  CHECK_THROWS_AS(aut_group(build_ring(z(60)), tight), Error);
}

TEST_CASE("invariance and induced groups on Z2xZ2") {
  auto r = build_ring(z2z2());
  auto auts = aut_group(r);
  auto prp = share(family(r, FamilyKind::Prp));
  CHECK(is_invariant(*prp, auts));

  auto axis = share(IdealFamily(r, {generate(r, {2})}, "custom"));
  CHECK_FALSE(is_invariant(*axis, auts));
  try {
    induced_group(axis, auts);
    FAIL("expected NotInvariant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvariant);
  }

  auto h = induced_group(prp, auts);
  CHECK(h.order() == 2);
  CHECK(h.provenance() == IdealPermGroup::Provenance::FromAut);
  CHECK(h.elements()[1] == Perm{0, 2, 1});
  CHECK(h.inducing().size() == 2);
  CHECK(orbits(h) == std::vector<std::vector<std::size_t>>{{0}, {1, 2}});
  CHECK_FALSE(is_transitive(h));

  auto omega = spectrum(*prp);
  CHECK(is_omega_stable(h, omega).stable);
  CHECK(is_g_congruence(EquivRelation::omega_relation(prp, omega), h));
  CHECK(is_omega_congruence(orbit_relation(h), omega));
  CHECK(check_prop_4_1(h, omega).status == CheckStatus::Vacuous);
}

TEST_CASE("induced groups collapse duplicates") {
  auto r = build_ring(z(12));
  auto prp = share(family(r, FamilyKind::Prp));
  auto h = induced_group(prp, aut_group(r));
  CHECK(h.order() == 1);
  CHECK(orbits(h).size() == prp->size());

  auto f = build_ring(f4());
  auto rd = share(family(f, FamilyKind::Rd));
  CHECK(induced_group(rd, aut_group(f)).order() == 1);
}

TEST_CASE("abstract groups and orbits") {
  auto r = build_ring(z(12));
  auto three = share(IdealFamily(r, {generate(r, {2}), generate(r, {3}), generate(r, {4})}, "custom"));
  auto sym = IdealPermGroup::abstract(three, {{1, 0, 2}, {1, 2, 0}});
  CHECK(sym.order() == 6);
  CHECK(sym.provenance() == IdealPermGroup::Provenance::Abstract);
  CHECK(is_identity(sym.elements()[0]));
  CHECK(orbits(sym).size() == 1);
  auto trivial = IdealPermGroup::abstract(three, {});
  CHECK(orbits(trivial).size() == 3);
  CHECK_FALSE(is_transitive(trivial));
}

TEST_CASE("a transposition across omega-classes is not stable") {
  auto fam = zero_and_axis();
  auto omega = spectrum(*fam);
  REQUIRE(omega.values[0] == OmegaValue::finite(2));
  REQUIRE(omega.values[1] == OmegaValue::finite(1));
  auto perm = IdealPermGroup::abstract(fam, {{1, 0}});
  auto res = is_omega_stable(perm, omega);
  CHECK_FALSE(res.stable);
  REQUIRE(res.violation);
  CHECK(*res.violation == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(is_transitive(perm));
  CHECK(is_g_congruence(EquivRelation::omega_relation(fam, omega), perm));
  CHECK_FALSE(is_omega_congruence(orbit_relation(perm), omega));
  CHECK(check_prop_4_1(perm, omega).status == CheckStatus::Vacuous);
  CHECK(is_omega_stable(IdealPermGroup::abstract(fam, {}), omega).stable);
}

TEST_CASE("equivalence relations") {
  auto r = build_ring(z(12));
  auto prp = share(family(r, FamilyKind::Prp));
  auto omega = spectrum(*prp);
  CHECK_FALSE(is_omega_congruence(EquivRelation::universal(prp), omega));
  CHECK(is_omega_congruence(EquivRelation::equality(prp), omega));
  auto rel = EquivRelation(prp, {{4, 3}, {2, 1}, {0}});
  CHECK(rel.blocks() == std::vector<std::vector<std::size_t>>{{0}, {1, 2}, {3, 4}});
  CHECK(rel == EquivRelation::omega_relation(prp, omega));
  CHECK(rel.related(1, 2));
  CHECK_FALSE(rel.related(0, 1));
  CHECK_THROWS_AS(EquivRelation(prp, {{0, 1}, {1, 2}, {3, 4}}), Error);
  CHECK_THROWS_AS(EquivRelation(prp, {{0, 1}, {2}}), Error);
  CHECK_THROWS_AS(EquivRelation(prp, {{0, 1, 2, 3, 4}, {}}), Error);

  auto other = share(family(r, FamilyKind::Max));
  CHECK_THROWS_AS(is_g_congruence(EquivRelation::equality(other), IdealPermGroup::abstract(prp, {})),
                  Error);
  for (const auto& h : perm_subgroups(prp)) CHECK(is_g_congruence(EquivRelation::equality(prp), h));
}

TEST_CASE("explore_converse") {
  auto fam = zero_and_axis();
  auto w = explore_converse(fam, spectrum(*fam));
  REQUIRE(w.size() == 1);
  CHECK(w[0].order() == 2);

  auto r = build_ring(z(12));
  auto single = share(IdealFamily(r, {zero_ideal(r)}, "custom"));
  CHECK(explore_converse(single, spectrum(*single)).empty());

  auto prp = share(family(r, FamilyKind::Prp));
  auto omega = spectrum(*prp);
  auto found = explore_converse(prp, omega);
  CHECK_FALSE(found.empty());
  auto sim = EquivRelation::omega_relation(prp, omega);
  for (const auto& h : found) {
    CHECK(is_g_congruence(sim, h));
    CHECK_FALSE(is_omega_stable(h, omega).stable);
  }
}

TEST_CASE("subgroup counts of small symmetric groups") {
  // Known subgroup counts of S_1..S_5.
  const std::vector<std::size_t> counts{1, 2, 6, 30, 156};
  auto r = build_ring(z(64));
  auto prp = family(r, FamilyKind::Prp);
  for (std::size_t k = 1; k <= 5; ++k) {
    std::vector<Ideal> members(prp.members().begin(), prp.members().begin() + k);
    auto fam = share(IdealFamily(r, members, "custom"));
    CHECK(perm_subgroups(fam).size() == counts[k - 1]);
  }
  Limits tight;
  tight.subgroup_budget = 10;
  auto fam = share(IdealFamily(r, {prp[0], prp[1], prp[2], prp[3]}, "custom"));
  CHECK_THROWS_AS(perm_subgroups(fam, tight), Error);
}

TEST_CASE("prop 4.1 instances") {
  auto r = build_ring(z2z2());
  auto axes = share(IdealFamily(r, {generate(r, {1}), generate(r, {2})}, "custom"));
  auto swap = IdealPermGroup::abstract(axes, {{1, 0}});
  CHECK(check_prop_4_1(swap, spectrum(*axes)).status == CheckStatus::Holds);
  auto single = share(IdealFamily(r, {zero_ideal(r)}, "custom"));
  CHECK(check_prop_4_1(IdealPermGroup::abstract(single, {}), spectrum(*single)).status ==
        CheckStatus::Holds);
}

TEST_CASE("stable transitive groups on Prp exist exactly for fields") {
  for (const auto& s : {z(5), z(12), f4(), z2z2(), z(4), f8()}) {
    auto r = build_ring(s);
    CAPTURE(r->name());
    auto report = check_cor_4_3(r);
    CHECK(report.status == CheckStatus::Holds);
  }
  auto large = check_cor_4_3(build_ring(z(60)));
  CHECK(large.status == CheckStatus::Holds);
  CHECK(large.witness->at("mode") == "structural");
  CHECK(check_cor_4_1(build_ring(z(12))).status == CheckStatus::Holds);
  CHECK(check_cor_4_1(build_ring(z(7))).status != CheckStatus::Fails);
}

TEST_CASE("involution groups and radical ideals") {
  for (const auto& s : {z2z2(), f4(), RingSpec::product({z(2), z(2), z(2)}), z(12)}) {
    auto r = build_ring(s);
    CAPTURE(r->name());
    CHECK(check_cor_4_2(r).status != CheckStatus::Fails);
  }
}

TEST_CASE("automorphism-induced groups are omega-stable") {
  for (const auto& s : small_rings()) {
    auto r = build_ring(s);
    CAPTURE(r->name());
    for (auto kind : {FamilyKind::Prp, FamilyKind::Max, FamilyKind::Rd}) {
      auto fam = share(family(r, kind));
      auto omega = spectrum(*fam);
      for (const auto& g : aut_subgroups(r)) {
        if (!is_invariant(*fam, g)) continue;
        auto h = induced_group(fam, g);
        CHECK(is_omega_stable(h, omega).stable);
        for (const auto& block : orbits(h))
          for (auto i : block) CHECK(omega.same_class(i, block.front()));
      }
    }
  }
}

TEST_CASE("involutions map radical ideals to radical ideals") {
  for (const auto& s : small_rings()) {
    auto r = build_ring(s);
    const auto rd = family(r, FamilyKind::Rd);
    for (const auto& a : aut_group(r)) {
      if (!a.is_involution()) continue;
      for (const auto& i : rd.members()) CHECK(is_radical(apply(a, i)));
    }
  }
}

TEST_CASE("congruence properties over every subgroup of Perm") {
  for (const auto& s : small_rings()) {
    auto r = build_ring(s);
    const auto prp = family(r, FamilyKind::Prp);
    if (prp.size() > 4) continue;
    CAPTURE(r->name());
    auto fam = share(prp);
    auto omega = spectrum(*fam);
    auto sim = EquivRelation::omega_relation(fam, omega);
    const bool nontrivial = !(sim == EquivRelation::equality(fam)) &&
                            !(sim == EquivRelation::universal(fam));
    bool some_pair = false, distinct = false;
    for (const auto& c : omega.classes) some_pair = some_pair || c.members.size() >= 2;
    distinct = omega.classes.size() >= 2;
    CHECK(nontrivial == (some_pair && distinct));
    for (const auto& h : perm_subgroups(fam)) {
      const bool stable = is_omega_stable(h, omega).stable;
      if (stable) CHECK(is_g_congruence(sim, h));
      CHECK(stable == is_omega_congruence(orbit_relation(h), omega));
    }
  }
}

TEST_CASE("cycle notation") {
  CHECK(format_cycles({0, 1, 2}) == "()");
  CHECK(format_cycles({1, 0, 2}) == "(0 1)");
  CHECK(format_cycles({1, 2, 0, 4, 3}) == "(0 1 2)(3 4)");
  CHECK(parse_cycles("(0 1)(2)", 3) == Perm{1, 0, 2});
  CHECK(parse_cycles("()", 2) == Perm{0, 1});
  CHECK(parse_cycles("(0 2 1)", 3) == Perm{2, 0, 1});
  CHECK_THROWS_AS(parse_cycles("(0 3)", 3), Error);
  CHECK_THROWS_AS(parse_cycles("(0 1)(1 2)", 3), Error);
  CHECK_THROWS_AS(parse_cycles("0 1", 3), Error);
  for (const auto& p : all_permutations(4)) CHECK(parse_cycles(format_cycles(p), 4) == p);
}
