#include "omegalab/action.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "omegalab/errors.hpp"

namespace omegalab {

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

class AutSearch {
 public:
  explicit AutSearch(const Ring& ring)
      : ring_(ring), m_(ring.order()), phi_(m_, kUnset), used_(m_, false) {
    for (Elem x = 0; x < m_; ++x) {
      add_order_.push_back(ring.additive_order(x));
      unit_.push_back(ring.is_unit(x));
      idempotent_.push_back(ring.mul(x, x) == x);
    }
  }

  std::vector<std::vector<Elem>> run() {
    if (assign(0, 0) && assign(ring_.one(), ring_.one())) search();
    return std::move(found_);
  }

 private:
  bool compatible(Elem x, Elem y) const {
    return add_order_[x] == add_order_[y] && unit_[x] == unit_[y] &&
           idempotent_[x] == idempotent_[y];
  }

  // Sets phi(x) = y and every value it forces through + and *. Leaves the
  // partial assignment dirty on conflict; the caller undoes it.
  bool assign(Elem x, Elem y) {
    std::vector<std::pair<Elem, Elem>> work{{x, y}};
    while (!work.empty()) {
      auto [a, b] = work.back();
      work.pop_back();
      if (phi_[a] != kUnset) {
        if (phi_[a] != b) return false;
        continue;
      }
      if (used_[b] || !compatible(a, b)) return false;
      phi_[a] = b;
      used_[b] = true;
      defined_.push_back(a);
      for (Elem d : defined_) {
        work.emplace_back(ring_.add(a, d), ring_.add(b, phi_[d]));
        work.emplace_back(ring_.mul(a, d), ring_.mul(b, phi_[d]));
      }
    }
    return true;
  }

  void undo(std::size_t keep) {
    while (defined_.size() > keep) {
      const Elem a = defined_.back();
      defined_.pop_back();
      used_[phi_[a]] = false;
      phi_[a] = kUnset;
    }
  }

  void search() {
    Elem x = 0;
    while (x < m_ && phi_[x] != kUnset) ++x;
    if (x == m_) {
      found_.push_back(phi_);
      return;
    }
    for (Elem y = 0; y < m_; ++y) {
      if (used_[y] || !compatible(x, y)) continue;
      const std::size_t keep = defined_.size();
      if (assign(x, y)) search();
      undo(keep);
    }
  }

  const Ring& ring_;
  Elem m_;
  std::vector<Elem> phi_;
  std::vector<bool> used_;
  std::vector<Elem> defined_;
  std::vector<std::size_t> add_order_;
  std::vector<bool> unit_, idempotent_;
  std::vector<std::vector<Elem>> found_;
};

void require_same_family(const IdealFamily& a, const IdealFamily& b) {
  if (!(a == b)) throw Error(ErrorKind::FamilyMismatch, "relation and group act on different families");
}

void require_partition_size(const IdealFamily& fam, const OmegaPartition& omega) {
  if (omega.values.size() != fam.size())
    throw Error(ErrorKind::FamilyMismatch, "omega partition does not match the family");
}

Perm induced_perm(const IdealFamily& family, const RingAut& aut) {
  Perm p(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto j = family.index_of(apply(aut, family[i]).elements());
    if (!j)
      throw Error(ErrorKind::NotInvariant,
                  "automorphism maps " + family[i].label() + " outside the family");
    p[i] = static_cast<std::uint32_t>(*j);
  }
  return p;
}

nlohmann::ordered_json group_json(const IdealPermGroup& group) {
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const auto& g : group.generators()) gens.push_back(format_cycles(g));
  return {{"order", group.order()}, {"generators", gens}};
}

}  // namespace

bool RingAut::is_identity() const {
  for (Elem x = 0; x < map.size(); ++x)
    if (map[x] != x) return false;
  return true;
}

bool RingAut::is_involution() const {
  for (Elem x = 0; x < map.size(); ++x)
    if (map[map[x]] != x) return false;
  return true;
}

bool RingAut::is_automorphism() const {
  const Ring& r = *ring;
  if (map.size() != r.order()) return false;
  std::vector<bool> hit(map.size(), false);
  for (Elem y : map) {
    if (y >= map.size() || hit[y]) return false;
    hit[y] = true;
  }
  if (map[0] != 0 || map[r.one()] != r.one()) return false;
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = a; b < r.order(); ++b)
      if (map[r.add(a, b)] != r.add(map[a], map[b]) || map[r.mul(a, b)] != r.mul(map[a], map[b]))
        return false;
  return true;
}

std::vector<RingAut> aut_group(const RingPtr& ring, const Limits& limits) {
  if (ring->order() > limits.aut_cap)
    throw Error(ErrorKind::CapExceeded, "ring order " + std::to_string(ring->order()) +
                                            " exceeds automorphism cap " +
                                            std::to_string(limits.aut_cap));
  auto maps = AutSearch(*ring).run();
  std::sort(maps.begin(), maps.end());
  std::vector<RingAut> out;
  for (auto& m : maps) {
    RingAut aut{ring, std::move(m)};
    if (!aut.is_automorphism())
      throw Error(ErrorKind::InternalBoundViolated, "automorphism search produced a non-automorphism");
    out.push_back(std::move(aut));
  }
  return out;
}

std::vector<std::vector<RingAut>> aut_subgroups(const RingPtr& ring, const Limits& limits) {
  std::vector<Perm> ambient;
  for (const auto& a : aut_group(ring, limits)) ambient.emplace_back(a.map.begin(), a.map.end());
  std::vector<std::vector<RingAut>> out;
  for (const auto& sub : enumerate_subgroups(ambient, ring->order(), limits)) {
    auto& g = out.emplace_back();
    for (const auto& e : sub.elements) g.push_back(RingAut{ring, std::vector<Elem>(e.begin(), e.end())});
  }
  return out;
}

Ideal apply(const RingAut& aut, const Ideal& ideal) {
  if (aut.ring != ideal.ring_ptr())
    throw Error(ErrorKind::RingMismatch, "automorphism and ideal belong to different rings");
  ElemSet out(ideal.ring().order());
  ideal.elements().for_each([&](Elem x) { out.insert(aut.map[x]); });
  std::vector<Elem> gens;
  for (Elem g : ideal.generators()) gens.push_back(aut.map[g]);
  return Ideal(ideal.ring_ptr(), std::move(out), std::move(gens));
}

IdealPermGroup IdealPermGroup::abstract(FamilyPtr family, std::vector<Perm> generators,
                                        const Limits& limits) {
  for (const auto& g : generators)
    if (g.size() != family->size() || !is_permutation(g))
      throw Error(ErrorKind::Usage, "generator is not a permutation of the family indices");
  IdealPermGroup out;
  out.elements_ = group_closure(generators, family->size(), limits.group_order_cap);
  out.family_ = std::move(family);
  out.generators_ = std::move(generators);
  out.provenance_ = Provenance::Abstract;
  return out;
}

EquivRelation::EquivRelation(FamilyPtr family, std::vector<std::vector<std::size_t>> blocks)
    : family_(std::move(family)), blocks_(std::move(blocks)) {
  const std::size_t n = family_->size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  block_of_.assign(n, kNone);
  for (auto& b : blocks_) {
    if (b.empty()) throw Error(ErrorKind::InvalidSpec, "empty block in equivalence relation");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    for (auto i : blocks_[k]) {
      if (i >= n) throw Error(ErrorKind::InvalidSpec, "block member out of range");
      if (block_of_[i] != kNone) throw Error(ErrorKind::InvalidSpec, "blocks overlap");
      block_of_[i] = k;
    }
  if (std::find(block_of_.begin(), block_of_.end(), kNone) != block_of_.end())
    throw Error(ErrorKind::InvalidSpec, "blocks do not cover the family");
}

EquivRelation EquivRelation::equality(FamilyPtr family) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < family->size(); ++i) blocks.push_back({i});
  return EquivRelation(std::move(family), std::move(blocks));
}

EquivRelation EquivRelation::universal(FamilyPtr family) {
  std::vector<std::size_t> all(family->size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return EquivRelation(std::move(family), {all});
}

EquivRelation EquivRelation::omega_relation(FamilyPtr family, const OmegaPartition& partition) {
  require_partition_size(*family, partition);
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& c : partition.classes) blocks.push_back(c.members);
  return EquivRelation(std::move(family), std::move(blocks));
}

bool is_invariant(const IdealFamily& family, const std::vector<RingAut>& group) {
  for (const auto& g : group) {
    if (g.ring != family.ring_ptr())
      throw Error(ErrorKind::RingMismatch, "automorphism and family belong to different rings");
    for (const auto& member : family.members())
      if (!family.index_of(apply(g, member).elements())) return false;
  }
  return true;
}

IdealPermGroup induced_group(const FamilyPtr& family, const std::vector<RingAut>& group,
                             const Limits& limits) {
  if (!is_invariant(*family, group))
    throw Error(ErrorKind::NotInvariant, "family is not invariant under the automorphisms");
  const RingPtr& ring = family->ring_ptr();

  // Close the automorphisms under composition so that every element of the
  // induced group has a recorded inducing automorphism.
  std::vector<Perm> ring_gens;
  for (const auto& g : group) ring_gens.emplace_back(g.map.begin(), g.map.end());
  const auto closed = group_closure(ring_gens, ring->order(), limits.group_order_cap);

  std::map<Perm, RingAut> induced;
  for (const auto& m : closed) {
    RingAut aut{ring, std::vector<Elem>(m.begin(), m.end())};
    induced.try_emplace(induced_perm(*family, aut), std::move(aut));
  }
  IdealPermGroup out;
  out.family_ = family;
  out.provenance_ = IdealPermGroup::Provenance::FromAut;
  for (const auto& g : group) {
    Perm p = induced_perm(*family, g);
    if (!is_identity(p) && std::find(out.generators_.begin(), out.generators_.end(), p) ==
                               out.generators_.end())
      out.generators_.push_back(std::move(p));
  }
  for (auto& [perm, aut] : induced) {
    out.elements_.push_back(perm);
    out.inducing_.push_back(aut);
  }
  return out;
}

std::vector<std::vector<std::size_t>> orbits(const IdealPermGroup& group) {
  const std::size_t n = group.family().size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    for (const auto& h : group.elements())
      if (!seen[h[i]]) {
        seen[h[i]] = true;
        orbit.push_back(h[i]);
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

EquivRelation orbit_relation(const IdealPermGroup& group) {
  return EquivRelation(group.family_ptr(), orbits(group));
}

StabilityResult is_omega_stable(const IdealPermGroup& group, const OmegaPartition& omega) {
  require_partition_size(group.family(), omega);
  const auto& elems = group.elements();
  for (std::size_t h = 0; h < elems.size(); ++h)
    for (std::size_t i = 0; i < elems[h].size(); ++i)
      if (omega.values[elems[h][i]] != omega.values[i])
        return StabilityResult{false, std::make_pair(h, i)};
  return {};
}

bool is_transitive(const IdealPermGroup& group) { return orbits(group).size() == 1; }

bool is_g_congruence(const EquivRelation& rel, const IdealPermGroup& group) {
  require_same_family(rel.family(), group.family());
  const std::size_t n = rel.family().size();
  for (const auto& h : group.elements())
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rel.related(i, j) != rel.related(h[i], h[j])) return false;
  return true;
}

bool is_omega_congruence(const EquivRelation& rel, const OmegaPartition& omega) {
  require_partition_size(rel.family(), omega);
  for (const auto& block : rel.blocks())
    for (auto i : block)
      if (omega.values[i] != omega.values[block.front()]) return false;
  return true;
}

std::vector<IdealPermGroup> perm_subgroups(const FamilyPtr& family, const Limits& limits) {
  const std::size_t k = family->size();
  if (k > 6)
    throw Error(ErrorKind::CapExceeded,
                "subgroup enumeration needs a family of at most 6 members, got " + std::to_string(k));
  // Subgroups of Perm(family) depend only on the family size.
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Subgroup>> cache;
  std::vector<Subgroup> subgroups;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(k);
    if (it == cache.end())
      it = cache.emplace(k, enumerate_subgroups(all_permutations(k), k, Limits{})).first;
    subgroups = it->second;
  }
  if (subgroups.size() > limits.subgroup_budget)
    throw Error(ErrorKind::CapExceeded, "Perm of " + std::to_string(k) + " members has " +
                                            std::to_string(subgroups.size()) +
                                            " subgroups, budget is " +
                                            std::to_string(limits.subgroup_budget));
  std::vector<IdealPermGroup> out;
  out.reserve(subgroups.size());
  for (auto& s : subgroups) out.push_back(IdealPermGroup::abstract(family, s.generators, limits));
  return out;
}

std::vector<IdealPermGroup> explore_converse(const FamilyPtr& family, const OmegaPartition& omega,
                                             const Limits& limits) {
  const auto sim = EquivRelation::omega_relation(family, omega);
  std::vector<IdealPermGroup> witnesses;
  for (auto& h : perm_subgroups(family, limits))
    if (is_g_congruence(sim, h) && !is_omega_congruence(orbit_relation(h), omega))
      witnesses.push_back(std::move(h));
  return witnesses;
}

CheckReport check_prop_4_1(const IdealPermGroup& group, const OmegaPartition& omega) {
  CheckReport report{"stable_transitive_single_value", CheckStatus::Vacuous, std::nullopt, ""};
  const bool stable = is_omega_stable(group, omega).stable;
  const bool transitive = is_transitive(group);
  if (!stable || !transitive) {
    report.note = std::string(stable ? "" : "not omega-stable") +
                  (!stable && !transitive ? ", " : "") + (transitive ? "" : "not transitive");
    return report;
  }
  nlohmann::ordered_json spec = nlohmann::ordered_json::array();
  for (const auto& v : omega.spectrum) spec.push_back(v.to_string());
  report.witness = nlohmann::ordered_json{{"group", group_json(group)}, {"spectrum", spec}};
  report.status = omega.spectrum.size() == 1 ? CheckStatus::Holds : CheckStatus::Fails;
  return report;
}

StableTransitiveSearch find_stable_transitive(const FamilyPtr& family, const OmegaPartition& omega,
                                              const Limits& limits) {
  StableTransitiveSearch out;
  if (family->size() <= 6) {
    out.mode = "search";
    for (const auto& h : perm_subgroups(family, limits))
      if (is_transitive(h) && is_omega_stable(h, omega).stable) {
        out.exists = true;
        if (!h.generators().empty()) out.witness_generator = h.generators().front();
        return out;
      }
    return out;
  }
  // A transitive group has the whole family as its only orbit, so it is
  // omega-stable iff the family is one omega-class; the cyclic group on the
  // members is then a transitive witness.
  out.mode = "structural";
  Perm cycle(family->size());
  for (std::size_t i = 0; i < cycle.size(); ++i)
    cycle[i] = static_cast<std::uint32_t>((i + 1) % cycle.size());
  auto cyclic = IdealPermGroup::abstract(family, {cycle}, limits);
  const bool stable = is_omega_stable(cyclic, omega).stable;
  if (stable != (omega.spectrum.size() == 1))
    throw Error(ErrorKind::InternalBoundViolated, "cyclic witness disagrees with omega classes");
  out.exists = stable;
  if (stable) out.witness_generator = cycle;
  return out;
}

CheckReport check_cor_4_3(const RingPtr& ring, const Limits& limits) {
  auto fam = std::make_shared<const IdealFamily>(family(ring, FamilyKind::Prp, limits));
  const auto omega = spectrum(*fam, limits);
  const auto search = find_stable_transitive(fam, omega, limits);
  const bool field = is_field(*ring);
  CheckReport report{"stable_transitive_on_prp_iff_field",
                     search.exists == field ? CheckStatus::Holds : CheckStatus::Fails,
                     nlohmann::ordered_json{{"field", field},
                                            {"stable_transitive_exists", search.exists},
                                            {"mode", search.mode}},
                     ""};
  report.note = is_domain(*ring) ? "domain hypothesis satisfied"
                                 : "not a domain; checked in the field-iff form on a finite ring";
  return report;
}

CheckReport check_cor_4_1(const RingPtr& ring, const Limits& limits) {
  auto fam = std::make_shared<const IdealFamily>(family(ring, FamilyKind::Prp, limits));
  const auto omega = spectrum(*fam, limits);
  const auto search = find_stable_transitive(fam, omega, limits);
  CheckReport report{"domain_stable_transitive_forces_prime", CheckStatus::Vacuous,
                     nlohmann::ordered_json{{"stable_transitive_exists", search.exists},
                                            {"spectrum_size", omega.spectrum.size()},
                                            {"mode", search.mode}},
                     ""};
  if (is_domain(*ring)) {
    report.note = "domain hypothesis satisfied";
    if (search.exists) {
      bool all_prime = true;
      for (const auto& m : fam->members()) all_prime = all_prime && is_prime(m);
      report.status = all_prime ? CheckStatus::Holds : CheckStatus::Fails;
    }
    return report;
  }
  report.note = "not a domain; checked the contrapositive: 0 in Prp(R) and more than one omega "
                "value rule out a stable transitive group";
  if (omega.spectrum.size() > 1)
    report.status = search.exists ? CheckStatus::Fails : CheckStatus::Holds;
  return report;
}

CheckReport check_cor_4_2(const RingPtr& ring, const Limits& limits) {
  auto rd = std::make_shared<const IdealFamily>(family(ring, FamilyKind::Rd, limits));
  const bool domain = is_domain(*ring);

  CheckReport report{"transitive_on_radicals_forces_prime", CheckStatus::Vacuous, std::nullopt,
                     domain ? "domain hypothesis satisfied" : "not a domain"};
  nlohmann::ordered_json radicals = nlohmann::ordered_json::array();
  bool all_prime = true;
  for (const auto& m : rd->members()) {
    radicals.push_back({{"ideal", m.label()}, {"prime", is_prime(m)}, {"primary", is_primary(m)}});
    all_prime = all_prime && is_prime(m);
  }
  std::size_t involution_groups = 0, transitive = 0;
  for (const auto& g : aut_subgroups(ring, limits)) {
    if (!std::all_of(g.begin(), g.end(), [](const RingAut& a) { return a.is_involution(); }))
      continue;
    ++involution_groups;
    if (is_transitive(induced_group(rd, g, limits))) ++transitive;
  }
  report.witness = nlohmann::ordered_json{{"involution_subgroups", involution_groups},
                                          {"transitive_on_rd", transitive},
                                          {"radical_ideals", radicals}};
  if (transitive > 0) {
    if (all_prime)
      report.status = CheckStatus::Holds;
    else if (domain)
      report.status = CheckStatus::Fails;
  }
  return report;
}

}  // namespace omegalab
