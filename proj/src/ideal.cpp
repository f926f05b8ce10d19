#include "omegalab/ideal.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "omegalab/errors.hpp"

namespace omegalab {

namespace {

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring_ptr() != b.ring_ptr())
    throw Error(ErrorKind::RingMismatch, "ideals belong to different rings");
}

void require_proper(const Ideal& ideal) {
  if (!ideal.is_proper())
    throw Error(ErrorKind::NotProper, "ideal " + ideal.label() + " is the whole ring");
}

// Adds the cyclic subgroup generated by g to the additive subgroup `group`
// (listed in `members`). Every coset group + k*g is either new or already
// inside, so the walk stops at the first k*g already present.
void join_cyclic(const Ring& ring, ElemSet& group, std::vector<Elem>& members, Elem g) {
  if (group.contains(g)) return;
  const std::size_t base = members.size();
  for (Elem step = g; !group.contains(step); step = ring.add(step, g))
    for (std::size_t i = 0; i < base; ++i) {
      const Elem x = ring.add(members[i], step);
      group.insert(x);
      members.push_back(x);
    }
}

// Additive subgroup generated by `seeds` (0 is always included).
ElemSet additive_closure(const Ring& ring, const std::vector<Elem>& seeds) {
  ElemSet group(ring.order());
  group.insert(0);
  std::vector<Elem> members{0};
  for (Elem g : seeds) join_cyclic(ring, group, members, g);
  return group;
}

}  // namespace

Ideal::Ideal(RingPtr ring, ElemSet elements, std::vector<Elem> generators)
    : ring_(std::move(ring)), elements_(std::move(elements)), generators_(std::move(generators)) {}

std::string Ideal::label() const {
  std::vector<Elem> gens = generators_;
  if (gens.empty()) {
    if (is_zero()) {
      gens.push_back(0);
    } else if (!is_proper()) {
      gens.push_back(ring_->one());
    } else {
      // Greedy generating set in index order.
      ElemSet span(ring_->order());
      span.insert(0);
      elements_.for_each([&](Elem x) {
        if (span.contains(x)) return;
        gens.push_back(x);
        span = generate(ring_, gens).elements();
      });
    }
  }
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += ring_->element_name(gens[i]);
  }
  return out + ">";
}

IdealFamily::IdealFamily(RingPtr ring, std::vector<Ideal> members, std::string label)
    : ring_(std::move(ring)), members_(std::move(members)), label_(std::move(label)) {
  if (members_.empty()) throw Error(ErrorKind::InvalidSpec, "ideal family is empty");
  for (const auto& m : members_) {
    if (m.ring_ptr() != ring_)
      throw Error(ErrorKind::RingMismatch, "family member from a different ring");
    require_proper(m);
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i].elements(), i);
}

std::optional<std::size_t> IdealFamily::index_of(const ElemSet& elements) const {
  auto it = index_.find(elements);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Prp: return "prp";
    case FamilyKind::Max: return "max";
    case FamilyKind::Rd: return "rd";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(std::string_view text) {
  if (text == "prp") return FamilyKind::Prp;
  if (text == "max") return FamilyKind::Max;
  if (text == "rd") return FamilyKind::Rd;
  return std::nullopt;
}

Ideal zero_ideal(const RingPtr& ring) {
  ElemSet s(ring->order());
  s.insert(0);
  return Ideal(ring, std::move(s), {0});
}

Ideal whole_ring(const RingPtr& ring) {
  ElemSet s(ring->order());
  for (Elem x = 0; x < ring->order(); ++x) s.insert(x);
  return Ideal(ring, std::move(s), {ring->one()});
}

Ideal generate(const RingPtr& ring, const std::vector<Elem>& gens) {
  const Ring& r = *ring;
  for (Elem g : gens)
    if (g >= r.order())
      throw Error(ErrorKind::InvalidSpec, "generator " + std::to_string(g) + " out of range");
  // One round of "all r*g, then additive closure" is already a fixpoint: a
  // sum of multiples r_i*g_i is carried by every s to the sum of (s*r_i)*g_i.
  std::vector<Elem> multiples;
  ElemSet seen(r.order());
  for (Elem g : gens)
    for (Elem x = 0; x < r.order(); ++x) {
      const Elem y = r.mul(x, g);
      if (!seen.contains(y)) {
        seen.insert(y);
        multiples.push_back(y);
      }
    }
  return Ideal(ring, additive_closure(r, multiples), gens);
}

std::vector<Ideal> all_ideals(const RingPtr& ring, const Limits& limits) {
  if (ring->order() > limits.ideal_cap)
    throw Error(ErrorKind::CapExceeded, "ring order " + std::to_string(ring->order()) +
                                            " exceeds ideal cap " +
                                            std::to_string(limits.ideal_cap));
  std::vector<Ideal> principal;
  std::set<ElemSet> seen;
  for (Elem x = 0; x < ring->order(); ++x) {
    Ideal p = generate(ring, {x});
    if (seen.insert(p.elements()).second) principal.push_back(std::move(p));
  }
  // Every ideal is a finite sum of principal ideals.
  std::deque<Ideal> work(principal.begin(), principal.end());
  std::vector<Ideal> out = principal;
  while (!work.empty()) {
    Ideal cur = std::move(work.front());
    work.pop_front();
    for (const auto& p : principal) {
      if (p.elements().is_subset_of(cur.elements())) continue;
      Ideal s = ideal_sum(cur, p);
      if (seen.insert(s.elements()).second) {
        out.push_back(s);
        work.push_back(std::move(s));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const Ring& r = a.ring();
  ElemSet group = a.elements();
  std::vector<Elem> members = a.elements().elements();
  b.elements().for_each([&](Elem y) { join_cyclic(r, group, members, y); });
  return Ideal(a.ring_ptr(), std::move(group));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const Ring& r = a.ring();
  // Pairwise products are already closed under multiplication by R.
  ElemSet seen(r.order());
  std::vector<Elem> products;
  a.elements().for_each([&](Elem x) {
    b.elements().for_each([&](Elem y) {
      const Elem z = r.mul(x, y);
      if (!seen.contains(z)) {
        seen.insert(z);
        products.push_back(z);
      }
    });
  });
  return Ideal(a.ring_ptr(), additive_closure(r, products));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal(a.ring_ptr(), a.elements() & b.elements());
}

Ideal radical(const Ideal& ideal) {
  const Ring& r = ideal.ring();
  ElemSet out(r.order());
  for (Elem x = 0; x < r.order(); ++x) {
    // Powers of x enter a cycle within |R| steps.
    Elem p = x;
    for (std::size_t k = 1; k <= r.order(); ++k) {
      if (ideal.contains(p)) {
        out.insert(x);
        break;
      }
      p = r.mul(p, x);
    }
  }
  return Ideal(ideal.ring_ptr(), std::move(out));
}

bool is_prime(const Ideal& ideal) {
  require_proper(ideal);
  const Ring& r = ideal.ring();
  for (Elem x = 0; x < r.order(); ++x) {
    if (ideal.contains(x)) continue;
    for (Elem y = x; y < r.order(); ++y)
      if (!ideal.contains(y) && ideal.contains(r.mul(x, y))) return false;
  }
  return true;
}

bool is_maximal(const Ideal& ideal) {
  require_proper(ideal);
  // I is covered by R exactly when I + <x> = R for every x outside I.
  const auto& ring = ideal.ring_ptr();
  for (Elem x = 0; x < ring->order(); ++x) {
    if (ideal.contains(x)) continue;
    if (ideal_sum(ideal, generate(ring, {x})).is_proper()) return false;
  }
  return true;
}

bool is_primary(const Ideal& ideal) {
  require_proper(ideal);
  return is_prime(radical(ideal));
}

bool is_primary_by_definition(const Ideal& ideal) {
  require_proper(ideal);
  const Ring& r = ideal.ring();
  const Ideal rad = radical(ideal);
  for (Elem x = 0; x < r.order(); ++x) {
    if (ideal.contains(x)) continue;
    for (Elem y = 0; y < r.order(); ++y)
      if (ideal.contains(r.mul(x, y)) && !rad.contains(y)) return false;
  }
  return true;
}

bool is_radical(const Ideal& ideal) { return radical(ideal).elements() == ideal.elements(); }

IdealFamily family(const RingPtr& ring, FamilyKind kind, const Limits& limits) {
  std::vector<Ideal> members;
  for (auto& ideal : all_ideals(ring, limits)) {
    if (!ideal.is_proper()) continue;
    const bool keep = kind == FamilyKind::Prp   ? true
                      : kind == FamilyKind::Max ? is_maximal(ideal)
                                                : is_radical(ideal);
    if (keep) members.push_back(std::move(ideal));
  }
  return IdealFamily(ring, std::move(members), std::string(to_string(kind)));
}

}  // namespace omegalab
