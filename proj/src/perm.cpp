#include "omegalab/perm.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "omegalab/errors.hpp"

namespace omegalab {

Perm identity_perm(std::size_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint32_t>(i);
  return out;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> hit(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

std::vector<Perm> group_closure(const std::vector<Perm>& gens, std::size_t degree,
                                std::size_t order_cap) {
  std::set<Perm> seen{identity_perm(degree)};
  std::deque<Perm> work{identity_perm(degree)};
  while (!work.empty()) {
    Perm cur = std::move(work.front());
    work.pop_front();
    for (const auto& g : gens) {
      Perm next = compose(g, cur);
      if (seen.insert(next).second) {
        if (seen.size() > order_cap)
          throw Error(ErrorKind::CapExceeded,
                      "group order exceeds " + std::to_string(order_cap));
        work.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Perm> all_permutations(std::size_t degree) {
  std::vector<Perm> out;
  Perm p = identity_perm(degree);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Subgroup> enumerate_subgroups(const std::vector<Perm>& ambient, std::size_t degree,
                                          const Limits& limits) {
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < ambient.size(); ++i) index.emplace(ambient[i], i);
  const auto order_cap = std::max(ambient.size(), std::size_t{1});

  std::map<std::vector<Perm>, std::vector<Perm>> found;  // elements -> generators
  std::deque<std::vector<Perm>> work;
  std::vector<Perm> trivial{identity_perm(degree)};
  found.emplace(trivial, std::vector<Perm>{});
  work.push_back(trivial);

  while (!work.empty()) {
    const std::vector<Perm> elements = std::move(work.front());
    work.pop_front();
    const std::vector<Perm> gens = found.at(elements);

    // <H, g> = <H, h g> for h in H, so one generator per right coset suffices.
    std::vector<bool> covered(ambient.size(), false);
    for (const auto& h : elements) covered[index.at(h)] = true;
    for (std::size_t i = 0; i < ambient.size(); ++i) {
      if (covered[i]) continue;
      for (const auto& h : elements) covered[index.at(compose(h, ambient[i]))] = true;
      auto next_gens = gens;
      next_gens.push_back(ambient[i]);
      auto next = group_closure(next_gens, degree, order_cap);
      if (found.count(next)) continue;
      if (found.size() >= limits.subgroup_budget)
        throw Error(ErrorKind::CapExceeded,
                    "more than " + std::to_string(limits.subgroup_budget) + " subgroups");
      found.emplace(next, std::move(next_gens));
      work.push_back(std::move(next));
    }
  }

  std::vector<Subgroup> out;
  for (auto& [elements, gens] : found) out.push_back(Subgroup{gens, elements});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !done[j]; j = p[j]) {
      done[j] = true;
      if (j != i) out += " ";
      out += std::to_string(j);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Perm parse_cycles(std::string_view text, std::size_t degree) {
  Perm p = identity_perm(degree);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::Usage, "bad cycle notation '" + std::string(text) + "': " + why);
  };
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
      if (ec != std::errc()) fail("expected an index");
      pos = static_cast<std::size_t>(ptr - text.data());
      if (v >= degree) fail("index " + std::to_string(v) + " out of range");
      if (used[v]) fail("index " + std::to_string(v) + " repeated");
      used[v] = true;
      cycle.push_back(v);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_space();
  }
  return p;
}

}  // namespace omegalab
