#include "omegalab/ring.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <sstream>

#include "omegalab/errors.hpp"

namespace omegalab {

RingSpec RingSpec::zn(std::uint64_t n) {
  RingSpec s;
  s.kind = Kind::Zn;
  s.modulus = n;
  return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
  RingSpec s;
  s.kind = Kind::Product;
  s.factors = std::move(factors);
  return s;
}

RingSpec RingSpec::poly_quotient(std::uint64_t p, std::vector<std::uint64_t> coeffs) {
  RingSpec s;
  s.kind = Kind::PolyQuotient;
  s.prime = p;
  s.poly = std::move(coeffs);
  return s;
}

RingSpec RingSpec::table(std::vector<std::vector<std::uint64_t>> add,
                         std::vector<std::vector<std::uint64_t>> mul) {
  RingSpec s;
  s.kind = Kind::Table;
  s.add_table = std::move(add);
  s.mul_table = std::move(mul);
  return s;
}

std::string_view to_string(RingSpec::Kind kind) {
  switch (kind) {
    case RingSpec::Kind::Zn: return "zn";
    case RingSpec::Kind::Product: return "product";
    case RingSpec::Kind::PolyQuotient: return "poly_quotient";
    case RingSpec::Kind::Table: return "table";
  }
  return "?";
}

std::string AxiomViolation::describe() const {
  std::ostringstream os;
  os << axiom << ", witness (" << a << ", " << b << ", " << c << ")";
  return os.str();
}

namespace {

std::string poly_to_string(const std::vector<std::uint64_t>& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const auto c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

// Runs the axiom checks over abstract operations. Returns the first failure
// in a fixed order so that diagnostics are reproducible.
template <typename Add, typename Mul>
std::optional<AxiomViolation> check_axioms(std::size_t m, Add add, Mul mul,
                                           std::size_t exhaustive_up_to) {
  const bool exhaustive = m <= exhaustive_up_to;
  const auto n = static_cast<Elem>(m);

  for (Elem a = 0; a < n; ++a)
    if (add(0, a) != a) return AxiomViolation{"0 is not an additive identity", a, 0, 0};

  // Pairs are always checked exhaustively; m^2 is affordable at every cap.
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (add(a, b) != add(b, a))
        return AxiomViolation{"addition is not commutative", a, b, 0};

  std::vector<std::array<Elem, 3>> triples;
  if (!exhaustive) {
    std::mt19937_64 rng(0x6f6d656761ull);
    std::uniform_int_distribution<Elem> pick(0, n - 1);
    triples.resize(200000);
    for (auto& t : triples) t = {pick(rng), pick(rng), pick(rng)};
  }
  auto for_triples = [&](auto&& pred) -> std::optional<std::array<Elem, 3>> {
    if (exhaustive) {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          for (Elem c = 0; c < n; ++c)
            if (!pred(a, b, c)) return std::array<Elem, 3>{a, b, c};
    } else {
      for (const auto& t : triples)
        if (!pred(t[0], t[1], t[2])) return t;
    }
    return std::nullopt;
  };

  if (auto w = for_triples([&](Elem a, Elem b, Elem c) {
        return add(add(a, b), c) == add(a, add(b, c));
      }))
    return AxiomViolation{"addition is not associative", (*w)[0], (*w)[1], (*w)[2]};

  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b) found = add(a, b) == 0;
    if (!found) return AxiomViolation{"element has no additive inverse", a, 0, 0};
  }

  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a))
        return AxiomViolation{"multiplication is not commutative", a, b, 0};

  if (auto w = for_triples([&](Elem a, Elem b, Elem c) {
        return mul(mul(a, b), c) == mul(a, mul(b, c));
      }))
    return AxiomViolation{"multiplication is not associative", (*w)[0], (*w)[1], (*w)[2]};

  if (auto w = for_triples([&](Elem a, Elem b, Elem c) {
        return mul(a, add(b, c)) == add(mul(a, b), mul(a, c));
      }))
    return AxiomViolation{"multiplication does not distribute over addition", (*w)[0],
                          (*w)[1], (*w)[2]};

  bool has_one = false;
  for (Elem e = 0; e < n && !has_one; ++e) {
    has_one = true;
    for (Elem a = 0; a < n && has_one; ++a) has_one = mul(e, a) == a;
  }
  if (!has_one) return AxiomViolation{"no multiplicative identity", 0, 0, 0};
  return std::nullopt;
}

std::uint64_t checked_order(std::uint64_t acc, std::uint64_t factor, std::size_t cap) {
  if (factor != 0 && acc > cap / factor)
    throw Error(ErrorKind::CapExceeded,
                "table-backed ring would exceed " + std::to_string(cap) + " elements");
  return acc * factor;
}

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

RingPtr build_product(const RingSpec& spec, std::size_t cap) {
  if (spec.factors.size() < 2)
    throw Error(ErrorKind::InvalidSpec, "product needs at least 2 factors");
  std::vector<RingPtr> parts;
  std::uint64_t order = 1;
  for (const auto& f : spec.factors) {
    parts.push_back(build_ring(f, cap));
    order = checked_order(order, parts.back()->order(), cap);
  }
  const auto m = static_cast<std::size_t>(order);

  // Mixed radix, first factor most significant.
  std::vector<std::vector<Elem>> digits(m, std::vector<Elem>(parts.size()));
  for (std::size_t x = 0; x < m; ++x) {
    std::size_t rest = x;
    for (std::size_t k = parts.size(); k-- > 0;) {
      digits[x][k] = static_cast<Elem>(rest % parts[k]->order());
      rest /= parts[k]->order();
    }
  }
  auto encode = [&](const std::vector<Elem>& d) {
    std::size_t x = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) x = x * parts[k]->order() + d[k];
    return static_cast<Elem>(x);
  };

  std::vector<Elem> add(m * m), mul(m * m);
  std::vector<Elem> tmp_a(parts.size()), tmp_m(parts.size());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t k = 0; k < parts.size(); ++k) {
        tmp_a[k] = parts[k]->add(digits[a][k], digits[b][k]);
        tmp_m[k] = parts[k]->mul(digits[a][k], digits[b][k]);
      }
      add[a * m + b] = encode(tmp_a);
      mul[a * m + b] = encode(tmp_m);
    }

  std::vector<std::string> names(m);
  for (std::size_t x = 0; x < m; ++x) {
    std::string s = "(";
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) s += ",";
      s += parts[k]->element_name(digits[x][k]);
    }
    names[x] = s + ")";
  }
  return std::make_shared<const Ring>(canonical_name(spec), spec, m, std::move(add),
                                      std::move(mul), std::move(names));
}

RingPtr build_poly_quotient(const RingSpec& spec, std::size_t cap) {
  const std::uint64_t p = spec.prime;
  if (!is_prime_u64(p))
    throw Error(ErrorKind::InvalidSpec, "modulus p = " + std::to_string(p) + " is not prime");
  if (spec.poly.size() < 2)
    throw Error(ErrorKind::InvalidSpec, "polynomial must have degree >= 1");
  for (auto c : spec.poly)
    if (c >= p)
      throw Error(ErrorKind::InvalidSpec,
                  "coefficient " + std::to_string(c) + " not in [0," + std::to_string(p) + ")");
  if (spec.poly.back() != 1)
    throw Error(ErrorKind::InvalidSpec, "polynomial is not monic");

  const std::size_t deg = spec.poly.size() - 1;
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < deg; ++i) order = checked_order(order, p, cap);
  const auto m = static_cast<std::size_t>(order);

  // Base-p digits, constant term least significant.
  std::vector<std::vector<std::uint64_t>> coeffs(m, std::vector<std::uint64_t>(deg));
  for (std::size_t x = 0; x < m; ++x) {
    std::size_t rest = x;
    for (std::size_t i = 0; i < deg; ++i) {
      coeffs[x][i] = rest % p;
      rest /= p;
    }
  }
  auto encode = [&](const std::vector<std::uint64_t>& c) {
    std::size_t x = 0;
    for (std::size_t i = deg; i-- > 0;) x = x * p + c[i];
    return static_cast<Elem>(x);
  };

  std::vector<Elem> add(m * m), mul(m * m);
  std::vector<std::uint64_t> sum(deg), prod(2 * deg);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t i = 0; i < deg; ++i) sum[i] = (coeffs[a][i] + coeffs[b][i]) % p;
      add[a * m + b] = encode(sum);

      std::fill(prod.begin(), prod.end(), 0);
      for (std::size_t i = 0; i < deg; ++i)
        for (std::size_t j = 0; j < deg; ++j)
          prod[i + j] = (prod[i + j] + coeffs[a][i] * coeffs[b][j]) % p;
      // x^deg = -(f_0 + ... + f_{deg-1} x^{deg-1}); reduce from the top.
      for (std::size_t k = 2 * deg - 1; k-- > deg;) {
        const auto lead = prod[k];
        if (lead == 0) continue;
        prod[k] = 0;
        for (std::size_t i = 0; i < deg; ++i)
          prod[k - deg + i] = (prod[k - deg + i] + (p - spec.poly[i]) * lead) % p;
      }
      mul[a * m + b] = encode(std::vector<std::uint64_t>(prod.begin(), prod.begin() + deg));
    }

  std::vector<std::string> names(m);
  for (std::size_t x = 0; x < m; ++x) names[x] = poly_to_string(coeffs[x]);
  return std::make_shared<const Ring>(canonical_name(spec), spec, m, std::move(add),
                                      std::move(mul), std::move(names));
}

RingPtr build_table(const RingSpec& spec, std::size_t cap) {
  const std::size_t m = spec.add_table.size();
  if (m == 0) throw Error(ErrorKind::InvalidSpec, "empty table");
  if (m > cap)
    throw Error(ErrorKind::CapExceeded,
                "table ring of order " + std::to_string(m) + " exceeds " + std::to_string(cap));
  if (spec.mul_table.size() != m)
    throw Error(ErrorKind::InvalidSpec, "addition and multiplication tables differ in size");
  std::vector<Elem> add(m * m), mul(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    if (spec.add_table[a].size() != m || spec.mul_table[a].size() != m)
      throw Error(ErrorKind::InvalidSpec, "table row " + std::to_string(a) + " is not of length " +
                                              std::to_string(m));
    for (std::size_t b = 0; b < m; ++b) {
      const auto s = spec.add_table[a][b], t = spec.mul_table[a][b];
      if (s >= m || t >= m)
        throw Error(ErrorKind::InvalidSpec, "table entry out of range, witness (" +
                                                std::to_string(a) + ", " + std::to_string(b) +
                                                ", 0)");
      add[a * m + b] = static_cast<Elem>(s);
      mul[a * m + b] = static_cast<Elem>(t);
    }
  }
  auto violation = check_axioms(
      m, [&](Elem a, Elem b) { return add[a * m + b]; },
      [&](Elem a, Elem b) { return mul[a * m + b]; }, 64);
  if (violation) throw Error(ErrorKind::InvalidSpec, violation->describe());

  std::vector<std::string> names(m);
  for (std::size_t x = 0; x < m; ++x) names[x] = std::to_string(x);
  return std::make_shared<const Ring>(canonical_name(spec), spec, m, std::move(add),
                                      std::move(mul), std::move(names));
}

}  // namespace

Ring::Ring(std::uint64_t modulus)
    : name_("Z" + std::to_string(modulus)),
      spec_(RingSpec::zn(modulus)),
      order_(static_cast<std::size_t>(modulus)),
      modulus_(modulus),
      one_(modulus > 1 ? 1 : 0) {
  compute_units();
}

Ring::Ring(std::string name, RingSpec spec, std::size_t order, std::vector<Elem> add,
           std::vector<Elem> mul, std::vector<std::string> element_names)
    : name_(std::move(name)),
      spec_(std::move(spec)),
      order_(order),
      add_(std::move(add)),
      mul_(std::move(mul)),
      names_(std::move(element_names)) {
  neg_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      if (add_[a * order_ + b] == 0) {
        neg_[a] = static_cast<Elem>(b);
        break;
      }
  bool found = false;
  for (std::size_t e = 0; e < order_ && !found; ++e) {
    found = true;
    for (std::size_t a = 0; a < order_ && found; ++a) found = mul_[e * order_ + a] == a;
    if (found) one_ = static_cast<Elem>(e);
  }
  if (!found) throw Error(ErrorKind::InvalidSpec, "no multiplicative identity");
  compute_units();
}

void Ring::compute_units() {
  inverse_.assign(order_, kNoInverse);
  units_ = ElemSet(order_);
  if (modulus_ != 0) {
    for (std::uint64_t a = 1; a < modulus_; ++a) {
      // Extended Euclid on (a, n).
      std::int64_t r0 = static_cast<std::int64_t>(modulus_), r1 = static_cast<std::int64_t>(a);
      std::int64_t t0 = 0, t1 = 1;
      while (r1 != 0) {
        const auto q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
      }
      if (r0 != 1) continue;
      const auto n = static_cast<std::int64_t>(modulus_);
      inverse_[a] = static_cast<Elem>(((t0 % n) + n) % n);
      units_.insert(static_cast<Elem>(a));
    }
    return;
  }
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      if (mul_[a * order_ + b] == one_) {
        inverse_[a] = static_cast<Elem>(b);
        units_.insert(static_cast<Elem>(a));
        break;
      }
}

Elem Ring::neg(Elem a) const {
  if (modulus_ != 0) return a == 0 ? 0 : static_cast<Elem>(modulus_ - a);
  return neg_[a];
}

Elem Ring::pow(Elem a, std::uint64_t k) const {
  Elem result = one_;
  Elem base = a;
  while (k != 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t Ring::additive_order(Elem a) const {
  if (modulus_ != 0) return static_cast<std::size_t>(modulus_ / std::gcd<std::uint64_t>(a, modulus_));
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = add(x, a)) ++k;
  return k;
}

std::string Ring::element_name(Elem a) const {
  if (modulus_ != 0) return std::to_string(a);
  return names_[a];
}

RingSpec Ring::table_spec() const {
  std::vector<std::vector<std::uint64_t>> add(order_, std::vector<std::uint64_t>(order_));
  auto mul = add;
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b) {
      add[a][b] = this->add(a, b);
      mul[a][b] = this->mul(a, b);
    }
  return RingSpec::table(std::move(add), std::move(mul));
}

bool Ring::same_tables(const Ring& other) const {
  if (order_ != other.order_) return false;
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b)
      if (add(a, b) != other.add(a, b) || mul(a, b) != other.mul(a, b)) return false;
  return true;
}

RingPtr build_ring(const RingSpec& spec, std::size_t table_cap) {
  switch (spec.kind) {
    case RingSpec::Kind::Zn:
      if (spec.modulus < 2) throw Error(ErrorKind::InvalidSpec, "zn requires n >= 2");
      if (spec.modulus > (std::uint64_t{1} << 31))
        throw Error(ErrorKind::CapExceeded, "zn modulus too large");
      return std::make_shared<const Ring>(spec.modulus);
    case RingSpec::Kind::Product: return build_product(spec, table_cap);
    case RingSpec::Kind::PolyQuotient: return build_poly_quotient(spec, table_cap);
    case RingSpec::Kind::Table: return build_table(spec, table_cap);
  }
  throw Error(ErrorKind::InvalidSpec, "unknown ring kind");
}

std::optional<AxiomViolation> check_ring_axioms(const Ring& ring, std::size_t exhaustive_up_to) {
  return check_axioms(
      ring.order(), [&](Elem a, Elem b) { return ring.add(a, b); },
      [&](Elem a, Elem b) { return ring.mul(a, b); }, exhaustive_up_to);
}

bool is_field(const Ring& ring) {
  return ring.order() >= 2 && ring.units().count() == ring.order() - 1;
}

bool is_domain(const Ring& ring) {
  const auto m = static_cast<Elem>(ring.order());
  if (m < 2) return false;
  for (Elem a = 1; a < m; ++a)
    for (Elem b = 1; b < m; ++b)
      if (ring.mul(a, b) == 0) return false;
  return true;
}

std::string canonical_name(const RingSpec& spec) {
  switch (spec.kind) {
    case RingSpec::Kind::Zn: return "Z" + std::to_string(spec.modulus);
    case RingSpec::Kind::Product: {
      std::string out;
      for (std::size_t k = 0; k < spec.factors.size(); ++k) {
        if (k) out += "x";
        const auto& f = spec.factors[k];
        const auto inner = canonical_name(f);
        out += f.kind == RingSpec::Kind::Product ? "(" + inner + ")" : inner;
      }
      return out;
    }
    case RingSpec::Kind::PolyQuotient:
      return "F" + std::to_string(spec.prime) + "[x]/(" + poly_to_string(spec.poly) + ")";
    case RingSpec::Kind::Table: return "T" + std::to_string(spec.add_table.size());
  }
  return "?";
}

}  // namespace omegalab
