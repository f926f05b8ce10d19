#include "omegalab/integers.hpp"

#include <algorithm>
#include <numeric>

#include "omegalab/errors.hpp"
#include "omegalab/ideal.hpp"

namespace omegalab {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;
// Miller-Rabin with the first twelve prime bases is exact below this bound.
const ZInt kDeterministicBound = [] {
  ZInt v = 0;
  for (char c : std::string_view("3317044064679887385961981")) v = v * 10 + static_cast<unsigned>(c - '0');
  return v;
}();
// Step budgets per attempt; moduli above 64 bits pay for a slow mulmod.
constexpr std::uint64_t kRhoSteps = 1u << 20;
constexpr std::uint64_t kRhoStepsWide = 1u << 15;
constexpr int kRhoAttempts = 24;

ZInt mulmod(ZInt a, ZInt b, ZInt m) {
  if (m <= ~std::uint64_t{0}) return (a % m) * (b % m) % m;
  a %= m;
  b %= m;
  ZInt result = 0;
  while (b != 0) {
    if (b & 1) result = result >= m - a ? result - (m - a) : result + a;
    a = a >= m - a ? a - (m - a) : a + a;
    b >>= 1;
  }
  return result;
}

ZInt powmod(ZInt base, ZInt exp, ZInt m) {
  ZInt result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

ZInt gcd(ZInt a, ZInt b) {
  while (b != 0) {
    const ZInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

ZInt absdiff(ZInt a, ZInt b) { return a > b ? a - b : b - a; }

// Brent's variant of Pollard rho; returns a proper divisor or 0.
ZInt rho_split(ZInt n, ZInt c) {
  if (n % 2 == 0) return 2;
  auto f = [&](ZInt x) {
    const ZInt y = mulmod(x, x, n) + c;
    return y >= n ? y - n : y;
  };
  ZInt y = 2, x = 2, ys = 2, q = 1, g = 1;
  std::uint64_t r = 1, steps = 0;
  constexpr std::uint64_t kBatch = 128;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
        y = f(y);
        q = mulmod(q, absdiff(x, y), n);
      }
      g = gcd(q, n);
      k += kBatch;
      steps += kBatch;
      if (steps > (n > ~std::uint64_t{0} ? kRhoStepsWide : kRhoSteps)) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(absdiff(x, ys), n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

void factor_into(ZInt n, std::vector<ZInt>& out) {
  if (n == 1) return;
  if (n < kDeterministicBound && is_probable_prime_deterministic(n)) {
    out.push_back(n);
    return;
  }
  for (int attempt = 0; attempt < kRhoAttempts; ++attempt) {
    const ZInt d = rho_split(n, static_cast<ZInt>(attempt) + 1);
    if (d != 0) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
  throw Error(ErrorKind::FactorizationTimeout, "could not factor " + to_string(n) +
                                                   " within the search budget");
}

}  // namespace

std::string to_string(ZInt value) {
  if (value == 0) return "0";
  std::string s;
  while (value != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

ZInt parse_zint(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::Usage, "empty integer");
  ZInt v = 0;
  const ZInt max = ~ZInt{0};
  for (char c : text) {
    if (c < '0' || c > '9') throw Error(ErrorKind::Usage, "not a nonnegative integer: " + std::string(text));
    const auto d = static_cast<unsigned>(c - '0');
    if (v > (max - d) / 10) throw Error(ErrorKind::Usage, "integer too large: " + std::string(text));
    v = v * 10 + d;
  }
  return v;
}

bool is_probable_prime_deterministic(ZInt n) {
  if (n < 2) return false;
  static constexpr unsigned kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  ZInt d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : kBases) {
    ZInt x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mulmod(x, x, n);
      composite = x != n - 1;
    }
    if (composite) return false;
  }
  return true;
}

std::vector<ZInt> factorize(ZInt n) {
  if (n < 2) throw Error(ErrorKind::InvalidSpec, "factorize needs n >= 2");
  std::vector<ZInt> out;
  for (std::uint64_t d = 2; d <= kTrialLimit && static_cast<ZInt>(d) * d <= n; d += (d == 2 ? 1 : 2))
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  if (n != 1) {
    if (n <= static_cast<ZInt>(kTrialLimit) * kTrialLimit) {
      // No factor up to 10^6 and below 10^12: n is prime.
      out.push_back(n);
    } else {
      factor_into(n, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

OmegaValue z_omega(ZInt m) {
  if (m == 1) throw Error(ErrorKind::NotProper, "<1> is the whole ring Z");
  if (m == 0) return OmegaValue::finite(1);
  return OmegaValue::finite(factorize(m).size());
}

std::set<std::uint64_t> z_spectrum_prefix(unsigned k) {
  if (k < 1 || k > 64) throw Error(ErrorKind::InvalidSpec, "prefix length must be in [1, 64]");
  std::set<std::uint64_t> out;
  for (unsigned j = 1; j <= k; ++j) out.insert(z_omega(ZInt{1} << j).value());
  std::set<std::uint64_t> expected;
  for (unsigned j = 1; j <= k; ++j) expected.insert(j);
  if (out != expected)
    throw Error(ErrorKind::InternalBoundViolated, "omega of powers of 2 is not 1..k");
  return out;
}

ZConsistency z_consistency(std::uint64_t m, std::uint64_t n, const Limits& limits) {
  if (m == 1) throw Error(ErrorKind::NotProper, "<1> is the whole ring Z");
  if (m == 0 || n % m != 0)
    throw Error(ErrorKind::KernelNotContained,
                std::to_string(m) + " does not divide " + std::to_string(n));
  ZConsistency out;
  out.m = m;
  out.n = n;
  out.integer_side = z_omega(m);
  auto ring = build_ring(RingSpec::zn(n), limits.ideal_cap);
  out.residue_side = omega(generate(ring, {static_cast<Elem>(m % n)}), limits).value;
  return out;
}

}  // namespace omegalab
