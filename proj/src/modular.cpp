#include "mahler/modular.hpp"

#include <stdexcept>

#include "mahler/errors.hpp"

namespace mahler::modp {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 q) { return static_cast<u64>(static_cast<u128>(a) * b % q); }

void trim(PolyMod& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long deg(const PolyMod& a) { return static_cast<long>(a.size()) - 1; }

}  // namespace

PolyMod reduce(const IntPoly& p, u64 q) {
  PolyMod out;
  out.reserve(p.size());
  const mpz_class qq(static_cast<unsigned long>(q));
  for (const auto& c : p.coeffs()) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), qq.get_mpz_t());
    out.push_back(r.get_ui());
  }
  trim(out);
  return out;
}

u64 inverse(u64 a, u64 q) {
  // q is prime: a^(q-2)
  u64 result = 1, base = a % q, e = q - 2;
  if (base == 0) throw DomainError("zero has no inverse mod q");
  while (e) {
    if (e & 1) result = mulmod(result, base, q);
    base = mulmod(base, base, q);
    e >>= 1;
  }
  return result;
}

PolyMod sub(const PolyMod& a, const PolyMod& b, u64 q) {
  PolyMod out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + q - b[i]) % q;
  trim(out);
  return out;
}

PolyMod mul(const PolyMod& a, const PolyMod& b, u64 q) {
  if (a.empty() || b.empty()) return {};
  PolyMod out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], q)) % q;
  trim(out);
  return out;
}

namespace {

std::pair<PolyMod, PolyMod> divide(PolyMod a, const PolyMod& b, u64 q) {
  if (b.empty()) throw DomainError("division by zero polynomial mod q");
  if (a.size() < b.size()) return {{}, a};
  const u64 inv = inverse(b.back(), q);
  PolyMod quot(a.size() - b.size() + 1, 0);
  for (long i = deg(a) - deg(b); i >= 0; --i) {
    const u64 c = mulmod(a[static_cast<std::size_t>(i) + b.size() - 1], inv, q);
    quot[static_cast<std::size_t>(i)] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      u64& t = a[static_cast<std::size_t>(i) + j];
      t = (t + q - mulmod(c, b[j], q)) % q;
    }
  }
  trim(a);
  trim(quot);
  return {quot, a};
}

}  // namespace

PolyMod rem(const PolyMod& a, const PolyMod& b, u64 q) { return divide(a, b, q).second; }
PolyMod quo(const PolyMod& a, const PolyMod& b, u64 q) { return divide(a, b, q).first; }

PolyMod derivative(const PolyMod& a, u64 q) {
  if (a.size() <= 1) return {};
  PolyMod out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = mulmod(a[i], i % q, q);
  trim(out);
  return out;
}

PolyMod make_monic(const PolyMod& a, u64 q) {
  if (a.empty()) return a;
  const u64 inv = inverse(a.back(), q);
  PolyMod out(a);
  for (auto& c : out) c = mulmod(c, inv, q);
  return out;
}

PolyMod gcd(PolyMod a, PolyMod b, u64 q) {
  while (!b.empty()) {
    PolyMod r = rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, q);
}

PolyMod powmod(const PolyMod& base, u64 e, const PolyMod& m, u64 q) {
  PolyMod result{1};
  result = rem(result, m, q);
  PolyMod b = rem(base, m, q);
  while (e) {
    if (e & 1) result = rem(mul(result, b, q), m, q);
    b = rem(mul(b, b, q), m, q);
    e >>= 1;
  }
  return result;
}

bool is_squarefree(const PolyMod& a, u64 q) {
  PolyMod d = derivative(a, q);
  if (d.empty()) return a.size() <= 1;
  return gcd(a, d, q).size() == 1;
}

std::vector<std::pair<unsigned, unsigned>> distinct_degree_factorization(const PolyMod& a, u64 q) {
  if (a.size() < 2) throw DomainError("distinct-degree factorization needs positive degree");
  std::vector<std::pair<unsigned, unsigned>> out;
  PolyMod f = make_monic(a, q);
  const PolyMod x{0, 1};
  PolyMod h = rem(x, f, q);
  for (unsigned k = 1; 2 * static_cast<long>(k) <= deg(f); ++k) {
    h = powmod(h, q, f, q);
    PolyMod g = gcd(f, sub(h, x, q), q);
    if (g.size() > 1) {
      out.emplace_back(k, static_cast<unsigned>(deg(g)) / k);
      f = quo(f, g, q);
      h = rem(h, f, q);
    }
  }
  if (deg(f) > 0) out.emplace_back(static_cast<unsigned>(deg(f)), 1U);
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace mahler::modp
