#include "mahler/families.hpp"

#include <string>

namespace mahler {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::f: return "f";
    case Family::fstar: return "fstar";
    case Family::g: return "g";
    case Family::Q: return "Q";
  }
  return "?";
}

Family family_from_name(std::string_view name) {
  if (name == "f") return Family::f;
  if (name == "fstar") return Family::fstar;
  if (name == "g") return Family::g;
  if (name == "Q") return Family::Q;
  throw DomainError("unknown family '" + std::string(name) + "'");
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FamilyParams FamilyParams::make(long p) {
  if (p < 3 || p % 2 == 0)
    throw DomainError("family parameter p must be odd and >= 3, got " + std::to_string(p));
  return FamilyParams{p, (p - 1) / 2, mahler::is_prime(p)};
}

RationalPoly make_family(Family family, long p) {
  const FamilyParams fp = FamilyParams::make(p);
  const auto up = static_cast<std::size_t>(p);
  const mpq_class inv_p(1, static_cast<unsigned long>(p));
  switch (family) {
    case Family::f: {
      std::vector<mpq_class> c(up + 1);
      c[up] = inv_p;
      c[1] = -inv_p;
      c[static_cast<std::size_t>(fp.N + 1)] += 1;
      c[0] = 1;
      return RationalPoly(std::move(c));
    }
    case Family::fstar: {
      std::vector<mpq_class> c(up + 1);
      c[up] = 1;
      c[static_cast<std::size_t>(fp.N + 1)] += p;
      c[1] = -1;
      c[0] = p;
      return RationalPoly(std::move(c));
    }
    case Family::g: {
      std::vector<mpq_class> c(up + 1);
      c[up] = inv_p;
      c[1] = -inv_p;
      c[0] = 1;
      return RationalPoly(std::move(c));
    }
    case Family::Q:
      return RationalPoly({-inv_p, mpq_class(1), inv_p});
  }
  throw DomainError("unknown family");
}

RationalPoly lehmer_polynomial() {
  return RationalPoly({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
}

QuadraticRoots qp_roots(long p, Precision prec) {
  FamilyParams::make(p);
  const Interval pp(p, prec);
  const Interval disc = sqrt(pp * pp + Interval(4L, prec));
  const Interval two(2L, prec);
  return QuadraticRoots{(disc - pp) / two, (-pp - disc) / two, true};
}

Interval m_qp_closed(long p, Precision prec) {
  FamilyParams::make(p);
  const mpq_class r(4, static_cast<unsigned long>(p * p));
  const Interval one(1L, prec);
  return log((one + sqrt(one + Interval(r, prec))) / Interval(2L, prec));
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpq_class epsilon_p(long p) {
  const FamilyParams fp = FamilyParams::make(p);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(fp.N + 1));
  mpq_class e(binomial(static_cast<unsigned long>(p - 1), static_cast<unsigned long>(fp.N)), den);
  e.canonicalize();
  return e;
}

}  // namespace mahler
