#include "mahler/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "mahler/families.hpp"

namespace mahler {

namespace {

constexpr unsigned long kMaxExponent = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RationalPoly sum() {
    std::map<std::size_t, mpq_class> acc;
    skip_ws();
    if (done()) fail("empty polynomial");
    bool first = true;
    while (!done()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [coef, deg] = term();
      acc[deg] += sign * coef;
      first = false;
      skip_ws();
    }
    std::size_t top = acc.empty() ? 0 : acc.rbegin()->first;
    std::vector<mpq_class> c(top + 1);
    for (auto& [k, v] : acc) c[k] = v;
    return RationalPoly(std::move(c));
  }

  RationalPoly coeff_list() {
    std::vector<mpq_class> c;
    for (;;) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      }
      mpq_class v = number();
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        v /= denominator();
      }
      c.push_back(sign * v);
      skip_ws();
      if (done()) break;
      if (peek() != ',') fail("expected ','");
      ++pos_;
    }
    return RationalPoly(std::move(c));
  }

 private:
  std::pair<mpq_class, std::size_t> term() {
    mpq_class coef(1);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = number();
      have_coef = true;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        coef /= denominator();
        skip_ws();
      }
    }
    std::size_t deg = 0;
    if (peek() == '*') {
      if (!have_coef) fail("'*' without a coefficient");
      ++pos_;
      skip_ws();
      if (peek() != 'x') fail("expected 'x' after '*'");
    }
    if (peek() == 'x') {
      ++pos_;
      deg = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        mpz_class e = integer();
        if (e > kMaxExponent) fail_at("exponent too large", at);
        deg = e.get_ui();
        skip_ws();
      }
    } else if (!have_coef) {
      fail("expected a coefficient or 'x'");
    }
    while (peek() == '/') {
      ++pos_;
      skip_ws();
      coef /= denominator();
      skip_ws();
    }
    return {coef, deg};
  }

  mpz_class denominator() {
    const std::size_t at = pos_;
    mpz_class d = integer();
    if (d == 0) fail_at("zero denominator", at);
    return d;
  }

  mpq_class number() { return mpq_class(integer()); }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a digit");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what, at);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

RationalPoly parse_named(std::string_view text) {
  // text starts after '@'
  if (text == "lehmer") return lehmer_polynomial();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected '@name:p' or '@lehmer'", 1);
  const std::string_view name = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);
  if (arg.empty() || arg.size() > 9) throw ParseError("bad family parameter", colon + 2);
  for (std::size_t i = 0; i < arg.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(arg[i]))) throw ParseError("bad family parameter", colon + 2 + i);
  Family fam;
  try {
    fam = family_from_name(name);
  } catch (const DomainError&) {
    throw ParseError("unknown family '" + std::string(name) + "'", 1);
  }
  return make_family(fam, std::stol(std::string(arg)));
}

std::string coeff_text(const mpq_class& c) { return c.get_str(); }

}  // namespace

RationalPoly parse_poly(std::string_view text) {
  std::size_t lead = 0;
  while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
  std::size_t end = text.size();
  while (end > lead && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string_view t = text.substr(lead, end - lead);
  if (!t.empty() && t.front() == '@') return parse_named(t.substr(1));
  constexpr std::string_view kCoeffs = "coeffs:";
  if (t.substr(0, kCoeffs.size()) == kCoeffs) return Parser(t.substr(kCoeffs.size())).coeff_list();
  return Parser(t).sum();
}

std::string to_string(const RationalPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const mpq_class& c = p.coeffs()[k];
    if (c == 0) continue;
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << coeff_text(a);
      continue;
    }
    if (a != 1) os << coeff_text(a) << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::string to_string(const IntPoly& p) { return to_string(to_rational(p)); }

std::string coeff_list(const RationalPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) s += ',';
    s += p.coeffs()[k].get_str();
  }
  return s;
}

}  // namespace mahler
