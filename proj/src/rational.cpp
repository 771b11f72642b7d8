#include "fos/rational.hpp"

#include "fos/errors.hpp"

#include <cctype>

namespace fos {

std::string to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

std::string to_decimal(const Rat& r, int digits) {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rat scaled = abs(r) * scale;
  // round half up on the magnitude
  mpz_class q = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
  mpz_class whole = q / scale;
  mpz_class frac = q % scale;
  std::string out = (sgn(r) < 0 && q != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += ".";
    out += std::string(digits - f.size(), '0') + f;
  }
  return out;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw InputError("not an exact rational: '" + std::string(text) + "'");
  }
  mpz_class d(strip_plus(den));
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rat r(mpz_class(strip_plus(num)), d);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool is_integral(const Rat& r) { return r.get_den() == 1; }

Rat sum(std::span<const Rat> values) {
  Rat s = 0;
  for (const auto& v : values) s += v;
  return s;
}

mpz_class common_denominator(std::span<const Rat> values) {
  mpz_class l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

}  // namespace fos
