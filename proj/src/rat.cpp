#include "crl/rat.hpp"

#include <cctype>

#include "crl/errors.hpp"

namespace crl {

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::string s = trim(text);
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  num = trim(num);
  den = trim(den);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw ParseError("not a rational: '" + std::string(text) + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rat(n, d);
}

Rat pow(const Rat& r, int e) {
  if (e < 0) return Rat(1) / pow(r, -e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), r.value().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), r.value().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

bool reduce_mod(const Rat& r, std::uint64_t p, std::uint64_t& out) {
  mpz_class P(std::to_string(p));
  mpz_class n = r.num() % P;
  if (n < 0) n += P;
  mpz_class d = r.den() % P;
  if (d == 0) return false;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), P.get_mpz_t());
  mpz_class v = (n * inv) % P;
  out = std::stoull(v.get_str());
  return true;
}

}  // namespace crl
