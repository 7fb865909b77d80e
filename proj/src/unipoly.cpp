#include "crl/unipoly.hpp"

#include <cctype>
#include <sstream>

#include "crl/errors.hpp"

namespace crl {

UniPoly::UniPoly(const Rat& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rat& c, int degree) {
  UniPoly p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, Rat(0));
  p.c_.back() = c;
  return p;
}

UniPoly UniPoly::linear_root(const Rat& a) { return UniPoly(std::vector<Rat>{-a, Rat(1)}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[static_cast<std::size_t>(k)];
}

Rat UniPoly::operator()(const Rat& at) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].value() * b.c_[j].value();
  }
  std::vector<Rat> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(std::move(v));
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rat> r = a.coeffs();
  const int db = b.degree();
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1), Rat(0));
  const Rat inv_lead = Rat(1) / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rat c = r[static_cast<std::size_t>(k + db)] * inv_lead;
    q[static_cast<std::size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw NonExactDivision("polynomial division leaves a remainder");
  return q;
}

namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Scales a rational polynomial to a primitive integer polynomial.
ZPoly primitive_integer(const UniPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den_mpz_t());
  ZPoly z;
  z.reserve(p.coeffs().size());
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    z.push_back(std::move(v));
  }
  if (g != 0 && g != 1)
    for (auto& v : z) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return z;
}

void make_primitive(ZPoly& p) {
  mpz_class g = 0;
  for (const auto& v : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (deg a >= deg b), both nonzero.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const mpz_class la = a.back();
    for (auto& v : a) v *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    ztrim(a);
  }
  return a;
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) return UniPoly();
  if (a.is_zero() || b.is_zero()) {
    const UniPoly& p = a.is_zero() ? b : a;
    UniPoly m = p;
    m *= Rat(1) / p.leading();
    return m;
  }
  if (a.is_constant() || b.is_constant()) return UniPoly(Rat(1));
  // Primitive PRS over Z keeps coefficient growth in check.
  ZPoly x = primitive_integer(a), y = primitive_integer(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = pseudo_rem(std::move(x), y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rat> out;
  out.reserve(x.size());
  for (const auto& v : x) out.emplace_back(v, x.back());
  return UniPoly(std::move(out));
}

UniPoly pow(const UniPoly& p, int e) {
  UniPoly result(Rat(1)), base = p;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

UniPoly shift(const UniPoly& p, const Rat& s) {
  // Horner in the shifted variable.
  UniPoly acc;
  const UniPoly lin(std::vector<Rat>{s, Rat(1)});
  for (int k = p.degree(); k >= 0; --k) acc = acc * lin + UniPoly(p.coeff(k));
  return acc;
}

std::string UniPoly::str(std::string_view symbol) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rat mag = neg ? -c : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.str();
      continue;
    }
    if (!mag.is_one()) os << mag.str() << '*';
    os << symbol;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::string_view symbol) : s_(text), sym_(symbol) {}

  UniPoly parse() {
    skip_ws();
    if (s_.substr(pos_) == "0") return UniPoly();
    UniPoly acc;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) {
        if (first) fail("empty polynomial");
        break;
      }
      bool neg = false;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        neg = s_[pos_] == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc += term(neg);
      first = false;
    }
    return acc;
  }

 private:
  UniPoly term(bool neg) {
    Rat c(1);
    bool have_coeff = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      c = rational();
      have_coeff = true;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
      } else {
        return UniPoly(neg ? -c : c);
      }
    }
    if (s_.substr(pos_, sym_.size()) != sym_) fail(have_coeff ? "expected symbol after '*'" : "expected term");
    pos_ += sym_.size();
    int e = 1;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      e = static_cast<int>(integer().get_si());
    }
    return UniPoly::monomial(neg ? -c : c, e);
  }

  Rat rational() {
    mpz_class n = integer();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      mpz_class d = integer();
      if (d == 0) fail("zero denominator");
      return Rat(n, d);
    }
    return Rat(n, 1);
  }

  mpz_class integer() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(b, pos_ - b)));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial '" + std::string(s_) + "': " + why + " at offset " + std::to_string(pos_));
  }

  std::string_view s_, sym_;
  std::size_t pos_ = 0;
};

}  // namespace

UniPoly UniPoly::parse(std::string_view text, std::string_view symbol) {
  return PolyParser(text, symbol).parse();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str("T"); }

}  // namespace crl
