#include "crl/ratfunc.hpp"

#include <cctype>

#include "crl/errors.hpp"

namespace crl {

namespace {

void make_den_monic(UniPoly& num, UniPoly& den) {
  if (den.leading().is_one()) return;
  const Rat s = Rat(1) / den.leading();
  num *= s;
  den *= s;
}

}  // namespace

RatFunc::RatFunc(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = UniPoly();
    den_ = UniPoly(Rat(1));
    return;
  }
  if (!den.is_constant()) {
    UniPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  make_den_monic(num, den);
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  if (a.is_polynomial() && b.is_polynomial())
    return RatFunc(a.num_ + b.num_, UniPoly(Rat(1)), RatFunc::Canonical{});
  // a/b + c/d with g = gcd(b, d): (a*d' + c*b') / (b'*d), d' = d/g, b' = b/g.
  UniPoly g = gcd(a.den_, b.den_);
  UniPoly bp = exact_div(a.den_, g), dp = exact_div(b.den_, g);
  UniPoly num = a.num_ * dp + b.num_ * bp;
  UniPoly den = bp * b.den_;
  if (num.is_zero()) return RatFunc();
  if (!g.is_constant()) {
    UniPoly h = gcd(num, g);
    if (!h.is_constant()) {
      num = exact_div(num, h);
      den = exact_div(den, h);
    }
  }
  make_den_monic(num, den);
  return RatFunc(std::move(num), std::move(den), RatFunc::Canonical{});
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.is_polynomial() && b.is_polynomial())
    return RatFunc(a.num_ * b.num_, UniPoly(Rat(1)), RatFunc::Canonical{});
  // Cross-cancel before multiplying: both inputs are already reduced.
  UniPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_constant()) {
    UniPoly g = gcd(an, bd);
    if (!g.is_constant()) {
      an = exact_div(an, g);
      bd = exact_div(bd, g);
    }
  }
  if (!ad.is_constant()) {
    UniPoly g = gcd(bn, ad);
    if (!g.is_constant()) {
      bn = exact_div(bn, g);
      ad = exact_div(ad, g);
    }
  }
  UniPoly num = an * bn, den = ad * bd;
  make_den_monic(num, den);
  return RatFunc(std::move(num), std::move(den), RatFunc::Canonical{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
  UniPoly bn = b.num_, bd = b.den_;
  make_den_monic(bd, bn);
  return a * RatFunc(std::move(bd), std::move(bn), RatFunc::Canonical{});
}

int root_multiplicity(const UniPoly& p, const Rat& a) {
  if (p.is_zero()) throw ZeroFunction("multiplicity of the zero polynomial");
  int m = 0;
  UniPoly cur = p;
  const UniPoly lin = UniPoly::linear_root(a);
  while (cur.degree() >= 1 && cur(a).is_zero()) {
    cur = exact_div(cur, lin);
    ++m;
  }
  return m;
}

int multiplicity_at(const RatFunc& f, const Rat& a) {
  if (f.is_zero()) throw ZeroFunction("multiplicity of the zero function");
  return root_multiplicity(f.num(), a) - root_multiplicity(f.den(), a);
}

Rat limit_at(const RatFunc& f, const Rat& a) {
  if (f.is_zero()) return Rat(0);
  const Rat d = f.den()(a);
  if (!d.is_zero()) return f.num()(a) / d;
  // den and num are coprime, so a root of den is a genuine pole.
  throw PoleAtPoint("pole of order " + std::to_string(root_multiplicity(f.den(), a)) + " at " + a.str());
}

std::string RatFunc::str(std::string_view symbol) const {
  if (den_.is_constant()) return num_.str(symbol);
  return "(" + num_.str(symbol) + ") / (" + den_.str(symbol) + ")";
}

RatFunc RatFunc::parse(std::string_view text, std::string_view symbol) {
  std::size_t b = 0;
  while (b < text.size() && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  if (b < text.size() && text[b] == '(') {
    const auto close = text.find(')', b);
    if (close == std::string_view::npos) throw ParseError("unbalanced '(' in '" + std::string(text) + "'");
    UniPoly num = UniPoly::parse(text.substr(b + 1, close - b - 1), symbol);
    auto rest = text.substr(close + 1);
    const auto slash = rest.find('/');
    const auto open = rest.find('(');
    const auto close2 = rest.rfind(')');
    if (slash == std::string_view::npos || open == std::string_view::npos || close2 == std::string_view::npos ||
        !(slash < open && open < close2))
      throw ParseError("expected '(num) / (den)' in '" + std::string(text) + "'");
    UniPoly den = UniPoly::parse(rest.substr(open + 1, close2 - open - 1), symbol);
    return RatFunc(std::move(num), std::move(den));
  }
  return RatFunc(UniPoly::parse(text, symbol));
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str("T"); }

}  // namespace crl
