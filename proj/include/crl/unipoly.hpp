#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crl/rat.hpp"

namespace crl {

/// Dense univariate polynomial over Q. coeffs()[k] is the coefficient of
/// symbol^k; the highest stored coefficient is nonzero (zero polynomial is
/// the empty vector).
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(int c) : UniPoly(Rat(c)) {}
  UniPoly(const Rat& c);
  explicit UniPoly(std::vector<Rat> coeffs);

  static UniPoly monomial(const Rat& c, int degree);
  /// The symbol itself.
  static UniPoly x() { return monomial(Rat(1), 1); }
  /// symbol - a
  static UniPoly linear_root(const Rat& a);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(int k) const;
  const Rat& leading() const { return c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat operator()(const Rat& at) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  UniPoly& operator*=(const Rat& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Canonical text form, e.g. "3*T^2 - 1/2*T + 5".
  std::string str(std::string_view symbol) const;
  /// Inverse of str(); throws ParseError.
  static UniPoly parse(std::string_view text, std::string_view symbol);

 private:
  void trim();
  std::vector<Rat> c_;
};

inline bool is_zero(const UniPoly& p) { return p.is_zero(); }

/// Euclidean division over Q: a = q*b + r, deg r < deg b. Throws
/// DivisionByZero when b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// a / b, throwing NonExactDivision when b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& p, int e);
/// p(symbol + s)
UniPoly shift(const UniPoly& p, const Rat& s);

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

}  // namespace crl
