#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "crl/unipoly.hpp"

namespace crl {

/// Reduced fraction num/den of univariate polynomials over Q.
///
/// Canonical form: gcd(num, den) = 1 and den is monic, so two values are
/// equal as functions iff their fields are equal. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(Rat(1)) {}
  RatFunc(int c) : RatFunc(Rat(c)) {}
  RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
  RatFunc(UniPoly num) : num_(std::move(num)), den_(Rat(1)) {}
  /// Throws DivisionByZero when den = 0.
  RatFunc(UniPoly num, UniPoly den);

  static RatFunc x() { return RatFunc(UniPoly::x()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant function; only meaningful when is_constant().
  Rat constant_value() const { return num_.coeff(0); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Throws DivisionByZero when b = 0.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  /// "num" when den = 1, otherwise "(num) / (den)".
  std::string str(std::string_view symbol) const;
  static RatFunc parse(std::string_view text, std::string_view symbol);

 private:
  struct Canonical {};
  RatFunc(UniPoly num, UniPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  UniPoly num_, den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

/// Order of the factor (symbol - a) in f: positive for zeros, negative for
/// poles. Throws ZeroFunction when f = 0.
int multiplicity_at(const RatFunc& f, const Rat& a);

/// lim_{symbol -> a} f after cancelling (symbol - a) factors. Throws
/// PoleAtPoint when f has a pole at a.
Rat limit_at(const RatFunc& f, const Rat& a);

/// Multiplicity of (symbol - a) in a nonzero polynomial.
int root_multiplicity(const UniPoly& p, const Rat& a);

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace crl
