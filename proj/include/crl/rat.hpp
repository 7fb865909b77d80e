#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace crl {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Arithmetic returns Rat rather
/// than gmpxx expression templates, so generic code can use `auto` freely.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : v_(v) {}
  Rat(long v) : v_(v) {}
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q" (q != 0). Throws ParseError.
  static Rat parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rat& r) { return r.is_zero(); }

/// r^e for e >= 0; negative exponents invert (throws DivisionByZero on 0).
Rat pow(const Rat& r, int e);

/// Residue of r modulo the prime p, or nullopt-like failure signalled by
/// returning false when p divides the denominator.
bool reduce_mod(const Rat& r, std::uint64_t p, std::uint64_t& out);

}  // namespace crl

template <>
struct std::hash<crl::Rat> {
  std::size_t operator()(const crl::Rat& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
