#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "crl/errors.hpp"
#include "crl/rat.hpp"

namespace crl {

using Exponent = std::vector<int>;

namespace detail {
// Unqualified so that is_zero is found by ADL at instantiation time, even
// from inside classes that declare their own is_zero().
template <class K>
bool coeff_is_zero(const K& c) {
  return is_zero(c);
}
}  // namespace detail

/// Sparse polynomial in a fixed number of variables over a coefficient ring K.
///
/// K needs K(int), K(Rat), + - *, == and an ADL-visible is_zero(K).
template <class K>
class MultiPoly {
 public:
  using Terms = std::map<Exponent, K>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const K& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }
  static MultiPoly variable(int nvars, int i) {
    MultiPoly p(nvars);
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.add_term(e, K(1));
    return p;
  }
  static MultiPoly monomial(const Exponent& e, const K& c) {
    MultiPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  K coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(const Exponent& e, const K& c) {
    if (detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  /// -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int v : e) s += v;
      d = std::max(d, s);
    }
    return d;
  }

  MultiPoly operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, K(0) - c);
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, K(0) - c);
    return *this;
  }
  MultiPoly& operator*=(const K& s) {
    if (detail::coeff_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const K& s) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(std::max(a.nvars_, b.nvars_));
    Exponent e(static_cast<std::size_t>(r.nvars_), 0);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      os << (first ? "" : " + ") << '(' << it->second << ")";
      for (std::size_t k = 0; k < it->first.size(); ++k)
        if (it->first[k]) os << "*x" << k + 1 << (it->first[k] > 1 ? "^" + std::to_string(it->first[k]) : "");
      first = false;
    }
    return os.str();
  }

 private:
  int nvars_ = 0;
  Terms terms_;
};

template <class K>
bool is_zero(const MultiPoly<K>& p) {
  return p.is_zero();
}

template <class K>
K ipow(const K& base, int e) {
  K r(1);
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

/// f / (x_i - c x_j), exact. Throws NonExactDivision otherwise.
template <class K>
MultiPoly<K> divide_linear(const MultiPoly<K>& f, int i, int j, const K& c) {
  const auto ui = static_cast<std::size_t>(i);
  const auto uj = static_cast<std::size_t>(j);
  // Slices g_k by the power of x_i, with x_i removed from the exponent.
  std::map<int, MultiPoly<K>> slice;
  int top = -1;
  for (const auto& [e, coef] : f.terms()) {
    Exponent rest = e;
    const int k = rest[ui];
    rest[ui] = 0;
    auto it = slice.try_emplace(k, f.nvars()).first;
    it->second.add_term(rest, coef);
    top = std::max(top, k);
  }
  MultiPoly<K> out(f.nvars());
  MultiPoly<K> h(f.nvars());  // h_k, walking down from the top
  for (int k = top; k >= 0; --k) {
    // carry = g_k + c x_j h_k ; equals h_{k-1} for k >= 1 and must vanish at k = 0
    MultiPoly<K> carry(f.nvars());
    if (auto it = slice.find(k); it != slice.end()) carry = it->second;
    if (k < top) {
      for (const auto& [e, coef] : h.terms()) {
        Exponent s = e;
        ++s[uj];
        carry.add_term(s, coef * c);
      }
    }
    if (k == 0) {
      if (!carry.is_zero()) throw NonExactDivision("polynomial is not divisible by the linear form");
      break;
    }
    for (const auto& [e, coef] : carry.terms()) {
      Exponent s = e;
      s[ui] = k - 1;
      out.add_term(s, coef);
    }
    h = std::move(carry);
  }
  return out;
}

/// f / prod_{i<j} (x_i - x_j), exact.
template <class K>
MultiPoly<K> divide_vandermonde(MultiPoly<K> f) {
  for (int i = 0; i < f.nvars(); ++i)
    for (int j = i + 1; j < f.nvars(); ++j) f = divide_linear(f, i, j, K(1));
  return f;
}

/// Image of one source variable under an affine substitution:
/// x -> scale * y_target + shift (target < 0 means the constant shift).
template <class K>
struct AffineImage {
  int target = -1;
  K scale = K(1);
  K shift = K(0);
};

/// Substitutes every variable of f by an affine expression in a single new
/// variable; the result lives in `out_vars` variables.
template <class K>
MultiPoly<K> substitute(const MultiPoly<K>& f, const std::vector<AffineImage<K>>& images, int out_vars) {
  const std::size_t n = images.size();
  // Cached powers of each image, as polynomials in the target variable.
  std::vector<std::vector<MultiPoly<K>>> powers(n);
  auto power = [&](std::size_t i, int e) -> const MultiPoly<K>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly<K>::constant(out_vars, K(1)));
    while (static_cast<int>(cache.size()) <= e) {
      MultiPoly<K> lin(out_vars);
      const auto& im = images[i];
      if (im.target >= 0) {
        Exponent ex(static_cast<std::size_t>(out_vars), 0);
        ex[static_cast<std::size_t>(im.target)] = 1;
        lin.add_term(ex, im.scale);
      }
      lin.add_term(Exponent(static_cast<std::size_t>(out_vars), 0), im.shift);
      cache.push_back(cache.back() * lin);
    }
    return cache[static_cast<std::size_t>(e)];
  };
  MultiPoly<K> out(out_vars);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly<K> t = MultiPoly<K>::constant(out_vars, c);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) t = t * power(i, e[i]);
    out += t;
  }
  return out;
}

template <class K>
K evaluate(const MultiPoly<K>& f, const std::vector<K>& point) {
  K acc(0);
  std::vector<std::vector<K>> pw(point.size());
  for (const auto& [e, c] : f.terms()) {
    K t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      auto& cache = pw[i];
      if (cache.empty()) cache.push_back(K(1));
      while (static_cast<int>(cache.size()) <= e[i]) cache.push_back(cache.back() * point[i]);
      t *= cache[static_cast<std::size_t>(e[i])];
    }
    acc += t;
  }
  return acc;
}

template <class K>
std::ostream& operator<<(std::ostream& os, const MultiPoly<K>& p) {
  return os << p.str();
}

}  // namespace crl
