#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "crl/errors.hpp"
#include "crl/multipoly.hpp"
#include "crl/partitions.hpp"
#include "crl/rat.hpp"

namespace crl {

/// Distinct permutations of the parts of lambda, as exponent vectors.
inline std::vector<Exponent> orbit(const Partition& lambda) {
  Exponent e = lambda.parts();
  std::sort(e.begin(), e.end());
  std::vector<Exponent> out;
  do out.push_back(e);
  while (std::next_permutation(e.begin(), e.end()));
  return out;
}

/// prod_k (multiplicity of k)! ; the stabilizer order of lambda in S_n.
inline long stabilizer_order(const Partition& lambda) {
  long s = 1;
  int run = 0;
  for (int i = 0; i < lambda.length(); ++i) {
    run = (i > 0 && lambda[i] == lambda[i - 1]) ? run + 1 : 1;
    s *= run;
  }
  return s;
}

inline bool is_weakly_decreasing(const Exponent& e) {
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i] > e[i - 1]) return false;
  return true;
}

/// Symmetric polynomial in n variables in the monomial-symmetric basis.
template <class K>
class SymPoly {
 public:
  using Terms = std::map<Partition, K>;

  explicit SymPoly(int n = 0) : n_(n) {}

  static SymPoly constant(int n, const K& c) {
    SymPoly f(n);
    f.add_term(Partition(std::vector<int>(static_cast<std::size_t>(n), 0)), c);
    return f;
  }
  static SymPoly monomial(const Partition& lambda, const K& c = K(1)) {
    SymPoly f(lambda.length());
    f.add_term(lambda, c);
    return f;
  }

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  K coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(const Partition& lambda, const K& c) {
    if (lambda.length() != n_) throw std::invalid_argument("partition " + lambda.str() + " has the wrong length");
    if (detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Largest weight present; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& [l, c] : terms_) d = std::max(d, l.weight());
    return d;
  }
  bool is_homogeneous() const {
    int w = -1;
    for (const auto& [l, c] : terms_) {
      if (w >= 0 && l.weight() != w) return false;
      w = l.weight();
    }
    return true;
  }
  SymPoly component(int d) const {
    SymPoly r(n_);
    for (const auto& [l, c] : terms_)
      if (l.weight() == d) r.terms_.emplace(l, c);
    return r;
  }

  SymPoly operator-() const {
    SymPoly r(n_);
    for (const auto& [l, c] : terms_) r.terms_.emplace(l, K(0) - c);
    return r;
  }
  SymPoly& operator+=(const SymPoly& o) {
    for (const auto& [l, c] : o.terms_) add_term(l, c);
    return *this;
  }
  SymPoly& operator-=(const SymPoly& o) {
    for (const auto& [l, c] : o.terms_) add_term(l, K(0) - c);
    return *this;
  }
  SymPoly& operator*=(const K& s) {
    if (detail::coeff_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [l, c] : terms_) c *= s;
    return *this;
  }
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const K& s) { return a *= s; }
  friend SymPoly operator*(const K& s, SymPoly a) { return a *= s; }
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      os << (first ? "" : " + ") << '(' << it->second << ")*m" << it->first.str();
      first = false;
    }
    return os.str();
  }

 private:
  int n_ = 0;
  Terms terms_;
};

template <class K>
bool is_zero(const SymPoly<K>& f) {
  return f.is_zero();
}

template <class K>
std::ostream& operator<<(std::ostream& os, const SymPoly<K>& f) {
  return os << f.str();
}

template <class K>
MultiPoly<K> expand(const SymPoly<K>& f) {
  MultiPoly<K> g(f.n());
  for (const auto& [l, c] : f.terms())
    for (const auto& e : orbit(l)) g.add_term(e, c);
  return g;
}

/// Throws NotSymmetric when some transposition changes g.
template <class K>
SymPoly<K> collect(const MultiPoly<K>& g) {
  SymPoly<K> f(g.nvars());
  std::size_t expected = 0;
  for (const auto& [e, c] : g.terms()) {
    if (!is_weakly_decreasing(e)) continue;
    Partition l(e);
    f.add_term(l, c);
    for (const auto& a : orbit(l)) {
      if (!(g.coeff(a) == c)) throw NotSymmetric("polynomial is not symmetric at exponent " + Partition(e).str());
      ++expected;
    }
  }
  if (expected != g.size()) throw NotSymmetric("polynomial is not symmetric");
  return f;
}

template <class K>
SymPoly<K> operator*(const SymPoly<K>& f, const SymPoly<K>& g) {
  if (f.n() != g.n()) throw std::invalid_argument("multiplying symmetric polynomials in different variable counts");
  SymPoly<K> out(f.n());
  if (f.is_zero() || g.is_zero()) return out;
  std::map<Partition, std::vector<Exponent>> orbits;
  auto orb = [&](const Partition& l) -> const std::vector<Exponent>& {
    auto it = orbits.find(l);
    if (it == orbits.end()) it = orbits.emplace(l, orbit(l)).first;
    return it->second;
  };
  // Count pairs (alpha, beta) from the two orbits whose sum is a partition.
  std::map<Partition, std::map<Partition, long>> table;
  for (const auto& [l, cl] : f.terms()) {
    for (const auto& [m, cm] : g.terms()) {
      std::map<Partition, long> counts;
      Exponent s(static_cast<std::size_t>(f.n()));
      for (const auto& a : orb(l)) {
        for (const auto& b : orb(m)) {
          bool ok = true;
          for (std::size_t k = 0; k < s.size() && ok; ++k) {
            s[k] = a[k] + b[k];
            ok = k == 0 || s[k] <= s[k - 1];
          }
          if (ok) ++counts[Partition(s)];
        }
      }
      const K c = cl * cm;
      for (const auto& [nu, cnt] : counts) out.add_term(nu, c * K(static_cast<int>(cnt)));
    }
  }
  return out;
}

/// e_k = m_(1^k 0^{n-k}).
template <class K>
SymPoly<K> elementary(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("elementary(k, n) needs 0 <= k <= n");
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < k; ++i) parts[static_cast<std::size_t>(i)] = 1;
  return SymPoly<K>::monomial(Partition(parts));
}

/// Keys are exponent vectors (a_1, ..., a_n) of e_1^{a_1} ... e_n^{a_n}.
template <class K>
using EMonomials = std::map<std::vector<int>, K>;

namespace detail {

template <class K>
class EProducts {
 public:
  explicit EProducts(int n) : n_(n) {}
  const SymPoly<K>& get(const std::vector<int>& a) {
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
    SymPoly<K> r = SymPoly<K>::constant(n_, K(1));
    // Peel one factor off the highest nonzero exponent and recurse.
    std::vector<int> rest = a;
    for (int k = n_; k >= 1; --k) {
      if (rest[static_cast<std::size_t>(k - 1)] > 0) {
        --rest[static_cast<std::size_t>(k - 1)];
        r = get(rest) * elementary<K>(k, n_);
        break;
      }
    }
    return cache_.emplace(a, std::move(r)).first->second;
  }

 private:
  int n_;
  std::map<std::vector<int>, SymPoly<K>> cache_;
};

}  // namespace detail

template <class K>
EMonomials<K> to_elementary_basis(SymPoly<K> f) {
  const int n = f.n();
  detail::EProducts<K> prods(n);
  EMonomials<K> out;
  while (!f.is_zero()) {
    const auto [lead, c] = *f.terms().rbegin();
    // e_{lambda'} has leading monomial m_lambda.
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    for (int col : lead.conjugate()) ++a[static_cast<std::size_t>(col - 1)];
    const K coef = c;
    out[a] += coef;
    f -= prods.get(a) * coef;
  }
  for (auto it = out.begin(); it != out.end();) it = is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

template <class K>
SymPoly<K> from_elementary_basis(const EMonomials<K>& a, int n) {
  detail::EProducts<K> prods(n);
  SymPoly<K> f(n);
  for (const auto& [e, c] : a) f += prods.get(e) * c;
  return f;
}

template <class K>
K evaluate(const SymPoly<K>& f, const std::vector<K>& point) {
  if (static_cast<int>(point.size()) != f.n()) throw std::invalid_argument("evaluation point has the wrong length");
  std::vector<std::vector<K>> pw(point.size());
  auto power = [&](std::size_t i, int e) -> const K& {
    auto& cache = pw[i];
    if (cache.empty()) cache.push_back(K(1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * point[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  K acc(0);
  for (const auto& [l, c] : f.terms()) {
    K m(0);
    for (const auto& e : orbit(l)) {
      K t(1);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) t *= power(i, e[i]);
      m += t;
    }
    acc += c * m;
  }
  return acc;
}

/// Sum of g over all n! permutations of the variables, without 1/n!.
template <class K>
SymPoly<K> symmetrize(const MultiPoly<K>& g) {
  SymPoly<K> f(g.nvars());
  for (const auto& [e, c] : g.terms()) {
    Exponent s = e;
    std::sort(s.begin(), s.end(), std::greater<>());
    Partition l(s);
    f.add_term(l, c * K(static_cast<int>(stabilizer_order(l))));
  }
  return f;
}

template <class K2, class K, class Fn>
SymPoly<K2> map_coeffs(const SymPoly<K>& f, Fn&& fn) {
  SymPoly<K2> r(f.n());
  for (const auto& [l, c] : f.terms()) r.add_term(l, fn(c));
  return r;
}

/// Substitution patterns defining the ideals.
struct Pattern {
  enum class Kind { DoubleDiagonal, DoubleTDiagonal, DoubleShift, PFold };
  Kind kind = Kind::DoubleDiagonal;
  Rat param;  ///< t0 for DoubleTDiagonal, the shift for DoubleShift
  int p = 0;  ///< for PFold

  static Pattern double_diagonal() { return {}; }
  static Pattern t_diagonal(const Rat& t0) { return {Kind::DoubleTDiagonal, t0, 0}; }
  static Pattern shifted(const Rat& s = Rat(mpz_class(1), mpz_class(2))) { return {Kind::DoubleShift, s, 0}; }
  static Pattern pfold(int p) { return {Kind::PFold, Rat(0), p}; }

  int arity() const { return kind == Kind::PFold ? p : 4; }
  /// Free variables left after substituting into n variables.
  int free_vars(int n) const { return kind == Kind::PFold ? n - p + 1 : n - 2; }
  bool homogeneous() const { return kind != Kind::DoubleShift; }
  std::string str() const;
};

/// x_i -> (scale, free variable, shift) for each source variable.
std::vector<AffineImage<Rat>> pattern_images(const Pattern& pat, int n);

/// The polynomial in the surviving free variables (u, v, x_5, ..., x_n for the
/// double patterns; u, x_{p+1}, ..., x_n for PFold). Throws BadPattern.
template <class K>
MultiPoly<K> substitute_pattern(const SymPoly<K>& f, const Pattern& pat) {
  const int n = f.n();
  const auto images = pattern_images(pat, n);
  const int m = pat.free_vars(n);
  MultiPoly<K> out(m);
  if (pat.homogeneous()) {
    Exponent t(static_cast<std::size_t>(m));
    for (const auto& [l, c] : f.terms()) {
      for (const auto& e : orbit(l)) {
        std::fill(t.begin(), t.end(), 0);
        Rat s(1);
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (!e[i]) continue;
          t[static_cast<std::size_t>(images[i].target)] += e[i];
          if (!images[i].scale.is_one()) s *= pow(images[i].scale, e[i]);
        }
        out.add_term(t, s.is_one() ? c : c * K(s));
      }
    }
    return out;
  }
  std::vector<AffineImage<K>> kimg;
  for (const auto& im : images) kimg.push_back({im.target, K(im.scale), K(im.shift)});
  return substitute(expand(f), kimg, m);
}

}  // namespace crl
