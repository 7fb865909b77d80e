#include "crl/interp.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "crl/errors.hpp"
#include "crl/linalg.hpp"
#include "crl/triangular.hpp"

namespace crl {

namespace {

const Rat kHalf(mpz_class(-1), mpz_class(2));

Partition padded_or_throw(const Partition& lambda, int n) {
  if (lambda.length() > n && lambda.at1(n + 1) != 0)
    throw std::invalid_argument(lambda.str() + " has more than " + std::to_string(n) + " parts");
  return lambda.padded(n);
}

std::vector<Partition> partitions_up_to(int n, int d) {
  std::vector<Partition> out;
  for (int w = 0; w <= d; ++w)
    for (auto& p : enumerate_partitions(n, w)) out.push_back(std::move(p));
  return out;
}

}  // namespace

std::vector<UniPoly> rho(int n) {
  std::vector<UniPoly> r;
  for (int i = 1; i <= n; ++i) r.push_back(UniPoly::monomial(Rat(n - i), 1));
  return r;
}

std::vector<Rat> rho_at(int n, const Rat& theta) {
  std::vector<Rat> r;
  for (int i = 1; i <= n; ++i) r.push_back(theta * Rat(n - i));
  return r;
}

std::vector<UniPoly> shifted_point(const Partition& mu, int n) {
  auto r = rho(n);
  const Partition m = padded_or_throw(mu, n);
  for (int i = 1; i <= n; ++i) r[static_cast<std::size_t>(i - 1)] += UniPoly(Rat(m.at1(i)));
  return r;
}

UniPoly interp_normalization(const Partition& lambda) {
  UniPoly h(Rat(1));
  for (const auto& b : box_stats(lambda).boxes) h *= UniPoly(std::vector<Rat>{Rat(b.arm + 1), Rat(b.leg)});
  return h;
}

// --- interpolation polynomials ---------------------------------------------

InterpEngine::InterpEngine(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("need at least one variable");
}

const UniPoly& InterpEngine::monomial_value(const Partition& nu, const Partition& mu) {
  auto key = std::make_pair(nu, mu);
  if (auto it = mono_values_.find(key); it != mono_values_.end()) return it->second;
  const auto pt = shifted_point(mu, n_);
  UniPoly v;
  for (const auto& e : orbit(nu)) {
    UniPoly t(Rat(1));
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= pow(pt[i], e[i]);
    v += t;
  }
  return mono_values_.emplace(key, std::move(v)).first->second;
}

const RatFunc& InterpEngine::value(const Partition& kappa, const Partition& mu) {
  const Partition k = padded_or_throw(kappa, n_), m = padded_or_throw(mu, n_);
  auto key = std::make_pair(k, m);
  if (auto it = values_.find(key); it != values_.end()) return it->second;
  const auto& p = interp(k);
  RatFunc v;
  for (const auto& [nu, c] : p.expansion.terms()) v += c * RatFunc(monomial_value(nu, m));
  return values_.emplace(key, std::move(v)).first->second;
}

const InterpPoly& InterpEngine::interp(const Partition& lambda) {
  const Partition l = padded_or_throw(lambda, n_);
  while (built_ < l.weight()) build_weight(built_ + 1);
  return polys_.at(l);
}

void InterpEngine::build_weight(int d) {
  const auto tops = enumerate_partitions(n_, d);
  const auto lower = partitions_up_to(n_, d - 1);  // weight-ascending
  const std::size_t nt = tops.size();

  // corr[j]: coefficients b_kappa with m_{tops[j]} - sum b_kappa P*_kappa
  // vanishing at every point of weight < d.
  std::vector<std::map<Partition, RatFunc>> corr(nt);
  for (std::size_t j = 0; j < nt; ++j) {
    for (const auto& kp : lower) {
      RatFunc v(monomial_value(tops[j], kp));
      for (const auto& [k, b] : corr[j])
        if (k.weight() < kp.weight()) {
          const RatFunc& pv = value(k, kp);
          if (!pv.is_zero()) v -= b * pv;
        }
      if (!v.is_zero()) corr[j][kp] = v / RatFunc(interp_normalization(kp));
    }
  }

  // Top block: V a = H(lambda) e_lambda for every lambda of weight d at once.
  Matrix<RatFunc> aug(static_cast<int>(nt), static_cast<int>(2 * nt));
  for (std::size_t i = 0; i < nt; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      RatFunc v(monomial_value(tops[j], tops[i]));
      for (const auto& [k, b] : corr[j]) {
        const RatFunc& pv = value(k, tops[i]);
        if (!pv.is_zero()) v -= b * pv;
      }
      aug(static_cast<int>(i), static_cast<int>(j)) = v;
    }
    aug(static_cast<int>(i), static_cast<int>(nt + i)) = RatFunc(interp_normalization(tops[i]));
  }
  const auto e = rref(std::move(aug));
  if (e.rank() != static_cast<int>(nt) || e.pivots.back() != static_cast<int>(nt) - 1)
    throw SingularSystem("interpolation system of weight " + std::to_string(d) + " is singular");

  for (std::size_t li = 0; li < nt; ++li) {
    SymPoly<RatFunc> f(n_);
    std::map<Partition, RatFunc> lower_coeff;
    for (std::size_t j = 0; j < nt; ++j) {
      const RatFunc& a = e.m(static_cast<int>(j), static_cast<int>(nt + li));
      if (a.is_zero()) continue;
      f.add_term(tops[j], a);
      for (const auto& [k, b] : corr[j]) lower_coeff[k] -= a * b;
    }
    for (const auto& [k, c] : lower_coeff)
      if (!c.is_zero()) f += polys_.at(k).expansion * c;
    InterpPoly p{tops[li], n_, std::move(f)};
    if (!satisfies_interp_conditions(p))
      throw SingularSystem("interpolation conditions fail for " + tops[li].str());
    polys_.emplace(tops[li], std::move(p));
  }
  built_ = d;
}

InterpPoly interp_jack(const Partition& lambda, int n) {
  InterpEngine e(n);
  return e.interp(lambda);
}

bool satisfies_interp_conditions(const InterpPoly& p) {
  const int d = p.lambda.weight();
  if (!p.expansion.is_zero() && p.expansion.degree() > d) return false;
  auto at = [&](const Partition& mu) {
    std::vector<RatFunc> pt;
    for (const auto& c : shifted_point(mu, p.n)) pt.emplace_back(c);
    return evaluate(p.expansion, pt);
  };
  for (const auto& mu : partitions_up_to(p.n, d)) {
    const RatFunc v = at(mu);
    if (mu == p.lambda ? v != RatFunc(interp_normalization(mu)) : !v.is_zero()) return false;
  }
  return true;
}

SymPoly<RatFunc> interp_jack_dense(const Partition& lambda, int n, const std::vector<Partition>& row_order) {
  const Partition l = padded_or_throw(lambda, n);
  const auto cols = partitions_up_to(n, l.weight());
  if (row_order.size() != cols.size()) throw std::invalid_argument("row order must list every partition once");
  Matrix<RatFunc> a(static_cast<int>(cols.size()), static_cast<int>(cols.size()));
  std::vector<RatFunc> b(cols.size());
  for (std::size_t r = 0; r < row_order.size(); ++r) {
    std::vector<RatFunc> pt;
    for (const auto& c : shifted_point(row_order[r], n)) pt.emplace_back(c);
    for (std::size_t c = 0; c < cols.size(); ++c)
      a(static_cast<int>(r), static_cast<int>(c)) = evaluate(SymPoly<RatFunc>::monomial(cols[c]), pt);
    if (row_order[r].padded(n) == l) b[r] = RatFunc(interp_normalization(l));
  }
  const auto x = solve_unique(a, b);
  SymPoly<RatFunc> f(n);
  for (std::size_t c = 0; c < cols.size(); ++c) f.add_term(cols[c], x[c]);
  return f;
}

// --- difference operators ---------------------------------------------------

KnopSahi::KnopSahi(int n) : n_(n) {
  if (n < 1 || n > 6) throw std::invalid_argument("difference operators need 1 <= n <= 6");
  using MP = MultiPoly<UniPoly>;
  const UniPoly theta = UniPoly::x();
  // entry(i, j, shifted): (x_i + theta)^{n-j} or x_i^{n-j+1}, j 1-based
  auto power = [&](const MP& b, int e) {
    MP r = MP::constant(n, UniPoly(Rat(1)));
    for (int k = 0; k < e; ++k) r = r * b;
    return r;
  };
  auto entry = [&](int i, int j, bool shifted) {
    const MP xi = MP::variable(n, i);
    if (shifted) return power(xi, n - j + 1);
    return power(xi + MP::constant(n, theta), n - j);
  };
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::iota(perm.begin(), perm.end(), 1);
    MP det(n);
    do {
      int inv = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inv;
      MP t = MP::constant(n, UniPoly(Rat(inv % 2 ? -1 : 1)));
      for (int i = 0; i < n; ++i) t = t * entry(i, perm[static_cast<std::size_t>(i)], (mask >> i) & 1u);
      det += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    minors_.push_back(std::move(det));
  }
}

MultiPoly<UniPoly> KnopSahi::apply(int k, const MultiPoly<UniPoly>& f) const {
  if (k < 0 || k > n_) throw std::invalid_argument("operator index out of range");
  if (f.nvars() != n_) throw std::invalid_argument("polynomial has the wrong number of variables");
  if (k == 0) return f;
  MultiPoly<UniPoly> num(n_);
  for (unsigned mask = 0; mask < (1u << n_); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<AffineImage<UniPoly>> shift;
    for (int i = 0; i < n_; ++i) shift.push_back({i, UniPoly(Rat(1)), UniPoly(Rat((mask >> i) & 1u ? -1 : 0))});
    num += minors_[mask] * substitute(f, shift, n_);
  }
  return divide_vandermonde(num);
}

const MultiPoly<UniPoly>& KnopSahi::on_one(const std::vector<int>& exps) {
  if (auto it = cache_.find(exps); it != cache_.end()) return it->second;
  MultiPoly<UniPoly> r = MultiPoly<UniPoly>::constant(n_, UniPoly(Rat(1)));
  for (int k = n_; k >= 1; --k) {
    if (exps[static_cast<std::size_t>(k - 1)] > 0) {
      std::vector<int> rest = exps;
      --rest[static_cast<std::size_t>(k - 1)];
      r = apply(k, on_one(rest));
      break;
    }
  }
  return cache_.emplace(exps, std::move(r)).first->second;
}

SymPoly<RatFunc> KnopSahi::dehomogenize(const SymPoly<RatFunc>& f) {
  if (f.n() != n_) throw std::invalid_argument("polynomial has the wrong number of variables");
  SymPoly<RatFunc> out(n_);
  for (const auto& [exps, c] : to_elementary_basis(f)) {
    const SymPoly<UniPoly> g = collect(on_one(exps));
    out += map_coeffs<RatFunc>(g, [](const UniPoly& u) { return RatFunc(u); }) * c;
  }
  return out;
}

MultiPoly<UniPoly> knop_sahi_apply(int k, const MultiPoly<UniPoly>& f) { return KnopSahi(f.nvars()).apply(k, f); }

SymPoly<RatFunc> dehomogenize(const SymPoly<RatFunc>& f) { return KnopSahi(f.n()).dehomogenize(f); }

// --- modified polynomials and the shifted vanishing ---------------------------

SymPoly<RatFunc> modified_interp_jack(const Partition& lambda, int n, InterpEngine& engine) {
  const Partition l = padded_or_throw(lambda, n);
  const CaseTag tag = classify(l);
  const SymPoly<RatFunc>& p = engine.interp(l).expansion;
  if (!tag.companion) return p;
  const Partition& nu = *tag.companion;
  const RatFunc ratio = jack_u0(l, n) / jack_u0(nu, n);
  return p - engine.interp(nu).expansion * ratio;
}

SymPoly<RatFunc> modified_interp_jack(const Partition& lambda, int n) {
  InterpEngine e(n);
  return modified_interp_jack(lambda, n, e);
}

bool vanishes_shifted(const SymPoly<Rat>& f, const Partition& mu) {
  const int n = f.n();
  const Partition m = padded_or_throw(mu, n);
  std::vector<Rat> pt = rho_at(n, kHalf);
  for (int i = 1; i <= n; ++i) pt[static_cast<std::size_t>(i - 1)] += Rat(m.at1(i));
  return evaluate(f, pt).is_zero();
}

std::vector<Partition> shifted_vanishing_failures(const SymPoly<Rat>& f, int max_weight) {
  std::vector<Partition> bad;
  for (const auto& mu : partitions_up_to(f.n(), max_weight))
    if (!is_admissible(mu) && !vanishes_shifted(f, mu)) bad.push_back(mu);
  return bad;
}

PieriResult pieri_check(const Partition& lambda, int n, InterpEngine& engine, bool with_rho) {
  const Partition l = padded_or_throw(lambda, n);
  PieriResult out;
  out.shift = Rat(l.weight());
  if (with_rho)
    for (const auto& r : rho_at(n, kHalf)) out.shift += r;
  const SymPoly<Rat> base = specialize(modified_interp_jack(l, n, engine), kHalf);
  const SymPoly<Rat> lhs = (elementary<Rat>(1, n) - SymPoly<Rat>::constant(n, out.shift)) * base;

  const auto taus = admissible_partitions(n, l.weight() + 1);
  std::vector<SymPoly<Rat>> basis;
  for (const auto& t : taus) basis.push_back(specialize(modified_interp_jack(t, n, engine), kHalf));

  const auto cols = partitions_up_to(n, l.weight() + 1);
  Matrix<Rat> a(static_cast<int>(cols.size()), static_cast<int>(taus.size()));
  std::vector<Rat> b(cols.size());
  for (std::size_t r = 0; r < cols.size(); ++r) {
    for (std::size_t c = 0; c < taus.size(); ++c) a(static_cast<int>(r), static_cast<int>(c)) = basis[c].coeff(cols[r]);
    b[r] = lhs.coeff(cols[r]);
  }
  out.residual = lhs;
  if (auto x = solve(a, b)) {
    for (std::size_t c = 0; c < taus.size(); ++c) {
      const Rat& v = (*x)[c];
      if (v.is_zero()) continue;
      out.coeffs[taus[c]] = v;
      out.residual -= basis[c] * v;
    }
  }
  if (!out.residual.is_zero())
    throw NoRepresentation("Pieri expansion of " + l.str() + " leaves a nonzero residual");
  return out;
}

}  // namespace crl
