#pragma once

#include <map>
#include <memory>
#include <vector>

#include "crl/jack.hpp"
#include "crl/partitions.hpp"
#include "crl/ratfunc.hpp"
#include "crl/sympoly.hpp"

namespace crl {

/// ((n-1)theta, (n-2)theta, ..., theta, 0) with theta symbolic.
std::vector<UniPoly> rho(int n);
std::vector<Rat> rho_at(int n, const Rat& theta);

/// mu + rho(theta), mu padded to n.
std::vector<UniPoly> shifted_point(const Partition& mu, int n);

/// prod over boxes (l(s) theta + a(s) + 1)
UniPoly interp_normalization(const Partition& lambda);

/// Inhomogeneous symmetric polynomial of degree <= |lambda| over Q(theta).
struct InterpPoly {
  Partition lambda;
  int n = 0;
  SymPoly<RatFunc> expansion;
};

/// Builds P*_lambda weight by weight and caches them with their values on
/// the shifted lattice.
///
/// For a new weight d every top monomial m_nu is first corrected by lower
/// P*_kappa so that it vanishes at all points of weight < d (a triangular
/// forward solve, since P*_kappa vanishes at kappa' + rho for kappa' != kappa,
/// |kappa'| <= |kappa|). What remains is one dense system per weight whose
/// size is the number of partitions of d. Every result is re-checked against
/// all three defining conditions.
class InterpEngine {
 public:
  explicit InterpEngine(int n);

  int n() const { return n_; }
  const InterpPoly& interp(const Partition& lambda);
  /// P*_kappa(mu + rho(theta))
  const RatFunc& value(const Partition& kappa, const Partition& mu);

 private:
  void build_weight(int d);
  const UniPoly& monomial_value(const Partition& nu, const Partition& mu);

  int n_;
  int built_ = -1;
  std::map<Partition, InterpPoly> polys_;
  std::map<std::pair<Partition, Partition>, RatFunc> values_;
  std::map<std::pair<Partition, Partition>, UniPoly> mono_values_;
};

InterpPoly interp_jack(const Partition& lambda, int n);

/// The defining conditions evaluated symbolically: degree bound, vanishing at
/// every mu + rho with |mu| <= |lambda|, mu != lambda, and the normalization.
bool satisfies_interp_conditions(const InterpPoly& p);

/// The whole interpolation system solved densely over Q(theta); rows are
/// taken in the order given (all partitions of weight <= |lambda|). Slow; for
/// cross-checks.
SymPoly<RatFunc> interp_jack_dense(const Partition& lambda, int n, const std::vector<Partition>& row_order);

/// Difference operators E_1..E_n, read off from
///   prod_{i<j} (x_i - x_j)^{-1} det[(x_i + theta)^{n-j} + t x_i^{n-j+1} T_i]
/// with T_i: x_i -> x_i - 1. Coefficients live in Q[theta].
class KnopSahi {
 public:
  explicit KnopSahi(int n);
  int n() const { return n_; }
  /// E_k f; E_0 is the identity.
  MultiPoly<UniPoly> apply(int k, const MultiPoly<UniPoly>& f) const;
  /// Psi(f) = (product of E_k over the e-expansion of f)(1)
  SymPoly<RatFunc> dehomogenize(const SymPoly<RatFunc>& f);

 private:
  const MultiPoly<UniPoly>& on_one(const std::vector<int>& exps);

  int n_;
  std::vector<MultiPoly<UniPoly>> minors_;  ///< D_S indexed by subset bitmask
  std::map<std::vector<int>, MultiPoly<UniPoly>> cache_;
};

MultiPoly<UniPoly> knop_sahi_apply(int k, const MultiPoly<UniPoly>& f);
SymPoly<RatFunc> dehomogenize(const SymPoly<RatFunc>& f);

/// P*_lambda - (u0(P_lambda)/u0(P_nu)) P*_nu in Cases A and B, where
/// u0(P*) := u0(P) is the homogeneous principal specialization; P*_lambda in
/// Case C. Throws NotAdmissible.
SymPoly<RatFunc> modified_interp_jack(const Partition& lambda, int n, InterpEngine& engine);
SymPoly<RatFunc> modified_interp_jack(const Partition& lambda, int n);

/// f(mu_1 - (n-1)/2, ..., mu_{n-1} - 1/2, mu_n) == 0
bool vanishes_shifted(const SymPoly<Rat>& f, const Partition& mu);

/// Non-admissible mu with |mu| <= max_weight where f does not vanish.
std::vector<Partition> shifted_vanishing_failures(const SymPoly<Rat>& f, int max_weight);

struct PieriResult {
  Rat shift;                        ///< the constant c in (sum x_i - c)
  std::map<Partition, Rat> coeffs;  ///< c_{lambda,tau}
  SymPoly<Rat> residual;
};

/// Expands (sum x_i - |lambda| - |rho(-1/2)|) Pbar*_lambda at theta = -1/2
/// over the Pbar*_tau, tau admissible of weight |lambda|+1. With the rho of
/// the interpolation conditions, Psi(e_1 f) = (e_1 - |rho| - deg f) Psi(f), so
/// the |rho| = -n(n-1)/4 term is needed; `with_rho = false` drops it. Throws
/// NoRepresentation when the residual is nonzero.
PieriResult pieri_check(const Partition& lambda, int n, InterpEngine& engine, bool with_rho = true);

}  // namespace crl
