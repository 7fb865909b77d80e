#include "crl/macdonald.hpp"

#include <algorithm>
#include <numeric>

#include "crl/errors.hpp"

namespace crl {

namespace {

using PolyQ = MultiPoly<UniPoly>;

// a_delta = det(x_i^{n-j}) as a signed sum over permutations.
PolyQ vandermonde(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  PolyQ a(n);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    Exponent e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = n - 1 - perm[static_cast<std::size_t>(i)];
    a.add_term(e, UniPoly(inversions % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return a;
}

}  // namespace

OperatorColumn macdonald_operator_column(const Partition& nu, const Rat& t0) {
  const int n = nu.length();
  const PolyQ a = vandermonde(n);
  PolyQ sum(n);
  for (int i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    PolyQ ta(n), tf(n);
    for (const auto& [e, c] : a.terms()) ta.add_term(e, c * UniPoly(pow(t0, e[ui])));
    for (const auto& e : orbit(nu)) tf.add_term(e, UniPoly::monomial(Rat(1), e[ui]));
    sum += ta * tf;
  }
  const PolyQ d = divide_vandermonde(sum);
  OperatorColumn col;
  for (const auto& [e, c] : d.terms())
    if (is_weakly_decreasing(e)) col.emplace(Partition(e), c);
  return col;
}

UniPoly macdonald_eigenvalue(const Partition& lambda, const Rat& t0) {
  UniPoly e;
  const int n = lambda.length();
  for (int i = 1; i <= n; ++i) e += UniPoly::monomial(pow(t0, n - i), lambda.at1(i));
  return e;
}

MacdonaldEngine::MacdonaldEngine(Rat t0)
    : t0_(std::move(t0)), solver_([t = t0_](const Partition& nu) { return macdonald_operator_column(nu, t); }) {
  if (t0_.is_zero() || t0_ == Rat(1) || t0_ == Rat(-1)) throw std::invalid_argument("t0 must avoid 0, 1, -1");
}

MacPoly MacdonaldEngine::macdonald(const Partition& lambda, int n) {
  const Partition l = lambda.padded(n);
  return {l, n, t0_, solver_.eigenvector(l)};
}

MacPoly macdonald(const Partition& lambda, int n, const Rat& t0) {
  MacdonaldEngine e(t0);
  return e.macdonald(lambda, n);
}

RatFunc ProductRecord::at(const Rat& t0) const {
  UniPoly num(pow(t0, t_power)), den(1);
  for (const auto& f : factors) {
    const UniPoly p = UniPoly(1) - UniPoly::monomial(pow(t0, f.t_exp), f.q_exp);
    if (f.power > 0)
      num *= pow(p, f.power);
    else
      den *= pow(p, -f.power);
  }
  return RatFunc(num, den);
}

int ProductRecord::zeta() const {
  int z = 0;
  for (const auto& f : factors)
    if (f.q_exp >= 1 && f.t_exp == 2 * f.q_exp) z += f.power;
  return z;
}

ProductRecord principal_specialization_record(const Partition& lambda, int n) {
  const BoxStats s = box_stats(lambda);
  ProductRecord r;
  r.t_power = s.n_lambda;
  for (const auto& b : s.boxes) {
    r.factors.push_back({n - b.coleg, b.coarm, 1});
    r.factors.push_back({b.leg + 1, b.arm, -1});
  }
  return r;
}

RatFunc principal_specialization(const Partition& lambda, int n, const Rat& t0) {
  return principal_specialization_record(lambda, n).at(t0);
}

int zeta_u0(const Partition& lambda, int n) { return principal_specialization_record(lambda, n).zeta(); }

SymPoly<RatFunc> modified_macdonald(const Partition& lambda, int n, MacdonaldEngine& engine) {
  const Partition l = lambda.padded(n);
  const CaseTag tag = classify(l);
  SymPoly<RatFunc> p = engine.macdonald(l, n).expansion;
  if (!tag.companion) return p;
  const Partition& nu = *tag.companion;
  const RatFunc ratio = principal_specialization(l, n, engine.t0()) / principal_specialization(nu, n, engine.t0());
  return p - engine.macdonald(nu, n).expansion * ratio;
}

SymPoly<Rat> specialize_q(const SymPoly<RatFunc>& f, const Rat& q0) { return specialize(f, q0); }

Rat critical_q(const Rat& t0) { return Rat(1) / (t0 * t0); }

bool vanishes_on_t_diagonals(const SymPoly<Rat>& f, const Rat& t0) {
  return substitute_pattern(f, Pattern::t_diagonal(t0)).is_zero();
}

std::vector<RatFunc> u_point(const Partition& mu, const Rat& t0) {
  std::vector<RatFunc> pt;
  const int n = mu.length();
  for (int i = 1; i <= n; ++i) pt.emplace_back(UniPoly::monomial(pow(t0, n - i), mu.at1(i)));
  return pt;
}

bool symmetry_check(const Partition& lambda, const Partition& mu, int n, MacdonaldEngine& engine) {
  const Partition l = lambda.padded(n), m = mu.padded(n);
  const Rat& t0 = engine.t0();
  const RatFunc lhs = evaluate(engine.macdonald(l, n).expansion, u_point(m, t0)) / principal_specialization(l, n, t0);
  const RatFunc rhs = evaluate(engine.macdonald(m, n).expansion, u_point(l, t0)) / principal_specialization(m, n, t0);
  return lhs == rhs;
}

std::string OperatorStructure::str() const {
  if (kind == Kind::Eigen) return "Eigen(" + eigenvalue.str() + ")";
  return "JordanBlock(" + partner->str() + ")";
}

OperatorStructure operator_structure(const Partition& lambda, int n, MacdonaldEngine& engine) {
  const Partition l = lambda.padded(n);
  const CaseTag tag = classify(l);
  const Rat q0 = critical_q(engine.t0());
  const SymPoly<Rat> f = specialize_q(modified_macdonald(l, n, engine), q0);
  const SymPoly<Rat> df = apply_at(engine.solver(), f, q0);
  OperatorStructure out;
  out.eigenvalue = df.coeff(l) / f.coeff(l);
  const SymPoly<Rat> rest = df - f * out.eigenvalue;
  if (rest.is_zero()) return out;
  if (tag.companion) {
    const Partition& nu = *tag.companion;
    const SymPoly<RatFunc> pnu =
        is_admissible(nu) ? modified_macdonald(nu, n, engine) : engine.macdonald(nu, n).expansion;
    const SymPoly<Rat> g = specialize_q(pnu, q0);
    const auto& [mu, c] = *g.terms().rbegin();
    const Rat k = rest.coeff(mu) / c;
    if (!k.is_zero() && rest == g * k) {
      out.kind = OperatorStructure::Kind::JordanBlock;
      out.partner = nu;
      out.off_diagonal = k;
      return out;
    }
  }
  throw NeitherStructure("operator image of the modified polynomial for " + l.str() + " is neither an eigenvector nor a Jordan pair");
}

bool divisible_by_t_products(const SymPoly<Rat>& f, const Rat& t0) {
  MultiPoly<Rat> g = expand(f);
  try {
    for (int i = 0; i < f.n(); ++i)
      for (int j = i + 1; j < f.n(); ++j) {
        g = divide_linear(g, i, j, t0);  // x_i - t0 x_j
        g = divide_linear(g, j, i, t0);  // x_j - t0 x_i, up to sign
      }
  } catch (const NonExactDivision&) {
    return false;
  }
  return true;
}

}  // namespace crl
