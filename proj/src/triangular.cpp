#include "crl/triangular.hpp"

#include "crl/errors.hpp"

namespace crl {

const OperatorColumn& TriangularSolver::column(const Partition& nu) {
  auto it = columns_.find(nu);
  if (it == columns_.end()) it = columns_.emplace(nu, column_fn_(nu)).first;
  return it->second;
}

UniPoly TriangularSolver::eigenvalue(const Partition& nu) {
  const auto& col = column(nu);
  auto it = col.find(nu);
  return it == col.end() ? UniPoly() : it->second;
}

const SymPoly<RatFunc>& TriangularSolver::eigenvector(const Partition& lambda) {
  if (auto it = vectors_.find(lambda); it != vectors_.end()) return it->second;
  // Dominance implies lex order, so walking the weight class in descending
  // lex order visits every nu > mu before mu.
  std::vector<Partition> below;
  for (const auto& mu : enumerate_partitions(lambda.length(), lambda.weight()))
    if (mu == lambda || dominance(lambda, mu) == Dominance::Greater) below.push_back(mu);

  const UniPoly e_lambda = eigenvalue(lambda);
  std::map<Partition, RatFunc> coef;
  coef.emplace(lambda, RatFunc(1));
  for (const auto& mu : below) {
    if (mu == lambda) continue;
    RatFunc acc(0);
    for (const auto& [nu, c] : coef) {
      const auto& col = column(nu);
      auto it = col.find(mu);
      if (it != col.end()) acc += c * RatFunc(it->second);
    }
    const UniPoly gap = e_lambda - eigenvalue(mu);
    if (gap.is_zero())
      throw GenericityFailure("eigenvalues of " + lambda.str() + " and " + mu.str() + " coincide");
    if (!acc.is_zero()) coef.emplace(mu, acc / RatFunc(gap));
  }
  SymPoly<RatFunc> p(lambda.length());
  for (const auto& [mu, c] : coef) p.add_term(mu, c);
  return vectors_.emplace(lambda, std::move(p)).first->second;
}

SymPoly<Rat> apply_at(TriangularSolver& solver, const SymPoly<Rat>& f, const Rat& at) {
  SymPoly<Rat> out(f.n());
  for (const auto& [nu, c] : f.terms())
    for (const auto& [mu, d] : solver.column(nu)) out.add_term(mu, c * d(at));
  return out;
}

SymPoly<Rat> specialize(const SymPoly<RatFunc>& f, const Rat& at) {
  SymPoly<Rat> out(f.n());
  for (const auto& [mu, c] : f.terms()) {
    try {
      out.add_term(mu, limit_at(c, at));
    } catch (const PoleAtPoint&) {
      throw PoleAtPoint("coefficient of m" + mu.str() + " has a pole at " + at.str());
    }
  }
  return out;
}

int min_multiplicity(const SymPoly<RatFunc>& f, const Rat& at) {
  bool first = true;
  int m = 0;
  for (const auto& [mu, c] : f.terms()) {
    const int k = multiplicity_at(c, at);
    m = first ? k : std::min(m, k);
    first = false;
  }
  return m;
}

}  // namespace crl
