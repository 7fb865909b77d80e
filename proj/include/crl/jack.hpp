#pragma once

#include <memory>

#include "crl/partitions.hpp"
#include "crl/ratfunc.hpp"
#include "crl/sympoly.hpp"
#include "crl/triangular.hpp"

namespace crl {

/// theta = 1/alpha throughout; Q(theta) is RatFunc in the symbol "theta".
struct JackPoly {
  Partition lambda;
  int n = 0;
  SymPoly<RatFunc> expansion;
};

/// Matrix column of
///   H = sum_i (x_i d_i)^2 + theta sum_{i<j} (x_i + x_j)/(x_i - x_j) (x_i d_i - x_j d_j)
/// on m_nu, with entries in Q[theta].
OperatorColumn jack_operator_column(const Partition& nu);

/// sum lambda_i^2 + theta sum_i (n + 1 - 2i) lambda_i
UniPoly jack_eigenvalue(const Partition& lambda);

/// Caches operator columns and polynomials across calls.
class JackEngine {
 public:
  JackEngine() : solver_(jack_operator_column) {}
  JackPoly jack(const Partition& lambda, int n);
  TriangularSolver& solver() { return solver_; }

 private:
  TriangularSolver solver_;
};

/// P_lambda(x; theta) in n variables; lambda is padded or trimmed to n.
JackPoly jack(const Partition& lambda, int n);

/// prod over boxes ((n - l')theta + a') / ((l + 1)theta + a)
RatFunc jack_u0(const Partition& lambda, int n);

/// P_lambda - (u0(P_lambda)/u0(P_nu)) P_nu in Cases A and B, P_lambda in
/// Case C. Throws NotAdmissible.
SymPoly<RatFunc> modified_jack(const Partition& lambda, int n, JackEngine& engine);
SymPoly<RatFunc> modified_jack(const Partition& lambda, int n);

/// Coefficient-wise limit at theta = theta0; throws PoleAtPoint.
SymPoly<Rat> specialize_theta(const SymPoly<RatFunc>& f, const Rat& theta0);

bool vanishes_on_double_diagonal(const SymPoly<Rat>& f);

}  // namespace crl
