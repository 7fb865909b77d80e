#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crl/partitions.hpp"
#include "crl/ratfunc.hpp"
#include "crl/sympoly.hpp"
#include "crl/triangular.hpp"

namespace crl {

/// Macdonald polynomial at t = t0 (rational) with q symbolic; Q(q) is
/// RatFunc in the symbol "q".
struct MacPoly {
  Partition lambda;
  int n = 0;
  Rat t0;
  SymPoly<RatFunc> expansion;
};

/// Column of the first Macdonald operator
///   D f = a_delta^{-1} sum_i (T_{t,i} a_delta)(T_{q,i} f)
/// on m_nu, entries in Q[q].
OperatorColumn macdonald_operator_column(const Partition& nu, const Rat& t0);

/// sum_i t0^{n-i} q^{lambda_i}
UniPoly macdonald_eigenvalue(const Partition& lambda, const Rat& t0);

class MacdonaldEngine {
 public:
  explicit MacdonaldEngine(Rat t0);
  const Rat& t0() const { return t0_; }
  /// Throws GenericityFailure.
  MacPoly macdonald(const Partition& lambda, int n);
  TriangularSolver& solver() { return solver_; }

 private:
  Rat t0_;
  TriangularSolver solver_;
};

MacPoly macdonald(const Partition& lambda, int n, const Rat& t0);

/// One factor (1 - t^t_exp q^q_exp) raised to `power` (+1 or -1).
struct QTFactor {
  int t_exp = 0;
  int q_exp = 0;
  int power = 1;
};

/// t^t_power * prod factors, kept symbolic in (q, t).
struct ProductRecord {
  int t_power = 0;
  std::vector<QTFactor> factors;

  RatFunc at(const Rat& t0) const;
  /// Net number of factors divisible by (1 - t^2 q).
  int zeta() const;
};

/// u0(P_lambda) = t^{n(lambda)} prod (1 - t^{n-l'} q^{a'}) / (1 - t^{l+1} q^a)
ProductRecord principal_specialization_record(const Partition& lambda, int n);
RatFunc principal_specialization(const Partition& lambda, int n, const Rat& t0);

/// Multiplicity of (1 - t^2 q) in u0(P_lambda), read from the formal product.
int zeta_u0(const Partition& lambda, int n);

/// P_lambda - (u0(P_lambda)/u0(P_nu)) P_nu in Cases A and B, else P_lambda.
SymPoly<RatFunc> modified_macdonald(const Partition& lambda, int n, MacdonaldEngine& engine);

/// Coefficient-wise limit at q = q0; throws PoleAtPoint.
SymPoly<Rat> specialize_q(const SymPoly<RatFunc>& f, const Rat& q0);

/// q0 = t0^{-2}
Rat critical_q(const Rat& t0);

bool vanishes_on_t_diagonals(const SymPoly<Rat>& f, const Rat& t0);

/// u_mu(P_lambda)/u0(P_lambda) == u_lambda(P_mu)/u0(P_mu) in Q(q).
bool symmetry_check(const Partition& lambda, const Partition& mu, int n, MacdonaldEngine& engine);

/// u_mu: the point (t0^{n-1} q^{mu_1}, ..., q^{mu_n}).
std::vector<RatFunc> u_point(const Partition& mu, const Rat& t0);

struct OperatorStructure {
  enum class Kind { Eigen, JordanBlock };
  Kind kind = Kind::Eigen;
  Rat eigenvalue;
  std::optional<Partition> partner;
  Rat off_diagonal;  ///< coefficient of the partner in a Jordan block

  std::string str() const;
};

/// Action of the first operator at q = t0^{-2} on the specialized modified
/// polynomial. Throws NeitherStructure.
OperatorStructure operator_structure(const Partition& lambda, int n, MacdonaldEngine& engine);

/// True iff f is exactly divisible by prod_{i<j} (x_i - t0 x_j)(t0 x_i - x_j).
bool divisible_by_t_products(const SymPoly<Rat>& f, const Rat& t0);

}  // namespace crl
