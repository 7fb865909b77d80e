#pragma once

#include <functional>
#include <map>
#include <vector>

#include "crl/partitions.hpp"
#include "crl/ratfunc.hpp"
#include "crl/sympoly.hpp"

namespace crl {

/// Matrix of a degree-preserving operator in the monomial basis:
/// column(nu)[mu] is the coefficient of m_mu in (operator m_nu). Entries
/// are polynomials in the parameter.
using OperatorColumn = std::map<Partition, UniPoly>;

/// Solves for the monic eigenvector with leading term m_lambda of an
/// operator that is triangular in dominance order.
///
/// Columns are computed on demand and cached, so one solver serves every
/// lambda of the same length.
class TriangularSolver {
 public:
  using ColumnFn = std::function<OperatorColumn(const Partition&)>;

  explicit TriangularSolver(ColumnFn column_fn) : column_fn_(std::move(column_fn)) {}

  const OperatorColumn& column(const Partition& nu);
  /// Diagonal entry of the operator at nu.
  UniPoly eigenvalue(const Partition& nu);

  /// Throws GenericityFailure when a dominance-smaller partition shares the
  /// eigenvalue of lambda.
  const SymPoly<RatFunc>& eigenvector(const Partition& lambda);

 private:
  ColumnFn column_fn_;
  std::map<Partition, OperatorColumn> columns_;
  std::map<Partition, SymPoly<RatFunc>> vectors_;
};

/// Applies the operator with columns from `solver` to f, with the parameter
/// set to the rational value at.
SymPoly<Rat> apply_at(TriangularSolver& solver, const SymPoly<Rat>& f, const Rat& at);

/// Every coefficient replaced by its limit at symbol = at; a pole raises
/// PoleAtPoint naming the monomial.
SymPoly<Rat> specialize(const SymPoly<RatFunc>& f, const Rat& at);

/// Smallest multiplicity of (symbol - at) over the nonzero coefficients;
/// 0 for the zero polynomial.
int min_multiplicity(const SymPoly<RatFunc>& f, const Rat& at);

}  // namespace crl
