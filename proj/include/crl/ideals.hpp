#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crl/linalg.hpp"
#include "crl/series.hpp"
#include "crl/sympoly.hpp"

namespace crl {

/// Symmetric polynomials in n variables vanishing on every listed pattern
/// (the intersection of the single-pattern ideals).
struct IdealSpec {
  int n = 0;
  std::vector<Pattern> patterns;

  static IdealSpec double_diagonal(int n) { return {n, {Pattern::double_diagonal()}}; }
  static IdealSpec t_diagonal(int n, const Rat& t0) { return {n, {Pattern::t_diagonal(t0)}}; }
  static IdealSpec shifted(int n) { return {n, {Pattern::shifted()}}; }
  static IdealSpec pfold(int n, int p) { return {n, {Pattern::pfold(p)}}; }

  /// Homogeneous patterns give a graded ideal; the shifted pattern only a
  /// filtered one, whose degree-d piece is taken as all degrees <= d.
  bool graded() const;
  void validate() const;
  std::string str() const;
};

struct ComputeOptions {
  std::optional<std::uint64_t> prime;  ///< modular screen for ranks
};

/// Monomial-basis index of the source space at degree d: pi_{n,d}, or all
/// weights <= d for a filtered ideal.
std::vector<Partition> source_basis(const IdealSpec& spec, int d);

/// Columns: source_basis; rows: monomials of every pattern image.
Matrix<Rat> substitution_matrix(const IdealSpec& spec, int d);

int ideal_dimension(const IdealSpec& spec, int d, const ComputeOptions& opt = {});

/// Exact kernel basis over Q.
std::vector<SymPoly<Rat>> ideal_basis(const IdealSpec& spec, int d);

enum class Grading {
  /// The ideal in the coefficient ring C[a_0, ..., a_n] of binary forms,
  /// bigraded by (coefficient degree, weight); generators reported by weight.
  Projective,
  /// The ideal in Lambda_n = C[e_1, ..., e_n] graded by weight alone.
  Affine,
};

/// Weight -> number of minimal generators of that weight, for weights up to
/// bound. Affine: dim I_d - rank(sum_k e_k I_{d-k}). Projective: at each
/// bidegree (delta, w), dim I~ - rank(I~_{delta-1,w} + sum_k e_k I~_{delta-1,w-k})
/// where I~_{delta,w} is I_w restricted to e-monomials with <= delta factors.
/// Graded ideals only.
std::map<int, int> generator_degrees(const IdealSpec& spec, int bound, const ComputeOptions& opt = {},
                                     Grading grading = Grading::Projective);

/// Projective generator counts per bidegree (delta, weight).
std::map<std::pair<int, int>, int> generator_bidegrees(const IdealSpec& spec, int bound, const ComputeOptions& opt = {});

/// The multiset as a sorted list with repetitions.
std::vector<int> as_multiset(const std::map<int, int>& degrees);

/// M(n) = (n-1)(n-3)
int min_degree(int n);
/// M(n,p) = s(s-1)(p-1) + 2sr with n = s(p-1) + r
int min_degree(int n, int p);

/// (2n-5, 2n-7, ..., 5, 3, 0, 0, 0)
Partition lambda_min(int n);

/// Q = Symm prod_{j>=4} (x1-xj)(x2-xj)(x3-xj) prod_{4<=k<l} (xk-xl)^2
SymPoly<Rat> q_generator(int n);

/// c with f = c g, or nullopt when not proportional (g != 0).
std::optional<Rat> proportionality(const SymPoly<Rat>& f, const SymPoly<Rat>& g);

struct LambdaMinReport {
  Partition lambda;
  SymPoly<Rat> q;
  SymPoly<Rat> jack_at_half;  ///< P_lambda at theta = -1/2
  Rat ratio;                  ///< q = ratio * jack_at_half
};

/// Asserts |lambda| = M(n), Q in I_n and the proportionality; throws
/// ProportionalityFailure.
LambdaMinReport lambda_min_generator(int n);

/// Dual ring: r_{i,j} = [x^i y^j] e(x)^2 e(y)^2 as e-monomials, keyed by the
/// partition of e-indices (weight 4).
std::map<Partition, long> dual_relation(int i, int j);

struct DualRingReport {
  int quotient_dim = 0;
  int admissible_count = 0;
  int relation_rank = 0;
};

/// dim R_{n,d} - rank{e_mu r_{i,j}} against #admissible(pi_{n,d}).
DualRingReport dual_ring_spanning(int n, int d, const ComputeOptions& opt = {});

struct FiltrationReport {
  SeriesTable f2_over_f, f_over_f1, f1;
  std::array<SeriesTable, 3> expected;
};

/// F2 = double-diagonal ideal, F = F2 and triple-diagonal, F1 = pair-diagonal.
FiltrationReport filtration_check(int n, int bound, const ComputeOptions& opt = {});

}  // namespace crl
