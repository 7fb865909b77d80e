#pragma once

#include <array>
#include <compare>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace crl {

/// Weakly decreasing vector of nonnegative integers of a fixed length n;
/// trailing zeros are stored.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  /// 0-based access.
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  /// 1-based access returning 0 past the end, matching lambda_{n+1} = 0.
  int at1(int i) const { return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
  const std::vector<int>& parts() const { return parts_; }
  /// Column lengths lambda'_1 >= lambda'_2 >= ... (length lambda_1).
  std::vector<int> conjugate() const;
  /// Copy padded with zeros (or trimmed of zeros) to length n.
  Partition padded(int n) const;

  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// All partitions of d into at most n parts, padded to length n, in
/// reverse-lexicographic order (largest first).
std::vector<Partition> enumerate_partitions(int n, int d);
/// All partitions with weight <= max_weight, ordered by weight then reverse-lex.
std::vector<Partition> enumerate_partitions_up_to(int n, int max_weight);

enum class Dominance { Less, Greater, Equal, Incomparable };
std::string to_string(Dominance d);

/// Dominance comparison by partial sums. Throws WeightMismatch when the
/// weights differ.
Dominance dominance(const Partition& lambda, const Partition& mu);

/// Multiplicities a_k = #{j : lambda_j = k}, for k = 0 .. lambda_1.
std::vector<int> exponent_vector(const Partition& lambda);

/// True iff the dual monomial e_0^{a_0} e_1^{a_1} ... contains no
/// sub-monomial of the forbidden shapes (two factors each e_i^2 or
/// e_j e_{j+1}, or e_i^3 e_{i+2}).
bool is_admissible(const Partition& lambda);

struct CaseTag {
  enum class Kind { A, B, C };
  Kind kind = Kind::C;
  int pivot = 0;  ///< 1-based index i for Cases A and B; 0 for C.
  std::optional<Partition> companion;

  std::string str() const;
};

/// Case A/B/C classification of an admissible partition together with its
/// companion. Throws NotAdmissible.
CaseTag classify(const Partition& lambda);

/// Multiset {j + 2 lambda_j : 1 <= j <= n}, sorted ascending. Two partitions
/// share their eigenvalue data at t^2 q = 1 iff these coincide.
std::vector<int> diagonal_multiset(const Partition& lambda);

/// Every mu != lambda of the same length and weight with the same diagonal
/// multiset, found by exhaustive search.
std::vector<Partition> companions_bruteforce(const Partition& lambda);

struct Box {
  int row = 0, col = 0;  ///< 1-based
  int arm = 0, leg = 0, coarm = 0, coleg = 0;
};

struct BoxStats {
  std::vector<Box> boxes;  ///< row-major order
  int n_lambda = 0;        ///< sum (i-1) lambda_i
};

BoxStats box_stats(const Partition& lambda);

/// Multiplicity of (1 - t^2 q) in u_0(P_lambda), counted directly from the
/// box patterns (coleg, coarm) = (n - 2l, l) minus (leg, arm) = (2l - 1, l).
int zeta_u0_combinatorial(const Partition& lambda, int n);

/// Which of the four counting cases of the Hilbert series decomposition a
/// partition satisfies (1-based case numbers; normally zero or one entry).
std::vector<int> counting_cases(const Partition& lambda);

struct CaseCounts {
  std::array<std::vector<Partition>, 4> members;
  std::vector<Partition> unclassified;      ///< admissible, in no case
  std::vector<Partition> multiply_matched;  ///< admissible, in several cases
  std::vector<Partition> admissible;

  std::array<int, 4> counts() const;
  int total() const { return static_cast<int>(admissible.size()); }
};

CaseCounts count_admissible_by_case(int n, int d);

/// All admissible partitions of weight d with n parts (reverse-lex order).
std::vector<Partition> admissible_partitions(int n, int d);

}  // namespace crl
