#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crl/rat.hpp"

namespace crl {

struct VerifyOptions {
  /// Restrict every criterion to this number of variables; criteria with no
  /// part at that n are skipped.
  std::optional<int> n;
  std::vector<Rat> t0s{Rat(2), Rat(mpz_class(3), mpz_class(2)), Rat(mpz_class(5), mpz_class(3))};
  std::optional<std::uint64_t> prime;
  std::uint64_t seed = 1;
  /// Include the n = 6 generator list (long).
  bool extended = false;
  /// Pieri check with the shift as printed, without the |rho| term.
  bool literal_shift = false;
  /// Criterion numbers to run; empty means all.
  std::set<int> only;
};

struct CriterionResult {
  enum class Status { Pass, Fail, Skip };
  int id = 0;
  std::string label;
  Status status = Status::Skip;
  std::vector<std::string> details;  ///< one line per checked item
  double seconds = 0;

  std::string status_str() const;
};

constexpr int kCriteria = 16;

/// Runs the acceptance criteria in order, reporting each as it finishes.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt,
                                            const std::function<void(const CriterionResult&)>& report = {});

/// One criterion; throws std::out_of_range for an unknown id.
CriterionResult run_criterion(int id, const VerifyOptions& opt);

}  // namespace crl
