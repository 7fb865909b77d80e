#pragma once

#include <array>
#include <string>
#include <vector>

namespace crl {

/// Power series in q truncated after degree `bound`.
struct SeriesTable {
  int bound = 0;
  std::vector<long> coeffs;  ///< size bound + 1

  explicit SeriesTable(int d = 0) : bound(d), coeffs(static_cast<std::size_t>(d) + 1, 0) {}

  long operator[](int d) const { return d >= 0 && d <= bound ? coeffs[static_cast<std::size_t>(d)] : 0; }
  long& at(int d) { return coeffs[static_cast<std::size_t>(d)]; }

  static SeriesTable monomial(int bound, int exponent, long c = 1);

  SeriesTable& operator+=(const SeriesTable& o);
  SeriesTable& operator-=(const SeriesTable& o);
  friend SeriesTable operator+(SeriesTable a, const SeriesTable& b) { return a += b; }
  friend SeriesTable operator-(SeriesTable a, const SeriesTable& b) { return a -= b; }
  friend SeriesTable operator*(const SeriesTable& a, const SeriesTable& b);
  friend bool operator==(const SeriesTable&, const SeriesTable&) = default;

  /// Multiplies by 1/(q)_k = prod_{j=1}^k 1/(1 - q^j).
  SeriesTable& divide_qpoch(int k);

  std::string str() const;
};

/// q^{(n-1)(n-3)}/((q)_1 (q)_{n-3}) + q^{(n-2)(n-1)}/((q)_1 (q)_{n-2}) + q^{n(n-1)}/(q)_n
SeriesTable hilbert_series_theorem(int n, int bound);

/// The three summands above, in that order.
std::array<SeriesTable, 3> hilbert_series_terms(int n, int bound);

/// The four counting-case generating functions.
std::array<SeriesTable, 4> case_series(int n, int bound);

/// Sum of the four case series.
SeriesTable hilbert_series_cases(int n, int bound);

}  // namespace crl
