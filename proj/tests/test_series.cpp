#include <algorithm>

#include "crl/partitions.hpp"
#include "crl/series.hpp"
#include "doctest.h"

using namespace crl;

namespace {

// Oracle for q^s/(q)_{k1}(q)_{k2}...: count tuples of partitions with parts
// bounded by each k, by direct enumeration.
long count_parts_bounded(int d, int k) {
  if (k == 0) return d == 0 ? 1 : 0;
  long c = 0;
  for (const auto& l : enumerate_partitions(std::max(d, 1), d)) {
    if (l.at1(1) <= k) ++c;
  }
  return c;
}

long convolve(int d, int k1, int k2) {
  long s = 0;
  for (int a = 0; a <= d; ++a) s += count_parts_bounded(a, k1) * count_parts_bounded(d - a, k2);
  return s;
}

}  // namespace

TEST_CASE("qpoch division matches bounded partition counts") {
  for (int k = 0; k <= 5; ++k) {
    SeriesTable s = SeriesTable::monomial(15, 0);
    s.divide_qpoch(k);
    for (int d = 0; d <= 15; ++d) CHECK(s[d] == count_parts_bounded(d, k));
  }
}

TEST_CASE("theorem series expands term by term") {
  for (int n = 4; n <= 6; ++n) {
    const int bound = 24;
    const auto terms = hilbert_series_terms(n, bound);
    const int s1 = (n - 1) * (n - 3), s2 = (n - 2) * (n - 1), s3 = n * (n - 1);
    for (int d = 0; d <= bound; ++d) {
      CHECK(terms[0][d] == (d >= s1 ? convolve(d - s1, 1, n - 3) : 0));
      CHECK(terms[1][d] == (d >= s2 ? convolve(d - s2, 1, n - 2) : 0));
      CHECK(terms[2][d] == (d >= s3 ? count_parts_bounded(d - s3, n) : 0));
    }
    const auto total = hilbert_series_theorem(n, bound);
    CHECK(total == terms[0] + terms[1] + terms[2]);
    for (int d = 0; d < s1; ++d) CHECK(total[d] == 0);
  }
}

TEST_CASE("theorem series examples") {
  const auto s4 = hilbert_series_theorem(4, 7);
  CHECK(s4[3] == 1);
  CHECK(s4[4] == 2);
  CHECK(s4[5] == 3);
  CHECK(s4[6] == 5);
  CHECK(s4[7] == 7);
  CHECK(hilbert_series_theorem(5, 8)[8] == 1);
  CHECK(hilbert_series_theorem(5, 8)[7] == 0);
}

TEST_CASE("case series sum to the theorem series") {
  for (int n = 4; n <= 6; ++n) CHECK(hilbert_series_cases(n, 20) == hilbert_series_theorem(n, 20));
  const auto c4 = case_series(4, 20);
  CHECK(c4[0][11] == 0);
  CHECK(c4[0][12] == 1);
}

TEST_CASE("case series match per-case enumeration") {
  for (int n = 4; n <= 5; ++n) {
    const auto cs = case_series(n, 12);
    for (int d = 0; d <= 12; ++d) {
      const auto counts = count_admissible_by_case(n, d);
      for (int k = 0; k < 4; ++k) {
        INFO("n=" << n << " d=" << d << " case " << k + 1);
        CHECK(cs[static_cast<std::size_t>(k)][d] == static_cast<long>(counts.members[static_cast<std::size_t>(k)].size()));
      }
    }
  }
}

TEST_CASE("series arithmetic") {
  SeriesTable a = SeriesTable::monomial(6, 1, 2), b = SeriesTable::monomial(6, 2, 3);
  const auto p = a * b;
  CHECK(p[3] == 6);
  CHECK(p[4] == 0);
  CHECK((a - a) == SeriesTable(6));
  CHECK(SeriesTable::monomial(3, 5)[5] == 0);
}
