#include "crl/series.hpp"

#include <sstream>
#include <stdexcept>

namespace crl {

SeriesTable SeriesTable::monomial(int bound, int exponent, long c) {
  SeriesTable s(bound);
  if (exponent >= 0 && exponent <= bound) s.at(exponent) = c;
  return s;
}

SeriesTable& SeriesTable::operator+=(const SeriesTable& o) {
  if (o.bound != bound) throw std::invalid_argument("series bounds differ");
  for (int d = 0; d <= bound; ++d) at(d) += o[d];
  return *this;
}

SeriesTable& SeriesTable::operator-=(const SeriesTable& o) {
  if (o.bound != bound) throw std::invalid_argument("series bounds differ");
  for (int d = 0; d <= bound; ++d) at(d) -= o[d];
  return *this;
}

SeriesTable operator*(const SeriesTable& a, const SeriesTable& b) {
  SeriesTable r(std::min(a.bound, b.bound));
  for (int i = 0; i <= r.bound; ++i)
    if (a[i])
      for (int j = 0; i + j <= r.bound; ++j) r.at(i + j) += a[i] * b[j];
  return r;
}

SeriesTable& SeriesTable::divide_qpoch(int k) {
  for (int j = 1; j <= k; ++j)
    for (int d = j; d <= bound; ++d) at(d) += at(d - j);
  return *this;
}

std::string SeriesTable::str() const {
  std::ostringstream os;
  os << '[';
  for (int d = 0; d <= bound; ++d) os << (d ? "," : "") << coeffs[static_cast<std::size_t>(d)];
  os << ']';
  return os.str();
}

std::array<SeriesTable, 3> hilbert_series_terms(int n, int bound) {
  if (n < 4) throw std::invalid_argument("the series needs n >= 4");
  SeriesTable a = SeriesTable::monomial(bound, (n - 1) * (n - 3));
  a.divide_qpoch(1).divide_qpoch(n - 3);
  SeriesTable b = SeriesTable::monomial(bound, (n - 2) * (n - 1));
  b.divide_qpoch(1).divide_qpoch(n - 2);
  SeriesTable c = SeriesTable::monomial(bound, n * (n - 1));
  c.divide_qpoch(n);
  return {a, b, c};
}

SeriesTable hilbert_series_theorem(int n, int bound) {
  auto t = hilbert_series_terms(n, bound);
  return t[0] + t[1] + t[2];
}

std::array<SeriesTable, 4> case_series(int n, int bound) {
  if (n < 4) throw std::invalid_argument("the series needs n >= 4");
  auto q = [bound](int e) { return SeriesTable::monomial(bound, e); };
  SeriesTable one = q(0);

  SeriesTable c1 = q(n * (n - 1));
  c1.divide_qpoch(n);

  SeriesTable s2(bound);
  for (int i = 0; i <= n - 3; ++i) s2 += q(3 * i) * (one - q(n - 2 - i)) * (one - q(n - 1 - i));
  SeriesTable c2 = q((n - 1) * (n - 3)) * s2;
  c2.divide_qpoch(n);

  SeriesTable s3(bound);
  for (int i = 0; i <= n - 2; ++i) s3 += q(3 * i) * (one - q(n - 1 - i));
  SeriesTable c3 = q((n - 2) * (n - 2)) * s3;
  c3.divide_qpoch(n);
  SeriesTable c4 = q((n - 2) * (n - 2) + 1) * s3;
  c4.divide_qpoch(n);
  return {c1, c2, c3, c4};
}

SeriesTable hilbert_series_cases(int n, int bound) {
  auto c = case_series(n, bound);
  return c[0] + c[1] + c[2] + c[3];
}

}  // namespace crl
