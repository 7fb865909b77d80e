#include "crl/linalg.hpp"

#include <algorithm>
#include <string>

namespace crl {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

}  // namespace

std::optional<int> rank_mod_p(const Matrix<Rat>& m, std::uint64_t p) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(static_cast<std::size_t>(rows), std::vector<std::uint64_t>(static_cast<std::size_t>(cols)));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (!reduce_mod(m(r, c), p, a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])) return std::nullopt;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(piv)]);
    auto& pr = a[static_cast<std::size_t>(rank)];
    const std::uint64_t inv = powmod(pr[static_cast<std::size_t>(c)], p - 2, p);
    for (int k = c; k < cols; ++k) pr[static_cast<std::size_t>(k)] = mulmod(pr[static_cast<std::size_t>(k)], inv, p);
    for (int r = rank + 1; r < rows; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      const std::uint64_t f = row[static_cast<std::size_t>(c)];
      if (!f) continue;
      for (int k = c; k < cols; ++k)
        row[static_cast<std::size_t>(k)] = (row[static_cast<std::size_t>(k)] + p - mulmod(f, pr[static_cast<std::size_t>(k)], p)) % p;
    }
    ++rank;
  }
  return rank;
}

int rank_bareiss(const Matrix<Rat>& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(rows), std::vector<mpz_class>(static_cast<std::size_t>(cols)));
  for (int r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (int c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).value().get_den_mpz_t());
    for (int c = 0; c < cols; ++c) {
      const auto& q = m(r, c).value();
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = q.get_num() * (l / q.get_den());
    }
  }
  mpz_class prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (sgn(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(piv)]);
    const auto& pr = a[static_cast<std::size_t>(rank)];
    const mpz_class pv = pr[static_cast<std::size_t>(c)];
    for (int r = rank + 1; r < rows; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      const mpz_class f = row[static_cast<std::size_t>(c)];
      for (int k = c + 1; k < cols; ++k) {
        mpz_class& x = row[static_cast<std::size_t>(k)];
        x = pv * x - f * pr[static_cast<std::size_t>(k)];
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      row[static_cast<std::size_t>(c)] = 0;
    }
    prev = pv;
    ++rank;
  }
  return rank;
}

int checked_rank(const Matrix<Rat>& m, std::optional<std::uint64_t> prime) {
  if (!prime) return rank_bareiss(m);
  const auto mod = rank_mod_p(m, *prime);
  if (mod && *mod == std::min(m.rows(), m.cols())) return *mod;
  const int exact = rank_bareiss(m);
  if (mod && *mod != exact)
    throw RankMismatch("rank mod " + std::to_string(*prime) + " is " + std::to_string(*mod) + " but the rational rank is " + std::to_string(exact));
  return exact;
}

}  // namespace crl
