#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "crl/errors.hpp"
#include "crl/rat.hpp"

namespace crl {

/// Dense row-major matrix over a field K.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), K(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& operator()(int r, int c) { return a_[idx(r, c)]; }
  const K& operator()(int r, int c) const { return a_[idx(r, c)]; }

  void swap_rows(int r, int s) {
    if (r == s) return;
    for (int c = 0; c < cols_; ++c) std::swap(a_[idx(r, c)], a_[idx(s, c)]);
  }
  std::vector<K> row(int r) const {
    return std::vector<K>(a_.begin() + static_cast<long>(idx(r, 0)), a_.begin() + static_cast<long>(idx(r, 0) + static_cast<std::size_t>(cols_)));
  }
  void append_row(const std::vector<K>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(v.size());
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
  }
  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  int rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

template <class K>
struct Echelon {
  Matrix<K> m;              ///< reduced row echelon form
  std::vector<int> pivots;  ///< pivot column of each nonzero row
  int rank() const { return static_cast<int>(pivots.size()); }
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <class K>
Echelon<K> rref(Matrix<K> m) {
  Echelon<K> out;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int s = r; s < m.rows(); ++s)
      if (!is_zero(m(s, c))) {
        piv = s;
        break;
      }
    if (piv < 0) continue;
    m.swap_rows(r, piv);
    const K inv = K(1) / m(r, c);
    for (int k = c; k < m.cols(); ++k)
      if (!is_zero(m(r, k))) m(r, k) *= inv;
    std::vector<int> nz;
    for (int k = c + 1; k < m.cols(); ++k)
      if (!is_zero(m(r, k))) nz.push_back(k);
    for (int s = 0; s < m.rows(); ++s) {
      if (s == r || is_zero(m(s, c))) continue;
      const K f = m(s, c);
      m(s, c) = K(0);
      for (int k : nz) m(s, k) -= f * m(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

template <class K>
int rank(const Matrix<K>& m) {
  return rref(m).rank();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <class K>
std::vector<std::vector<K>> nullspace(const Matrix<K>& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<K>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<K> x(static_cast<std::size_t>(m.cols()), K(0));
    x[static_cast<std::size_t>(f)] = K(1);
    for (int r = 0; r < e.rank(); ++r) x[static_cast<std::size_t>(e.pivots[static_cast<std::size_t>(r)])] = K(0) - e.m(r, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Some x with a x = b, or nullopt when inconsistent.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& a, const std::vector<K>& b) {
  Matrix<K> aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[static_cast<std::size_t>(r)];
  }
  const auto e = rref(std::move(aug));
  std::vector<K> x(static_cast<std::size_t>(a.cols()), K(0));
  for (int r = 0; r < e.rank(); ++r) {
    const int c = e.pivots[static_cast<std::size_t>(r)];
    if (c == a.cols()) return std::nullopt;
    x[static_cast<std::size_t>(c)] = e.m(r, a.cols());
  }
  return x;
}

/// Unique solution of a square system; throws SingularSystem.
template <class K>
std::vector<K> solve_unique(const Matrix<K>& a, const std::vector<K>& b) {
  if (a.rows() != a.cols()) throw SingularSystem("system is not square");
  auto x = solve(a, b);
  if (!x || rank(a) != a.cols()) throw SingularSystem("singular linear system");
  return *x;
}

/// Rank over Z/p. Returns nullopt when p divides a denominator.
std::optional<int> rank_mod_p(const Matrix<Rat>& m, std::uint64_t p);

/// Exact rank over Q by fraction-free (Bareiss) elimination on the matrix
/// with each row scaled to integers.
int rank_bareiss(const Matrix<Rat>& m);

/// Default prime for the modular screen (> 2^30).
inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

/// Rank over Q. With a prime, the modular rank is computed first; a full
/// modular rank is accepted, otherwise the rational rank is computed and a
/// disagreement raises RankMismatch.
int checked_rank(const Matrix<Rat>& m, std::optional<std::uint64_t> prime);

}  // namespace crl
