#include "crl/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "crl/errors.hpp"

namespace crl {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition with a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  return c;
}

Partition Partition::padded(int n) const {
  std::vector<int> p = parts_;
  if (static_cast<int>(p.size()) > n) {
    for (std::size_t i = static_cast<std::size_t>(n); i < p.size(); ++i)
      if (p[i] != 0) throw std::invalid_argument("cannot trim nonzero parts of " + str());
  }
  p.resize(static_cast<std::size_t>(n), 0);
  return Partition(std::move(p));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

std::vector<Partition> enumerate_partitions(int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("enumerate_partitions needs n >= 1, d >= 0");
  std::vector<Partition> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int, int)> rec = [&](int pos, int remaining, int maxpart) {
    if (pos == n) {
      if (remaining == 0) out.emplace_back(cur);
      return;
    }
    // The remaining positions can hold at most maxpart each.
    if (static_cast<long>(maxpart) * (n - pos) < remaining) return;
    for (int v = std::min(maxpart, remaining); v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, remaining - v, v);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0, d, d);
  return out;
}

std::vector<Partition> enumerate_partitions_up_to(int n, int max_weight) {
  std::vector<Partition> out;
  for (int d = 0; d <= max_weight; ++d) {
    auto level = enumerate_partitions(n, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::Less: return "Less";
    case Dominance::Greater: return "Greater";
    case Dominance::Equal: return "Equal";
    case Dominance::Incomparable: return "Incomparable";
  }
  return "?";
}

Dominance dominance(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw WeightMismatch("dominance between " + lambda.str() + " and " + mu.str() + " of different weight");
  const int len = std::max(lambda.length(), mu.length());
  bool ge = true, le = true;
  int sl = 0, sm = 0;
  for (int i = 1; i <= len; ++i) {
    sl += lambda.at1(i);
    sm += mu.at1(i);
    if (sl < sm) ge = false;
    if (sl > sm) le = false;
  }
  if (ge && le) return Dominance::Equal;
  if (ge) return Dominance::Greater;
  if (le) return Dominance::Less;
  return Dominance::Incomparable;
}

std::vector<int> exponent_vector(const Partition& lambda) {
  std::vector<int> a(static_cast<std::size_t>(lambda.length() ? lambda[0] + 1 : 1), 0);
  for (int p : lambda.parts()) ++a[static_cast<std::size_t>(p)];
  return a;
}

bool is_admissible(const Partition& lambda) {
  const std::vector<int> a = exponent_vector(lambda);
  const int top = static_cast<int>(a.size());
  auto count = [&](int k) { return (k >= 0 && k < top) ? a[static_cast<std::size_t>(k)] : 0; };

  // Quadratic factors e_i^2 and e_j e_{j+1}, each as a requirement vector.
  std::vector<std::vector<int>> factors;
  for (int i = 0; i < top; ++i) {
    if (count(i) >= 2) {
      std::vector<int> need(static_cast<std::size_t>(top) + 1, 0);
      need[static_cast<std::size_t>(i)] = 2;
      factors.push_back(need);
    }
    if (count(i) >= 1 && count(i + 1) >= 1) {
      std::vector<int> need(static_cast<std::size_t>(top) + 1, 0);
      need[static_cast<std::size_t>(i)] = 1;
      need[static_cast<std::size_t>(i) + 1] = 1;
      factors.push_back(need);
    }
  }
  for (std::size_t x = 0; x < factors.size(); ++x) {
    for (std::size_t y = x; y < factors.size(); ++y) {
      bool fits = true;
      for (int k = 0; k <= top && fits; ++k)
        fits = factors[x][static_cast<std::size_t>(k)] + factors[y][static_cast<std::size_t>(k)] <= count(k);
      if (fits) return false;
    }
  }
  for (int i = 0; i + 2 < top; ++i)
    if (count(i) >= 3 && count(i + 2) >= 1) return false;
  return true;
}

std::string CaseTag::str() const {
  switch (kind) {
    case Kind::A: return "A(" + std::to_string(pivot) + ")";
    case Kind::B: return "B(" + std::to_string(pivot) + ")";
    case Kind::C: return "C";
  }
  return "?";
}

namespace {

// lambda_j - lambda_{j+1} >= 2 for every 1 <= j <= n-1 accepted by `which`.
template <class Pred>
bool gaps_at_least_two(const Partition& l, Pred which) {
  for (int j = 1; j < l.length(); ++j)
    if (which(j) && l.at1(j) - l.at1(j + 1) < 2) return false;
  return true;
}

std::optional<int> case_a_pivot(const Partition& l) {
  const int n = l.length();
  for (int i = 1; i + 3 <= n; ++i) {
    const int v = l.at1(i);
    if (!(l.at1(i + 1) == v && l.at1(i + 2) == v && l.at1(i + 3) + 2 == v)) continue;
    if (i >= 2 && l.at1(i - 1) - v < 3) continue;
    if (!gaps_at_least_two(l, [i](int j) { return j <= i - 2 || j >= i + 3; })) continue;
    return i;
  }
  return std::nullopt;
}

std::optional<int> case_b_pivot(const Partition& l) {
  const int n = l.length();
  for (int i = 1; i + 2 <= n; ++i) {
    const int v = l.at1(i);
    if (!(l.at1(i + 1) + 1 == v && l.at1(i + 2) + 2 == v)) continue;
    if (!gaps_at_least_two(l, [i](int j) { return j <= i - 1 || j >= i + 2; })) continue;
    return i;
  }
  return std::nullopt;
}

}  // namespace

CaseTag classify(const Partition& lambda) {
  if (!is_admissible(lambda)) throw NotAdmissible(lambda.str() + " is not admissible");
  CaseTag tag;
  if (auto i = case_a_pivot(lambda)) {
    std::vector<int> nu = lambda.parts();
    const auto k = static_cast<std::size_t>(*i - 1);
    nu[k] += 1;
    nu[k + 1] -= 1;
    nu[k + 2] -= 1;
    nu[k + 3] += 1;
    tag.kind = CaseTag::Kind::A;
    tag.pivot = *i;
    tag.companion = Partition(std::move(nu));
  } else if (auto b = case_b_pivot(lambda)) {
    std::vector<int> nu = lambda.parts();
    const auto k = static_cast<std::size_t>(*b - 1);
    nu[k] -= 1;
    nu[k + 2] += 1;
    tag.kind = CaseTag::Kind::B;
    tag.pivot = *b;
    tag.companion = Partition(std::move(nu));
  }
  return tag;
}

std::vector<int> diagonal_multiset(const Partition& lambda) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(lambda.length()));
  for (int j = 1; j <= lambda.length(); ++j) out.push_back(j + 2 * lambda.at1(j));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> companions_bruteforce(const Partition& lambda) {
  const auto target = diagonal_multiset(lambda);
  std::vector<Partition> out;
  for (const auto& mu : enumerate_partitions(lambda.length(), lambda.weight()))
    if (mu != lambda && diagonal_multiset(mu) == target) out.push_back(mu);
  return out;
}

BoxStats box_stats(const Partition& lambda) {
  BoxStats s;
  const auto conj = lambda.conjugate();
  for (int i = 1; i <= lambda.length(); ++i) {
    s.n_lambda += (i - 1) * lambda.at1(i);
    for (int j = 1; j <= lambda.at1(i); ++j) {
      Box b;
      b.row = i;
      b.col = j;
      b.arm = lambda.at1(i) - j;
      b.leg = conj[static_cast<std::size_t>(j - 1)] - i;
      b.coarm = j - 1;
      b.coleg = i - 1;
      s.boxes.push_back(b);
    }
  }
  return s;
}

int zeta_u0_combinatorial(const Partition& lambda, int n) {
  const BoxStats s = box_stats(lambda);
  int zeros = 0, poles = 0;
  // Patterns only exist for l with 2l - 1 <= total rows and l <= lambda_1.
  const int lmax = std::max(n, lambda.length() ? lambda[0] : 0) + 1;
  for (int l = 1; l <= lmax; ++l) {
    for (const auto& b : s.boxes) {
      if (b.coleg == n - 2 * l && b.coarm == l) ++zeros;
      if (b.leg == 2 * l - 1 && b.arm == l) ++poles;
    }
  }
  return zeros - poles;
}

std::vector<int> counting_cases(const Partition& l) {
  const int n = l.length();
  auto gap = [&](int j) { return l.at1(j) - l.at1(j + 1); };
  std::vector<int> hits;
  // Case 1: every gap at least 2.
  if (gaps_at_least_two(l, [](int) { return true; })) hits.push_back(1);
  // Case 2: a triple lambda_i = lambda_{i+1} = lambda_{i+2}.
  for (int i = 1; i + 2 <= n; ++i) {
    if (!(gap(i) == 0 && gap(i + 1) == 0)) continue;
    if (i >= 2 && gap(i - 1) < 3) continue;
    if (!gaps_at_least_two(l, [i](int j) { return j <= i - 2 || j >= i + 2; })) continue;
    hits.push_back(2);
    break;
  }
  // Case 3: a pair lambda_i = lambda_{i+1}.
  for (int i = 1; i + 1 <= n; ++i) {
    if (gap(i) != 0) continue;
    if (i >= 2 && gap(i - 1) < 1) continue;
    if (!gaps_at_least_two(l, [i](int j) { return j <= i - 2 || j >= i + 1; })) continue;
    hits.push_back(3);
    break;
  }
  // Case 4: a unit step lambda_i = lambda_{i+1} + 1.
  for (int i = 1; i + 1 <= n; ++i) {
    if (gap(i) != 1) continue;
    if (i >= 2 && gap(i - 1) < 0) continue;
    if (!gaps_at_least_two(l, [i](int j) { return j <= i - 2 || j >= i + 1; })) continue;
    hits.push_back(4);
    break;
  }
  return hits;
}

std::array<int, 4> CaseCounts::counts() const {
  return {static_cast<int>(members[0].size()), static_cast<int>(members[1].size()),
          static_cast<int>(members[2].size()), static_cast<int>(members[3].size())};
}

CaseCounts count_admissible_by_case(int n, int d) {
  CaseCounts c;
  for (const auto& l : enumerate_partitions(n, d)) {
    if (!is_admissible(l)) continue;
    c.admissible.push_back(l);
    const auto hits = counting_cases(l);
    if (hits.empty()) {
      c.unclassified.push_back(l);
    } else {
      if (hits.size() > 1) c.multiply_matched.push_back(l);
      c.members[static_cast<std::size_t>(hits.front() - 1)].push_back(l);
    }
  }
  return c;
}

std::vector<Partition> admissible_partitions(int n, int d) {
  std::vector<Partition> out;
  for (const auto& l : enumerate_partitions(n, d))
    if (is_admissible(l)) out.push_back(l);
  return out;
}

}  // namespace crl
