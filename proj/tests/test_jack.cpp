#include <map>

#include "crl/errors.hpp"
#include "crl/jack.hpp"
#include "crl/linalg.hpp"
#include "doctest.h"

using namespace crl;

namespace {

RatFunc th() { return RatFunc::x(); }

Partition trimmed(const Partition& l) {
  std::vector<int> p;
  for (int v : l.parts())
    if (v) p.push_back(v);
  return Partition(p);
}

// Gram-Schmidt oracle: orthogonalize the monomial basis against
// <p_rho, p_sigma> = delta z_rho alpha^{l(rho)}, alpha = 1/theta, in d
// variables, then restrict to n variables.
std::map<Partition, SymPoly<RatFunc>> gram_schmidt_jacks(int d, int n) {
  const auto parts = enumerate_partitions(d, d);  // descending lex
  const int k = static_cast<int>(parts.size());
  std::map<Partition, int> index;
  for (int i = 0; i < k; ++i) index[parts[static_cast<std::size_t>(i)]] = i;
  // A(rho, lambda): p_rho = sum A m_lambda
  Matrix<Rat> a(k, k);
  for (int r = 0; r < k; ++r) {
    SymPoly<Rat> p = SymPoly<Rat>::constant(d, Rat(1));
    for (int part : parts[static_cast<std::size_t>(r)].parts()) {
      if (!part) continue;
      std::vector<int> v(static_cast<std::size_t>(d), 0);
      v[0] = part;
      p = p * SymPoly<Rat>::monomial(Partition(v));
    }
    for (const auto& [l, c] : p.terms()) a(r, index.at(l)) = c;
  }
  // B = A^{-1}: m_lambda = sum_rho B(lambda, rho) p_rho
  Matrix<Rat> b(k, k);
  for (int col = 0; col < k; ++col) {
    std::vector<Rat> e(static_cast<std::size_t>(k), Rat(0));
    e[static_cast<std::size_t>(col)] = Rat(1);
    const auto x = solve_unique(a.transpose(), e);
    for (int r = 0; r < k; ++r) b(col, r) = x[static_cast<std::size_t>(r)];
  }
  std::vector<RatFunc> weight(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) {
    const auto& rho = parts[static_cast<std::size_t>(r)];
    std::map<int, int> mult;
    int len = 0;
    for (int v : rho.parts())
      if (v) ++mult[v], ++len;
    mpz_class z = 1;
    for (auto [v, m] : mult)
      for (int i = 1; i <= m; ++i) z *= v * i;
    weight[static_cast<std::size_t>(r)] = RatFunc(Rat(z, 1)) / RatFunc(pow(UniPoly::x(), len));
  }
  auto inner = [&](const std::vector<RatFunc>& u, const std::vector<RatFunc>& v) {
    RatFunc s(0);
    for (int r = 0; r < k; ++r) s += u[static_cast<std::size_t>(r)] * v[static_cast<std::size_t>(r)] * weight[static_cast<std::size_t>(r)];
    return s;
  };
  std::vector<std::vector<RatFunc>> done;  // p-basis vectors, ascending lex
  std::map<Partition, SymPoly<RatFunc>> out;
  for (int i = k - 1; i >= 0; --i) {
    std::vector<RatFunc> v(static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r) v[static_cast<std::size_t>(r)] = RatFunc(b(i, r));
    const auto m = v;
    for (const auto& u : done) {
      const RatFunc c = inner(m, u) / inner(u, u);
      for (int r = 0; r < k; ++r) v[static_cast<std::size_t>(r)] -= c * u[static_cast<std::size_t>(r)];
    }
    done.push_back(v);
    // back to the monomial basis, restricted to n variables
    const auto& lam = parts[static_cast<std::size_t>(i)];
    if (trimmed(lam).length() > n) continue;
    SymPoly<RatFunc> f(n);
    for (int col = 0; col < k; ++col) {
      RatFunc c(0);
      for (int r = 0; r < k; ++r) c += v[static_cast<std::size_t>(r)] * RatFunc(a(r, col));
      const auto& mu = parts[static_cast<std::size_t>(col)];
      if (trimmed(mu).length() <= n) f.add_term(trimmed(mu).padded(n), c);
    }
    out.emplace(trimmed(lam).padded(n), f);
  }
  return out;
}

}  // namespace

TEST_CASE("small Jack polynomials") {
  CHECK(jack(Partition{1, 0, 0, 0}, 4).expansion == SymPoly<RatFunc>::monomial(Partition{1, 0, 0, 0}));
  CHECK(jack(Partition{1, 1, 0, 0}, 4).expansion == SymPoly<RatFunc>::monomial(Partition{1, 1, 0, 0}));
  const auto p2 = jack(Partition{2, 0}, 2).expansion;
  SymPoly<RatFunc> expect = SymPoly<RatFunc>::monomial(Partition{2, 0});
  expect.add_term(Partition{1, 1}, RatFunc(2) * th() / (th() + RatFunc(1)));
  CHECK(p2 == expect);
}

TEST_CASE("operator diagonal is the eigenvalue") {
  for (int n = 2; n <= 5; ++n)
    for (int d = 0; d <= 7; ++d)
      for (const auto& l : enumerate_partitions(n, d)) {
        const auto col = jack_operator_column(l);
        CHECK((col.count(l) ? col.at(l) : UniPoly()) == jack_eigenvalue(l));
        for (const auto& [mu, c] : col) CHECK(dominance(l, mu) != Dominance::Less);
        for (const auto& [mu, c] : col) CHECK(dominance(l, mu) != Dominance::Incomparable);
      }
}

TEST_CASE("Jack polynomials match the Gram-Schmidt oracle") {
  for (int d = 1; d <= 5; ++d)
    for (int n = 2; n <= 4; ++n) {
      const auto oracle = gram_schmidt_jacks(d, n);
      JackEngine engine;
      for (const auto& [lam, expect] : oracle) CHECK_MESSAGE(engine.jack(lam, n).expansion == expect, lam.str());
    }
}

TEST_CASE("eigen-relation, triangularity, columns") {
  JackEngine engine;
  for (int d = 0; d <= 6; ++d)
    for (const auto& l : enumerate_partitions(4, d)) {
      const auto p = engine.jack(l, 4).expansion;
      CHECK(p.coeff(l) == RatFunc(1));
      SymPoly<RatFunc> hp(4);
      for (const auto& [nu, c] : p.terms()) {
        CHECK(dominance(l, nu) != Dominance::Less);
        CHECK(dominance(l, nu) != Dominance::Incomparable);
        for (const auto& [mu, e] : jack_operator_column(nu)) hp.add_term(mu, c * RatFunc(e));
      }
      CHECK(hp == p * RatFunc(jack_eigenvalue(l)));
    }
  for (int k = 0; k <= 4; ++k) {
    auto ek = elementary<RatFunc>(k, 4);
    CHECK(engine.jack(Partition(ek.terms().begin()->first), 4).expansion == ek);
  }
}

TEST_CASE("principal specialization") {
  CHECK(jack_u0(Partition{1, 0, 0, 0}, 4) == RatFunc(4));
  CHECK(jack_u0(Partition{1, 1, 0, 0}, 4) == RatFunc(6));
  const RatFunc t = th();
  CHECK(jack_u0(Partition{2, 0, 0, 0}, 4) == RatFunc(4) * t * (RatFunc(4) * t + RatFunc(1)) / (t * (t + RatFunc(1))));
  JackEngine engine;
  for (int n = 2; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d)
      for (const auto& l : enumerate_partitions(n, d)) {
        const std::vector<RatFunc> ones(static_cast<std::size_t>(n), RatFunc(1));
        CHECK(evaluate(engine.jack(l, n).expansion, ones) == jack_u0(l, n));
      }
}

TEST_CASE("modified Jack polynomials") {
  JackEngine engine;
  CHECK(modified_jack(Partition{3, 0, 0, 0}, 4, engine) == engine.jack(Partition{3, 0, 0, 0}, 4).expansion);
  const Partition l{2, 2, 2, 0}, nu{3, 1, 1, 1};
  const auto pb = modified_jack(l, 4, engine);
  CHECK(pb.coeff(l) == RatFunc(1));
  CHECK(pb.coeff(nu) == RatFunc(0) - jack_u0(l, 4) / jack_u0(nu, 4));
  const auto pc = modified_jack(Partition{4, 3, 2, 0}, 4, engine);
  CHECK(pc.coeff(Partition{4, 3, 2, 0}) == RatFunc(1));
  CHECK_THROWS_AS(modified_jack(Partition{3, 2, 1, 0}, 4, engine), NotAdmissible);

  const Rat half(mpz_class(-1), mpz_class(2));
  for (int d = 0; d <= 6; ++d)
    for (const auto& a : admissible_partitions(4, d)) {
      const auto s = specialize_theta(modified_jack(a, 4, engine), half);
      CHECK_MESSAGE(vanishes_on_double_diagonal(s), a.str());
    }
  CHECK_NOTHROW(specialize_theta(engine.jack(Partition{6, 4, 2, 0}, 4).expansion, half));
  CHECK_FALSE(vanishes_on_double_diagonal(specialize_theta(engine.jack(l, 4).expansion, Rat(1))));
  CHECK(vanishes_on_double_diagonal(SymPoly<Rat>(4)));
  CHECK(specialize_theta(SymPoly<RatFunc>::constant(4, RatFunc(1)), Rat(3)) == SymPoly<Rat>::constant(4, Rat(1)));
}
