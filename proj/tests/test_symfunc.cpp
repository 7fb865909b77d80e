#include <random>

#include "crl/errors.hpp"
#include "crl/ratfunc.hpp"
#include "crl/sympoly.hpp"
#include "doctest.h"

using namespace crl;

namespace {

using SP = SymPoly<Rat>;
using MP = MultiPoly<Rat>;

MP var(int n, int i) { return MP::variable(n, i); }

SP random_sym(std::mt19937_64& rng, int n, int maxdeg) {
  std::uniform_int_distribution<int> deg(0, maxdeg), c(-5, 5);
  SP f(n);
  for (int k = 0; k < 4; ++k) {
    const auto parts = enumerate_partitions(n, deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    f.add_term(parts[pick(rng)], Rat(c(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("expand and collect") {
  const MP e = expand(SP::monomial(Partition{1, 1, 0, 0}));
  MP expect(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) expect += var(4, i) * var(4, j);
  CHECK(e == expect);
  CHECK(collect(var(4, 0) + var(4, 1) + var(4, 2) + var(4, 3)) == SP::monomial(Partition{1, 0, 0, 0}));
  CHECK_THROWS_AS(collect(var(4, 0) - var(4, 1)), NotSymmetric);
  CHECK_THROWS_AS(collect(var(2, 0)), NotSymmetric);
}

TEST_CASE("multiply") {
  const SP p1 = SP::monomial(Partition{1, 0, 0, 0});
  CHECK(p1 * p1 == SP::monomial(Partition{2, 0, 0, 0}) + SP::monomial(Partition{1, 1, 0, 0}, Rat(2)));
  CHECK(p1 * SP::constant(4, Rat(1)) == p1);
  const SP e2 = elementary<Rat>(2, 4);
  CHECK(e2 * e2 == collect(expand(e2) * expand(e2)));
}

TEST_CASE("multiplication properties") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 25; ++it) {
    const SP f = random_sym(rng, 4, 3), g = random_sym(rng, 4, 3), h = random_sym(rng, 4, 2);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == collect(expand(f) * expand(g)));
    const std::vector<Rat> pt{Rat(2), Rat(-1), Rat(mpz_class(1), mpz_class(3)), Rat(5)};
    CHECK(evaluate(f * g, pt) == evaluate(f, pt) * evaluate(g, pt));
    for (const auto& pat : {Pattern::double_diagonal(), Pattern::t_diagonal(Rat(2)), Pattern::shifted()})
      CHECK(substitute_pattern(f * g, pat) == substitute_pattern(f, pat) * substitute_pattern(g, pat));
    CHECK(collect(expand(f)) == f);
  }
}

TEST_CASE("elementary basis") {
  CHECK(elementary<Rat>(2, 4) == SP::monomial(Partition{1, 1, 0, 0}));
  const auto a = to_elementary_basis(SP::monomial(Partition{2, 0, 0, 0}));
  EMonomials<Rat> expect{{{2, 0, 0, 0}, Rat(1)}, {{0, 1, 0, 0}, Rat(-2)}};
  CHECK(a == expect);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 20; ++it) {
    const SP f = random_sym(rng, 4, 8);
    CHECK(from_elementary_basis(to_elementary_basis(f), 4) == f);
  }
}

TEST_CASE("substitution patterns") {
  const SP p1 = SP::monomial(Partition{1, 0, 0, 0});
  CHECK(substitute_pattern(p1, Pattern::double_diagonal()) == MP::variable(2, 0) * Rat(2) + MP::variable(2, 1) * Rat(2));
  const SP e1 = elementary<Rat>(1, 6);
  MP expect = MP::variable(4, 0) * Rat(3) + MP::variable(4, 1) * Rat(3) + MP::variable(4, 2) + MP::variable(4, 3);
  CHECK(substitute_pattern(e1, Pattern::t_diagonal(Rat(2))) == expect);
  MP d = MP::constant(4, Rat(1));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) d = d * (var(4, i) - var(4, j)) * (var(4, i) - var(4, j));
  CHECK(substitute_pattern(symmetrize(d), Pattern::double_diagonal()).is_zero());
  CHECK(substitute_pattern(symmetrize(d), Pattern::pfold(2)).is_zero());
  CHECK_THROWS_AS(substitute_pattern(SP::constant(3, Rat(1)), Pattern::double_diagonal()), BadPattern);
  CHECK_THROWS_AS(substitute_pattern(SP::constant(3, Rat(1)), Pattern::pfold(4)), BadPattern);
  // shifted pattern: m_1 -> 2u + 2v + 1
  MP s = MP::variable(2, 0) * Rat(2) + MP::variable(2, 1) * Rat(2) + MP::constant(2, Rat(1));
  CHECK(substitute_pattern(p1, Pattern::shifted()) == s);
}

TEST_CASE("evaluation") {
  const std::vector<Rat> u0{Rat(8), Rat(4), Rat(2), Rat(1)};
  CHECK(evaluate(elementary<Rat>(1, 4), u0) == Rat(15));
  CHECK(evaluate(SP::constant(4, Rat(1)), u0) == Rat(1));
  // u_lambda for lambda=(1,0,0,0) at t0=2 with q symbolic
  const std::vector<RatFunc> pt{RatFunc(UniPoly::x()) * RatFunc(8), RatFunc(4), RatFunc(2), RatFunc(1)};
  const auto v = evaluate(SymPoly<RatFunc>::monomial(Partition{1, 0, 0, 0}), pt);
  CHECK(v == RatFunc(UniPoly::x()) * RatFunc(8) + RatFunc(7));
}

TEST_CASE("symmetrize") {
  CHECK(symmetrize(var(4, 0)) == SP::monomial(Partition{1, 0, 0, 0}, Rat(6)));
  CHECK(symmetrize(var(4, 0) - var(4, 1)).is_zero());
  // brute-force comparison with the n! sum
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(0, 3), c(-4, 4);
  for (int it = 0; it < 10; ++it) {
    MP g(4);
    for (int k = 0; k < 5; ++k) g.add_term({e(rng), e(rng), e(rng), e(rng)}, Rat(c(rng)));
    MP sum(4);
    std::vector<int> perm{0, 1, 2, 3};
    do {
      for (const auto& [ex, co] : g.terms()) {
        Exponent pe(4);
        for (int i = 0; i < 4; ++i) pe[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = ex[static_cast<std::size_t>(i)];
        sum.add_term(pe, co);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(symmetrize(g) == collect(sum));
  }
  MP q = (var(4, 0) - var(4, 3)) * (var(4, 1) - var(4, 3)) * (var(4, 2) - var(4, 3));
  const SP Q = symmetrize(q);
  CHECK(Q.degree() == 3);
  CHECK_FALSE(Q.is_zero());
  CHECK(substitute_pattern(Q, Pattern::double_diagonal()).is_zero());
}

TEST_CASE("linear division") {
  const MP a = var(3, 0) - var(3, 1) * Rat(2);
  const MP g = a * (var(3, 1) * var(3, 2) + var(3, 0) * var(3, 0) + MP::constant(3, Rat(3)));
  CHECK(divide_linear(g, 0, 1, Rat(2)) * Rat(1) == var(3, 1) * var(3, 2) + var(3, 0) * var(3, 0) + MP::constant(3, Rat(3)));
  CHECK_THROWS_AS(divide_linear(g + MP::constant(3, Rat(1)), 0, 1, Rat(2)), NonExactDivision);
  MP vd = MP::constant(3, Rat(1));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) vd = vd * (var(3, i) - var(3, j));
  const MP h = var(3, 0) * var(3, 1) + MP::constant(3, Rat(5));
  CHECK(divide_vandermonde(vd * h) == h);
}
