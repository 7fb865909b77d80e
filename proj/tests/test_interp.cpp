#include <algorithm>
#include <random>

#include "crl/errors.hpp"
#include "crl/interp.hpp"
#include "crl/jack.hpp"
#include "crl/linalg.hpp"
#include "doctest.h"

using namespace crl;

namespace {

const Rat kHalf(mpz_class(-1), mpz_class(2));
const RatFunc kTheta = RatFunc::x();

SymPoly<RatFunc> lift(const SymPoly<Rat>& f) {
  return map_coeffs<RatFunc>(f, [](const Rat& r) { return RatFunc(r); });
}

std::vector<Partition> up_to(int n, int d) {
  std::vector<Partition> out;
  for (int w = 0; w <= d; ++w)
    for (const auto& p : enumerate_partitions(n, w)) out.push_back(p);
  return out;
}

SymPoly<RatFunc> top_component(const SymPoly<RatFunc>& f) { return f.component(f.degree()); }

// random homogeneous symmetric polynomial with small integer coefficients
SymPoly<RatFunc> random_form(std::mt19937& rng, int n, int d) {
  std::uniform_int_distribution<int> coef(-3, 3);
  SymPoly<RatFunc> f(n);
  for (const auto& l : enumerate_partitions(n, d)) f.add_term(l, RatFunc(coef(rng)));
  return f;
}

// random inhomogeneous symmetric polynomial with coefficients in Z[theta]
MultiPoly<UniPoly> random_symmetric(std::mt19937& rng, int n, int maxdeg) {
  std::uniform_int_distribution<int> coef(-4, 4);
  SymPoly<UniPoly> f(n);
  for (int d = 0; d <= maxdeg; ++d)
    for (const auto& l : enumerate_partitions(n, d)) f.add_term(l, UniPoly(std::vector<Rat>{Rat(coef(rng)), Rat(coef(rng))}));
  return expand(f);
}

}  // namespace

TEST_CASE("rho and shifted points") {
  const auto r = rho(4);
  CHECK(r[0] == UniPoly::monomial(Rat(3), 1));
  CHECK(r[3].is_zero());
  CHECK(rho_at(4, kHalf) == std::vector<Rat>{Rat(mpz_class(-3), mpz_class(2)), Rat(-1), kHalf, Rat(0)});
  const auto p = shifted_point(Partition{2, 1}, 3);
  CHECK(p[0] == UniPoly(std::vector<Rat>{Rat(2), Rat(2)}));
  CHECK(p[2].is_zero());
}

TEST_CASE("interpolation polynomial examples") {
  InterpEngine e(4);
  CHECK(e.interp(Partition{0, 0, 0, 0}).expansion == SymPoly<RatFunc>::constant(4, RatFunc(1)));
  SymPoly<RatFunc> want(4);
  want.add_term(Partition{1, 0, 0, 0}, RatFunc(1));
  want.add_term(Partition{0, 0, 0, 0}, kTheta * RatFunc(-6));
  CHECK(e.interp(Partition{1}).expansion == want);
  CHECK(interp_normalization(Partition{1, 1}) == UniPoly(std::vector<Rat>{Rat(1), Rat(1)}));
  CHECK(interp_normalization(Partition{}) == UniPoly(Rat(1)));
  const auto& p11 = e.interp(Partition{1, 1});
  std::vector<RatFunc> pt;
  for (const auto& c : shifted_point(Partition{1, 1}, 4)) pt.emplace_back(c);
  CHECK(evaluate(p11.expansion, pt) == kTheta + RatFunc(1));
  CHECK_THROWS_AS(e.interp(Partition{1, 1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("engine agrees with the dense solve under permuted rows") {
  std::mt19937 rng(20240611);
  for (int n = 2; n <= 4; ++n) {
    InterpEngine e(n);
    for (const auto& l : up_to(n, 4)) {
      auto rows = up_to(n, l.weight());
      std::shuffle(rows.begin(), rows.end(), rng);
      INFO("n=" << n << " " << l.str());
      CHECK(interp_jack_dense(l, n, rows) == e.interp(l).expansion);
    }
  }
}

TEST_CASE("defining conditions and top components") {
  InterpEngine e(4);
  for (const auto& l : up_to(4, 5)) CHECK(satisfies_interp_conditions(e.interp(l)));
  InterpPoly wrong = e.interp(Partition{2, 1});
  wrong.expansion += SymPoly<RatFunc>::constant(4, RatFunc(1));
  CHECK_FALSE(satisfies_interp_conditions(wrong));
  for (int n = 2; n <= 4; ++n) {
    InterpEngine en(n);
    JackEngine je;
    for (const auto& l : up_to(n, 4)) CHECK(top_component(en.interp(l).expansion) == je.jack(l, n).expansion);
  }
}

TEST_CASE("difference operators") {
  KnopSahi ks(2);
  const auto one = MultiPoly<UniPoly>::constant(2, UniPoly(Rat(1)));
  // n=2 determinant by hand: E_1 = x1 (x1 - x2 - theta)/(x1 - x2) T_1 + x2 (x1 - x2 + theta)/(x1 - x2) T_2
  MultiPoly<UniPoly> want = MultiPoly<UniPoly>::variable(2, 0) + MultiPoly<UniPoly>::variable(2, 1);
  want += MultiPoly<UniPoly>::constant(2, -UniPoly::x());
  CHECK(ks.apply(1, one) == want);
  CHECK(ks.apply(0, want) == want);
  // E_2 = x1 x2 T_1 T_2
  CHECK(ks.apply(2, one) == MultiPoly<UniPoly>::variable(2, 0) * MultiPoly<UniPoly>::variable(2, 1));
  for (int n = 2; n <= 4; ++n) {
    KnopSahi k(n);
    for (int j = 1; j <= n; ++j) {
      const auto ek = k.apply(j, MultiPoly<UniPoly>::constant(n, UniPoly(Rat(1))));
      CHECK(map_coeffs<RatFunc>(collect(ek), [](const UniPoly& u) { return RatFunc(u); }) ==
            k.dehomogenize(lift(elementary<Rat>(j, n))));
    }
  }
  CHECK(knop_sahi_apply(1, one) == want);
}

TEST_CASE("difference operators commute") {
  std::mt19937 rng(7);
  KnopSahi ks(3);
  for (int trial = 0; trial < 4; ++trial) {
    const auto f = random_symmetric(rng, 3, 3);
    for (int a = 1; a <= 3; ++a)
      for (int b = a + 1; b <= 3; ++b) CHECK(ks.apply(a, ks.apply(b, f)) == ks.apply(b, ks.apply(a, f)));
  }
}

TEST_CASE("dehomogenization maps Jack to interpolation polynomials") {
  for (int n = 1; n <= 4; ++n) {
    KnopSahi ks(n);
    InterpEngine e(n);
    JackEngine je;
    CHECK(ks.dehomogenize(SymPoly<RatFunc>::constant(n, RatFunc(1))) == SymPoly<RatFunc>::constant(n, RatFunc(1)));
    for (const auto& l : up_to(n, 4)) {
      INFO("n=" << n << " " << l.str());
      CHECK(ks.dehomogenize(je.jack(l, n).expansion) == e.interp(l).expansion);
    }
  }
}

TEST_CASE("shift relation") {
  std::mt19937 rng(99);
  for (int n = 2; n <= 4; ++n) {
    KnopSahi ks(n);
    const auto e1 = lift(elementary<Rat>(1, n));
    const RatFunc rho_sum = kTheta * RatFunc(n * (n - 1) / 2);
    for (int d = 0; d <= 3; ++d) {
      const auto f = random_form(rng, n, d);
      const auto psi = ks.dehomogenize(f);
      const auto lhs = ks.dehomogenize(e1 * f);
      CHECK(lhs == (e1 - SymPoly<RatFunc>::constant(n, RatFunc(d) + rho_sum)) * psi);
      // without the rho term the two sides differ by exactly |rho| Psi(f)
      CHECK(lhs - (e1 - SymPoly<RatFunc>::constant(n, RatFunc(d))) * psi == psi * (-rho_sum));
    }
  }
}

TEST_CASE("modified interpolation polynomials") {
  InterpEngine e(4);
  CHECK(modified_interp_jack(Partition{3, 0, 0, 0}, 4, e) == e.interp(Partition{3}).expansion);
  CHECK_THROWS_AS(modified_interp_jack(Partition{1, 1, 1, 1}, 4, e), NotAdmissible);
  const auto bar = modified_interp_jack(Partition{2, 2, 2, 0}, 4, e);
  CHECK_NOTHROW(specialize(bar, kHalf));
}

TEST_CASE("zeta facts for the Case A pair") {
  const Partition l{2, 2, 2, 0}, nu{3, 1, 1, 1};
  CHECK(classify(l).companion == nu);
  const int want = 4 / 2 - 2;
  CHECK(multiplicity_at(jack_u0(l, 4), kHalf) == want);
  CHECK(multiplicity_at(jack_u0(nu, 4), kHalf) == want);
  CHECK(multiplicity_at(RatFunc(interp_normalization(nu)), kHalf) > 0);
  // a box with (leg, arm) = (2, 0) always gives the zero
  for (const auto& p : up_to(4, 9)) {
    bool has = false;
    for (const auto& b : box_stats(p).boxes) has |= b.leg == 2 && b.arm == 0;
    if (has) CHECK(multiplicity_at(RatFunc(interp_normalization(p)), kHalf) > 0);
  }
}

TEST_CASE("shifted vanishing") {
  InterpEngine e(4);
  const auto p3 = specialize(modified_interp_jack(Partition{3, 0, 0, 0}, 4, e), kHalf);
  CHECK(vanishes_shifted(p3, Partition{1, 1, 1, 1}));
  CHECK_FALSE(vanishes_shifted(p3, Partition{3, 0, 0, 0}));
  CHECK(vanishes_shifted(SymPoly<Rat>(4), Partition{5, 2}));
  for (int d = 0; d <= 6; ++d)
    for (const auto& l : admissible_partitions(4, d)) {
      INFO(l.str());
      const auto f = specialize(modified_interp_jack(l, 4, e), kHalf);
      CHECK(shifted_vanishing_failures(f, d + 3).empty());
    }
}

TEST_CASE("the shifted pattern kills the basis") {
  InterpEngine e(4);
  for (int d = 3; d <= 6; ++d)
    for (const auto& l : admissible_partitions(4, d)) {
      const auto f = specialize(modified_interp_jack(l, 4, e), kHalf);
      CHECK(substitute_pattern(f, Pattern::shifted()).is_zero());
    }
}

TEST_CASE("Pieri variant") {
  InterpEngine e(4);
  const auto r = pieri_check(Partition{3, 0, 0, 0}, 4, e);
  CHECK(r.residual.is_zero());
  CHECK(r.shift == Rat(0));  // 3 + |rho(-1/2)| = 3 - 3
  for (const auto& [tau, c] : r.coeffs) CHECK((tau == Partition{4, 0, 0, 0} || tau == Partition{3, 1, 0, 0}));
  CHECK(pieri_check(Partition{2, 2, 2, 0}, 4, e).residual.is_zero());
  CHECK_THROWS_AS(pieri_check(Partition{3, 0, 0, 0}, 4, e, false), NoRepresentation);

  // the top-degree part is the homogeneous expansion of e_1 Pbar_lambda
  JackEngine je;
  for (int d = 3; d <= 5; ++d)
    for (const auto& l : admissible_partitions(4, d)) {
      const auto pr = pieri_check(l, 4, e);
      CHECK(pr.residual.is_zero());
      SymPoly<Rat> rhs(4);
      for (const auto& [tau, c] : pr.coeffs) rhs += specialize(modified_jack(tau, 4, je), kHalf) * c;
      CHECK(elementary<Rat>(1, 4) * specialize(modified_jack(l, 4, je), kHalf) == rhs);
    }
}
