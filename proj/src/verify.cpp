#include "crl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "crl/errors.hpp"
#include "crl/ideals.hpp"
#include "crl/interp.hpp"
#include "crl/jack.hpp"
#include "crl/linalg.hpp"
#include "crl/macdonald.hpp"
#include "crl/partitions.hpp"
#include "crl/series.hpp"

namespace crl {

namespace {

const Rat kHalf(mpz_class(-1), mpz_class(2));

// Collects item lines; the criterion passes iff every item did.
class Check {
 public:
  Check(int id, std::string label, const VerifyOptions& opt) : opt_(opt) {
    r_.id = id;
    r_.label = std::move(label);
  }

  bool wants(int n) const { return !opt_.n || *opt_.n == n; }
  std::vector<int> ns(std::initializer_list<int> all) const {
    std::vector<int> out;
    for (int n : all)
      if (wants(n)) out.push_back(n);
    return out;
  }

  void item(bool ok, const std::string& what) {
    r_.details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    any_ = true;
    all_ok_ = all_ok_ && ok;
  }

  CriterionResult done() {
    r_.status = !any_ ? CriterionResult::Status::Skip
                      : all_ok_ ? CriterionResult::Status::Pass : CriterionResult::Status::Fail;
    return std::move(r_);
  }

  const VerifyOptions& opt() const { return opt_; }
  ComputeOptions compute() const { return {opt_.prime}; }

 private:
  const VerifyOptions& opt_;
  CriterionResult r_;
  bool any_ = false, all_ok_ = true;
};

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

std::vector<Partition> up_to(int n, int d) {
  std::vector<Partition> out;
  for (int w = 0; w <= d; ++w)
    for (auto& p : enumerate_partitions(n, w)) out.push_back(std::move(p));
  return out;
}

// Rank of a family of polynomials written in the monomial basis.
int family_rank(const std::vector<SymPoly<Rat>>& fam, const std::vector<Partition>& cols) {
  if (fam.empty()) return 0;
  Matrix<Rat> m(0, static_cast<int>(cols.size()));
  for (const auto& f : fam) {
    std::vector<Rat> row;
    for (const auto& c : cols) row.push_back(f.coeff(c));
    m.append_row(row);
  }
  return rank(m);
}

// 1. dim I_{n,d} = series coefficient = admissible count.
CriterionResult hilbert(const VerifyOptions& o) {
  Check c(1, "Hilbert series of I_n: kernel dimension = series = admissible count", o);
  for (int n : c.ns({4, 5})) {
    const int bound = n == 4 ? 14 : 16;
    const auto s = hilbert_series_theorem(n, bound);
    std::vector<int> bad;
    for (int d = 0; d <= bound; ++d) {
      const long dim = ideal_dimension(IdealSpec::double_diagonal(n), d, c.compute());
      const long adm = static_cast<long>(admissible_partitions(n, d).size());
      if (dim != s[d] || dim != adm) bad.push_back(d);
    }
    c.item(bad.empty(), "n=" + std::to_string(n) + " d<=" + std::to_string(bound) + " series " + s.str() +
                            (bad.empty() ? "" : " mismatch at d=" + join(bad)));
  }
  return c.done();
}

// 2. case generating functions.
CriterionResult cases(const VerifyOptions& o) {
  Check c(2, "counting cases: four case series sum to the theorem series", o);
  for (int n : c.ns({4, 5, 6})) {
    const bool ok = hilbert_series_cases(n, 20) == hilbert_series_theorem(n, 20);
    c.item(ok, "n=" + std::to_string(n) + " case sum = theorem to degree 20");
  }
  if (c.wants(4)) {
    const auto cs = case_series(4, 12);
    std::vector<std::string> bad;
    for (int d = 0; d <= 12; ++d) {
      const auto counts = count_admissible_by_case(4, d);
      if (!counts.unclassified.empty() || !counts.multiply_matched.empty()) bad.push_back("d=" + std::to_string(d) + " overlap");
      for (std::size_t k = 0; k < 4; ++k)
        if (cs[k][d] != static_cast<long>(counts.members[k].size()))
          bad.push_back("d=" + std::to_string(d) + " case " + std::to_string(k + 1));
    }
    c.item(bad.empty(), "n=4 d<=12 per-case enumeration = per-case series" + (bad.empty() ? "" : " " + join(bad)));
  }
  return c.done();
}

// 3. modified Jack polynomials at theta = -1/2 form a basis of I_4.
CriterionResult jack_basis(const VerifyOptions& o) {
  Check c(3, "basis of I_n: modified Jack polynomials at theta=-1/2", o);
  if (!c.wants(4)) return c.done();
  JackEngine engine;
  const auto spec = IdealSpec::double_diagonal(4);
  for (int d = 0; d <= 8; ++d) {
    std::vector<SymPoly<Rat>> fam;
    std::vector<std::string> bad;
    for (const auto& l : admissible_partitions(4, d)) {
      try {
        auto f = specialize_theta(modified_jack(l, 4, engine), kHalf);
        if (!vanishes_on_double_diagonal(f)) bad.push_back(l.str() + " does not vanish");
        fam.push_back(std::move(f));
      } catch (const PoleAtPoint&) {
        bad.push_back(l.str() + " has a pole");
      }
    }
    const int dim = ideal_dimension(spec, d, c.compute());
    const int r = family_rank(fam, enumerate_partitions(4, d));
    if (r != static_cast<int>(fam.size())) bad.push_back("dependent family");
    if (static_cast<int>(fam.size()) != dim) bad.push_back("count differs from dim");
    c.item(bad.empty(), "n=4 d=" + std::to_string(d) + ": " + std::to_string(fam.size()) + " polynomials, dim " +
                            std::to_string(dim) + (bad.empty() ? "" : " " + join(bad)));
  }
  return c.done();
}

// 4. modified Macdonald polynomials at q = t0^-2 form a basis of J_4.
CriterionResult mac_basis(const VerifyOptions& o) {
  Check c(4, "basis of J_n: modified Macdonald polynomials at q=t0^-2", o);
  if (!c.wants(4)) return c.done();
  for (const Rat& t0 : o.t0s) {
    MacdonaldEngine engine(t0);
    const Rat q0 = critical_q(t0);
    const auto spec = IdealSpec::t_diagonal(4, t0);
    std::vector<std::string> bad;
    int unmodified = 0, unmodified_fail = 0;
    for (int d = 0; d <= 8; ++d) {
      std::vector<SymPoly<Rat>> fam;
      for (const auto& l : admissible_partitions(4, d)) {
        try {
          auto f = specialize_q(modified_macdonald(l, 4, engine), q0);
          if (!vanishes_on_t_diagonals(f, t0)) bad.push_back(l.str() + " does not vanish");
          fam.push_back(std::move(f));
        } catch (const PoleAtPoint&) {
          bad.push_back(l.str() + " has a pole");
        }
        if (classify(l).kind != CaseTag::Kind::C) {
          ++unmodified;
          bool vanishes = false;
          try {
            vanishes = vanishes_on_t_diagonals(specialize_q(engine.macdonald(l, 4).expansion, q0), t0);
          } catch (const PoleAtPoint&) {
          }
          if (!vanishes) ++unmodified_fail;
          else bad.push_back("unmodified " + l.str() + " vanishes");
        }
      }
      const int dim = ideal_dimension(spec, d, c.compute());
      if (family_rank(fam, enumerate_partitions(4, d)) != static_cast<int>(fam.size()) ||
          static_cast<int>(fam.size()) != dim)
        bad.push_back("d=" + std::to_string(d) + " not a basis");
    }
    c.item(bad.empty(), "t0=" + t0.str() + " d<=8 basis of J_4; unmodified Case A/B fail " +
                            std::to_string(unmodified_fail) + "/" + std::to_string(unmodified) +
                            (bad.empty() ? "" : " " + join(bad)));
  }
  return c.done();
}

// 5. zeta multiplicities.
CriterionResult zeta(const VerifyOptions& o) {
  Check c(5, "zeta multiplicity: box scan = product scan; thick families", o);
  for (int n : c.ns({4, 5})) {
    int count = 0;
    std::vector<std::string> bad;
    for (const auto& l : up_to(n, 8)) {
      ++count;
      if (zeta_u0(l, n) != zeta_u0_combinatorial(l, n)) bad.push_back(l.str());
    }
    c.item(bad.empty(), "n=" + std::to_string(n) + " all " + std::to_string(count) + " partitions |lambda|<=8" +
                            (bad.empty() ? "" : " differ: " + join(bad)));

    // thick eta with gaps 8, offsets d_i in [0, 2]
    const int gap = 8, N = 3;
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    int thick = 0, thick_bad = 0;
    std::set<Partition> doubles;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == d.size()) {
        std::vector<int> mu(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) mu[static_cast<std::size_t>(k)] = gap * (n - 1 - k) + d[static_cast<std::size_t>(k)];
        const Partition p(mu);
        ++thick;
        if (zeta_u0(p, n) != n / 2 || zeta_u0_combinatorial(p, n) != n / 2) ++thick_bad;
        // double rows: eta in pi_{n-2}, mu = (e1, e1, e2, e2, e3, ...)
        std::vector<int> eta(static_cast<std::size_t>(n - 2));
        for (int k = 0; k < n - 2; ++k) eta[static_cast<std::size_t>(k)] = gap * (n - 3 - k) + d[static_cast<std::size_t>(k)];
        std::vector<int> nu{eta[0], eta[0], eta[1], eta[1]};
        for (int k = 2; k < n - 2; ++k) nu.push_back(eta[static_cast<std::size_t>(k)]);
        doubles.insert(Partition(nu));
        return;
      }
      for (int v = 0; v < N; ++v) {
        d[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    int dbl_bad = 0;
    for (const auto& q : doubles)
      if (zeta_u0(q, n) != n / 2 - 2 || zeta_u0_combinatorial(q, n) != n / 2 - 2) ++dbl_bad;
    const int dbl = static_cast<int>(doubles.size());
    c.item(thick_bad == 0, "n=" + std::to_string(n) + " thick family: zeta = [n/2] on " +
                               std::to_string(thick - thick_bad) + "/" + std::to_string(thick));
    c.item(dbl_bad == 0, "n=" + std::to_string(n) + " double-row family: zeta = [n/2]-2 on " +
                             std::to_string(dbl - dbl_bad) + "/" + std::to_string(dbl));
  }
  return c.done();
}

// 6. the single pole at q = t0^-2.
CriterionResult poles(const VerifyOptions& o) {
  Check c(6, "pole structure at q=t0^-2", o);
  if (!c.wants(4)) return c.done();
  for (const Rat& t0 : o.t0s) {
    MacdonaldEngine e(t0);
    const Rat q0 = critical_q(t0);
    const Partition l{4, 3, 2, 0};
    const int plain = min_multiplicity(e.macdonald(l, 4).expansion, q0);
    const int mod = min_multiplicity(modified_macdonald(l, 4, e), q0);
    c.item(plain == -1 && mod >= 0, "t0=" + t0.str() + " (4,3,2,0): min multiplicity " + std::to_string(plain) +
                                        ", modified " + std::to_string(mod));
    std::vector<std::string> poles;
    int pairs = 0;
    for (int d = 0; d <= 8; ++d)
      for (const auto& a : admissible_partitions(4, d)) {
        const auto tag = classify(a);
        if (tag.kind != CaseTag::Kind::A) continue;
        ++pairs;
        if (min_multiplicity(e.macdonald(a, 4).expansion, q0) < 0) poles.push_back(a.str());
        if (min_multiplicity(e.macdonald(*tag.companion, 4).expansion, q0) < 0) poles.push_back(tag.companion->str());
      }
    c.item(poles.empty(), "t0=" + t0.str() + " Case A pairs with |lambda|<=8 pole-free (" + std::to_string(pairs) +
                              " pairs)" + (poles.empty() ? "" : " poles: " + join(poles)));
  }
  return c.done();
}

// 7. eigenvectors and the Jordan block.
CriterionResult structure(const VerifyOptions& o) {
  Check c(7, "operator structure at q=t0^-2: eigenvectors and a Jordan block", o);
  if (!c.wants(4)) return c.done();
  for (const Rat& t0 : o.t0s) {
    MacdonaldEngine e(t0);
    try {
      const auto a = operator_structure(Partition{2, 2, 2, 0}, 4, e);
      const auto b = operator_structure(Partition{3, 0, 0, 0}, 4, e);
      const auto j = operator_structure(Partition{4, 3, 2, 0}, 4, e);
      const bool ok = a.kind == OperatorStructure::Kind::Eigen && b.kind == OperatorStructure::Kind::Eigen &&
                      j.kind == OperatorStructure::Kind::JordanBlock && j.partner == Partition{3, 3, 3, 0};
      c.item(ok, "t0=" + t0.str() + " (2,2,2,0) " + a.str() + "; (3,0,0,0) " + b.str() + "; (4,3,2,0) " + j.str());
    } catch (const Error& ex) {
      c.item(false, "t0=" + t0.str() + " " + ex.what());
    }
  }
  return c.done();
}

// 8. exactly two companion patterns for Case A.
CriterionResult companions(const VerifyOptions& o) {
  Check c(8, "Case A companions: exactly the two predicted partitions", o);
  for (int n : c.ns({4, 5, 6})) {
    int count = 0;
    std::vector<std::string> bad;
    // n = 6 has no admissible partitions below degree 15; keep going until
    // some Case A partition has actually been checked
    int top = 0;
    for (int d = 0; d <= 24 && (d <= 12 || count == 0); ++d)
      for (const auto& l : admissible_partitions(n, d)) {
        const auto tag = classify(l);
        if (tag.kind != CaseTag::Kind::A) continue;
        top = d;
        ++count;
        const int i = tag.pivot - 1;
        const int v = l[i];
        std::vector<int> p1 = l.parts(), p2 = l.parts();
        const auto u = static_cast<std::size_t>(i);
        p1[u] = v + 1, p1[u + 1] = v - 1, p1[u + 2] = v - 1, p1[u + 3] = v - 1;
        p2[u] = v + 1, p2[u + 1] = v, p2[u + 2] = v - 1, p2[u + 3] = v - 2;
        const auto found = companions_bruteforce(l);
        if (std::set<Partition>(found.begin(), found.end()) != std::set<Partition>{Partition(p1), Partition(p2)})
          bad.push_back(l.str());
      }
    c.item(bad.empty() && count > 0, "n=" + std::to_string(n) + " |lambda|<=" + std::to_string(std::max(12, top)) +
                                         ": " + std::to_string(count) + " Case A partitions" +
                                         (bad.empty() ? "" : " wrong: " + join(bad)));
  }
  return c.done();
}

// 9. evaluation symmetry.
CriterionResult symmetry(const VerifyOptions& o) {
  Check c(9, "evaluation symmetry u_mu(P_lambda)/u_0(P_lambda) = u_lambda(P_mu)/u_0(P_mu)", o);
  if (!c.wants(4)) return c.done();
  MacdonaldEngine e(Rat(2));
  const auto pool = up_to(4, 5);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<std::string> bad;
  for (int k = 0; k < 20; ++k) {
    const auto& l = pool[pick(rng)];
    const auto& m = pool[pick(rng)];
    if (!symmetry_check(l, m, 4, e)) bad.push_back(l.str() + "/" + m.str());
  }
  c.item(bad.empty(), "n=4 t0=2, 20 random pairs (seed " + std::to_string(o.seed) + ")" +
                          (bad.empty() ? "" : " fail: " + join(bad)));
  return c.done();
}

// 10. divisibility at the critical q.
CriterionResult divisibility(const VerifyOptions& o) {
  Check c(10, "divisibility of P_lambda at q=t0^-2 by the t-diagonal products", o);
  if (!c.wants(4)) return c.done();
  for (const Rat& t0 : o.t0s) {
    MacdonaldEngine e(t0);
    std::vector<std::string> checked, bad;
    for (const auto& l : up_to(4, 12)) {
      bool gaps = true;
      for (int j = 1; j < 4; ++j) gaps = gaps && l.at1(j) - l.at1(j + 1) >= 2;
      if (!gaps) continue;
      checked.push_back(l.str());
      if (!divisible_by_t_products(specialize_q(e.macdonald(l, 4).expansion, critical_q(t0)), t0)) bad.push_back(l.str());
    }
    c.item(bad.empty() && !checked.empty(), "t0=" + t0.str() + " gap>=2, |lambda|<=12: " + join(checked) +
                                                (bad.empty() ? "" : " not divisible: " + join(bad)));
  }
  return c.done();
}

// 11. generator degrees.
CriterionResult generators(const VerifyOptions& o) {
  Check c(11, "generator degrees of I_n and I_n(3); minimal degrees", o);
  struct Row {
    int n;
    IdealSpec spec;
    int bound;
    std::vector<int> want;
  };
  std::vector<Row> rows{{4, IdealSpec::double_diagonal(4), 14, {3, 4, 5, 6, 7, 8, 9}},
                        {5, IdealSpec::double_diagonal(5), 18, {8, 9, 10, 11, 12, 13, 14, 15, 16, 17}},
                        {4, IdealSpec::pfold(4, 3), 14, {4, 6}},
                        {5, IdealSpec::pfold(5, 3), 13, {8, 9, 10, 10, 12}}};
  if (o.extended) {
    std::vector<int> six;
    for (int d = 15; d <= 27; ++d) six.push_back(d);
    rows.push_back({6, IdealSpec::double_diagonal(6), 28, six});
  }
  for (const auto& r : rows) {
    if (!c.wants(r.n)) continue;
    const auto got = as_multiset(generator_degrees(r.spec, r.bound, c.compute()));
    c.item(got == r.want, r.spec.str() + " D=" + std::to_string(r.bound) + ": " + join(got) +
                              (got == r.want ? "" : " expected " + join(r.want)));
  }
  for (int n : c.ns({4, 5, 6})) {
    auto first = [&](const IdealSpec& s) {
      for (int d = 0; d <= 40; ++d)
        if (ideal_dimension(s, d, c.compute())) return d;
      return -1;
    };
    const int m = first(IdealSpec::double_diagonal(n)), m3 = first(IdealSpec::pfold(n, 3));
    const bool ok = m == min_degree(n) && m == (n - 1) * (n - 3) && m3 == min_degree(n, 3) &&
                    m3 == (n - 1) * (n - 1) / 2;
    c.item(ok, "n=" + std::to_string(n) + ": lowest degrees " + std::to_string(m) + ", " + std::to_string(m3) +
                   " vs M(n)=" + std::to_string(min_degree(n)) + ", M(n,3)=" + std::to_string(min_degree(n, 3)));
  }
  return c.done();
}

// 12. the minimal-weight generator.
CriterionResult lambda_min_check(const VerifyOptions& o) {
  Check c(12, "minimal generator Q(x) proportional to P_lambda_min at theta=-1/2", o);
  for (int n : c.ns({4, 5})) {
    try {
      const auto r = lambda_min_generator(n);
      c.item(true, "n=" + std::to_string(n) + " lambda_min " + r.lambda.str() + ", Q = " + r.ratio.str() + " * P");
    } catch (const ProportionalityFailure& ex) {
      c.item(false, "n=" + std::to_string(n) + " " + ex.what());
    }
  }
  return c.done();
}

// 13. interpolation polynomials at theta = -1/2.
CriterionResult interpolation(const VerifyOptions& o) {
  Check c(13, "modified interpolation Jack polynomials: shifted vanishing, zeta facts, Pieri variant", o);
  if (!c.wants(4)) return c.done();
  InterpEngine e(4);
  std::vector<std::string> bad, pieri_bad;
  int polys = 0, pieri = 0;
  for (int d = 0; d <= 6; ++d)
    for (const auto& l : admissible_partitions(4, d)) {
      ++polys;
      try {
        const auto f = specialize(modified_interp_jack(l, 4, e), kHalf);
        if (!shifted_vanishing_failures(f, d + 3).empty()) bad.push_back(l.str() + " vanishing");
      } catch (const PoleAtPoint&) {
        bad.push_back(l.str() + " pole");
      }
      try {
        pieri_check(l, 4, e, !o.literal_shift);
        ++pieri;
      } catch (const NoRepresentation&) {
        pieri_bad.push_back(l.str());
      }
    }
  c.item(bad.empty(), "n=4 admissible |lambda|<=6: " + std::to_string(polys) +
                          " polynomials finite and vanishing at mu+rho(-1/2), |mu|<=|lambda|+3" +
                          (bad.empty() ? "" : " " + join(bad)));
  c.item(pieri == polys, "Pieri residuals zero for " + std::to_string(pieri) + "/" + std::to_string(polys) +
                             (o.literal_shift ? " (shift |lambda|)" : " (shift |lambda| + |rho(-1/2)|)") +
                             (pieri_bad.empty() ? "" : " nonzero: " + join(pieri_bad)));
  const Partition l{2, 2, 2, 0}, nu{3, 1, 1, 1};
  const int z1 = multiplicity_at(jack_u0(l, 4), kHalf), z2 = multiplicity_at(jack_u0(nu, 4), kHalf);
  const int z3 = multiplicity_at(RatFunc(interp_normalization(nu)), kHalf);
  c.item(classify(l).companion == nu && z1 == 0 && z2 == 0 && z3 > 0,
         "(2,2,2,0)/(3,1,1,1): zeta(u0) = " + std::to_string(z1) + ", " + std::to_string(z2) +
             " (= [n/2]-2); zeta(P*_nu(nu+rho)) = " + std::to_string(z3));
  return c.done();
}

// 14. dehomogenization and commuting operators.
CriterionResult dehomog(const VerifyOptions& o) {
  Check c(14, "dehomogenization Psi(P_lambda) = P*_lambda; commuting difference operators", o);
  for (int n = 1; n <= 4; ++n) {
    if (!c.wants(n)) continue;
    KnopSahi ks(n);
    InterpEngine e(n);
    JackEngine je;
    std::vector<std::string> bad;
    int count = 0;
    for (const auto& l : up_to(n, 4)) {
      ++count;
      if (ks.dehomogenize(je.jack(l, n).expansion) != e.interp(l).expansion) bad.push_back(l.str());
    }
    c.item(bad.empty(), "n=" + std::to_string(n) + " all " + std::to_string(count) + " |lambda|<=4" +
                            (bad.empty() ? "" : " differ: " + join(bad)));
  }
  for (int n : c.ns({3, 4})) {
    KnopSahi ks(n);
    std::mt19937_64 rng(o.seed + static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<int> coef(-4, 4);
    int pairs = 0, bad = 0;
    for (int trial = 0; trial < 3; ++trial) {
      SymPoly<UniPoly> f(n);
      for (const auto& l : up_to(n, 3)) f.add_term(l, UniPoly(std::vector<Rat>{Rat(coef(rng)), Rat(coef(rng))}));
      const auto g = expand(f);
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
          ++pairs;
          if (ks.apply(a, ks.apply(b, g)) != ks.apply(b, ks.apply(a, g))) ++bad;
        }
    }
    c.item(bad == 0, "n=" + std::to_string(n) + " E_a E_b = E_b E_a on " + std::to_string(pairs) +
                         " random samples (seed " + std::to_string(o.seed) + ")");
  }
  return c.done();
}

// 15. the dual ring.
CriterionResult dual_ring(const VerifyOptions& o) {
  Check c(15, "dual ring: quotient dimension = admissible count", o);
  if (!c.wants(4)) return c.done();
  std::vector<int> dims, bad;
  for (int d = 0; d <= 10; ++d) {
    const auto r = dual_ring_spanning(4, d, c.compute());
    dims.push_back(r.quotient_dim);
    if (r.quotient_dim != r.admissible_count) bad.push_back(d);
  }
  c.item(bad.empty(), "n=4 d<=10 quotient dims " + join(dims) + (bad.empty() ? "" : " differ at d=" + join(bad)));
  return c.done();
}

// 16. the filtration quotients.
CriterionResult filtration(const VerifyOptions& o) {
  Check c(16, "filtration F2 > F > F1: quotient series = theorem terms", o);
  if (!c.wants(4)) return c.done();
  const auto r = filtration_check(4, 14, c.compute());
  c.item(r.f2_over_f == r.expected[0], "ch F2/F = " + r.f2_over_f.str());
  c.item(r.f_over_f1 == r.expected[1], "ch F/F1 = " + r.f_over_f1.str());
  c.item(r.f1 == r.expected[2], "ch F1 = " + r.f1.str());
  return c.done();
}

using Runner = CriterionResult (*)(const VerifyOptions&);
constexpr Runner kRunners[kCriteria] = {hilbert,      cases,      jack_basis, mac_basis,        zeta,
                                        poles,        structure,  companions, symmetry,         divisibility,
                                        generators,   lambda_min_check, interpolation, dehomog, dual_ring,
                                        filtration};

}  // namespace

std::string CriterionResult::status_str() const {
  switch (status) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
  }
  return "?";
}

CriterionResult run_criterion(int id, const VerifyOptions& opt) {
  if (id < 1 || id > kCriteria) throw std::out_of_range("no criterion " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r = kRunners[id - 1](opt);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt,
                                            const std::function<void(const CriterionResult&)>& report) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) {
    if (!opt.only.empty() && !opt.only.count(id)) continue;
    out.push_back(run_criterion(id, opt));
    if (report) report(out.back());
  }
  return out;
}

}  // namespace crl
