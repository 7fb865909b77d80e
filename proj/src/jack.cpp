#include "crl/jack.hpp"

#include "crl/errors.hpp"

namespace crl {

namespace {

UniPoly theta_times(long c) { return UniPoly::monomial(Rat(c), 1); }

}  // namespace

OperatorColumn jack_operator_column(const Partition& nu) {
  OperatorColumn col;
  auto add = [&](const Exponent& e, const UniPoly& c) {
    if (!is_weakly_decreasing(e)) return;
    auto [it, inserted] = col.try_emplace(Partition(e), c);
    if (!inserted) it->second += c;
  };
  long sq = 0;
  for (int v : nu.parts()) sq += static_cast<long>(v) * v;
  add(nu.parts(), UniPoly(Rat(sq)));

  const int n = nu.length();
  for (const auto& alpha : orbit(nu)) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int a = alpha[static_cast<std::size_t>(i)], b = alpha[static_cast<std::size_t>(j)];
        if (a <= b) continue;
        // pairs {x^alpha, x^{s_ij alpha}} contribute
        // theta (a-b) [x_i^a x_j^b + x_i^b x_j^a + 2 sum_k x_i^{a-k} x_j^{b+k}]
        Exponent e = alpha;
        add(e, theta_times(a - b));
        e[static_cast<std::size_t>(i)] = b, e[static_cast<std::size_t>(j)] = a;
        add(e, theta_times(a - b));
        for (int k = 1; k < a - b; ++k) {
          e[static_cast<std::size_t>(i)] = a - k, e[static_cast<std::size_t>(j)] = b + k;
          add(e, theta_times(2L * (a - b)));
        }
      }
    }
  }
  for (auto it = col.begin(); it != col.end();) it = it->second.is_zero() ? col.erase(it) : std::next(it);
  return col;
}

UniPoly jack_eigenvalue(const Partition& lambda) {
  long sq = 0, lin = 0;
  const int n = lambda.length();
  for (int i = 1; i <= n; ++i) {
    sq += static_cast<long>(lambda.at1(i)) * lambda.at1(i);
    lin += static_cast<long>(n + 1 - 2 * i) * lambda.at1(i);
  }
  return UniPoly(Rat(sq)) + theta_times(lin);
}

JackPoly JackEngine::jack(const Partition& lambda, int n) {
  const Partition l = lambda.padded(n);
  return {l, n, solver_.eigenvector(l)};
}

JackPoly jack(const Partition& lambda, int n) {
  JackEngine e;
  return e.jack(lambda, n);
}

RatFunc jack_u0(const Partition& lambda, int n) {
  UniPoly num(1), den(1);
  for (const auto& b : box_stats(lambda).boxes) {
    num *= theta_times(n - b.coleg) + UniPoly(Rat(b.coarm));
    den *= theta_times(b.leg + 1) + UniPoly(Rat(b.arm));
  }
  return RatFunc(num, den);
}

SymPoly<RatFunc> modified_jack(const Partition& lambda, int n, JackEngine& engine) {
  const Partition l = lambda.padded(n);
  const CaseTag tag = classify(l);
  SymPoly<RatFunc> p = engine.jack(l, n).expansion;
  if (!tag.companion) return p;
  const Partition& nu = *tag.companion;
  const RatFunc ratio = jack_u0(l, n) / jack_u0(nu, n);
  return p - engine.jack(nu, n).expansion * ratio;
}

SymPoly<RatFunc> modified_jack(const Partition& lambda, int n) {
  JackEngine e;
  return modified_jack(lambda, n, e);
}

SymPoly<Rat> specialize_theta(const SymPoly<RatFunc>& f, const Rat& theta0) { return specialize(f, theta0); }

bool vanishes_on_double_diagonal(const SymPoly<Rat>& f) {
  return substitute_pattern(f, Pattern::double_diagonal()).is_zero();
}

}  // namespace crl
