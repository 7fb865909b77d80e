#include "crl/ideals.hpp"

#include <algorithm>

#include "crl/errors.hpp"
#include "crl/jack.hpp"

namespace crl {

bool IdealSpec::graded() const {
  return std::all_of(patterns.begin(), patterns.end(), [](const Pattern& p) { return p.homogeneous(); });
}

void IdealSpec::validate() const {
  if (n < 1) throw BadPattern("ideal needs n >= 1");
  if (patterns.empty()) throw BadPattern("ideal needs at least one pattern");
  for (const auto& p : patterns) pattern_images(p, n);
}

std::string IdealSpec::str() const {
  std::string s = "n=" + std::to_string(n);
  for (const auto& p : patterns) s += " " + p.str();
  return s;
}

std::vector<Partition> source_basis(const IdealSpec& spec, int d) {
  if (d < 0) return {};
  if (spec.graded()) return enumerate_partitions(spec.n, d);
  return enumerate_partitions_up_to(spec.n, d);
}

Matrix<Rat> substitution_matrix(const IdealSpec& spec, int d) {
  spec.validate();
  const auto cols = source_basis(spec, d);
  std::map<std::pair<int, Exponent>, int> row_of;
  std::vector<std::vector<std::pair<int, Rat>>> entries(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const SymPoly<Rat> m = SymPoly<Rat>::monomial(cols[c]);
    for (int k = 0; k < static_cast<int>(spec.patterns.size()); ++k) {
      const auto img = substitute_pattern(m, spec.patterns[static_cast<std::size_t>(k)]);
      for (const auto& [e, v] : img.terms()) {
        auto it = row_of.try_emplace({k, e}, static_cast<int>(row_of.size())).first;
        entries[c].push_back({it->second, v});
      }
    }
  }
  Matrix<Rat> a(static_cast<int>(row_of.size()), static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : entries[c]) a(r, static_cast<int>(c)) = v;
  return a;
}

int ideal_dimension(const IdealSpec& spec, int d, const ComputeOptions& opt) {
  const Matrix<Rat> a = substitution_matrix(spec, d);
  if (a.cols() == 0) return 0;
  return a.cols() - checked_rank(a, opt.prime);
}

std::vector<SymPoly<Rat>> ideal_basis(const IdealSpec& spec, int d) {
  const auto cols = source_basis(spec, d);
  std::vector<SymPoly<Rat>> out;
  if (cols.empty()) return out;
  for (const auto& v : nullspace(substitution_matrix(spec, d))) {
    SymPoly<Rat> f(spec.n);
    for (std::size_t c = 0; c < cols.size(); ++c) f.add_term(cols[c], v[c]);
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

std::map<int, int> affine_generator_degrees(const IdealSpec& spec, int bound, const ComputeOptions& opt) {
  if (!spec.graded()) throw BadPattern("generator degrees need a graded ideal");
  const int n = spec.n;
  std::vector<SymPoly<Rat>> ek;
  for (int k = 0; k <= n; ++k) ek.push_back(elementary<Rat>(k, n));
  std::vector<std::vector<SymPoly<Rat>>> basis;
  std::map<int, int> out;
  for (int d = 0; d <= bound; ++d) {
    basis.push_back(ideal_basis(spec, d));
    const int dim = static_cast<int>(basis.back().size());
    if (dim == 0) continue;
    const auto cols = enumerate_partitions(n, d);
    std::map<Partition, int> col_of;
    for (std::size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = static_cast<int>(c);
    Matrix<Rat> prods(0, static_cast<int>(cols.size()));
    for (int k = 1; k <= std::min(n, d); ++k) {
      for (const auto& g : basis[static_cast<std::size_t>(d - k)]) {
        std::vector<Rat> row(cols.size(), Rat(0));
        const SymPoly<Rat> prod = ek[static_cast<std::size_t>(k)] * g;
        for (const auto& [l, c] : prod.terms()) row[static_cast<std::size_t>(col_of.at(l))] = c;
        prods.append_row(row);
      }
    }
    const int r = prods.rows() ? checked_rank(prods, opt.prime) : 0;
    if (dim > r) out[d] = dim - r;
  }
  return out;
}

// Elementary-monomial coordinates for one weight: columns are e_rho with
// rho a partition of w into parts <= n, ordered by number of factors.
struct EWeight {
  std::vector<std::vector<int>> rho;
  std::map<std::vector<int>, int> index;
  std::vector<int> upto;  ///< upto[delta] = #columns with <= delta factors
  Matrix<Rat> image;      ///< substitution images of the columns
};

class EImages {
 public:
  EImages(const IdealSpec& spec) : spec_(spec) {
    for (int k = 1; k <= spec.n; ++k) {
      std::vector<MultiPoly<Rat>> im;
      for (const auto& p : spec.patterns) im.push_back(substitute_pattern(elementary<Rat>(k, spec.n), p));
      ek_.push_back(std::move(im));
    }
  }

  // Images of e_rho under every pattern, built from the shorter prefix.
  const std::vector<MultiPoly<Rat>>& of(const std::vector<int>& rho) {
    if (auto it = cache_.find(rho); it != cache_.end()) return it->second;
    std::vector<MultiPoly<Rat>> out;
    if (rho.empty()) {
      for (const auto& p : spec_.patterns) out.push_back(MultiPoly<Rat>::constant(p.free_vars(spec_.n), Rat(1)));
    } else {
      const std::vector<int> head(rho.begin(), rho.end() - 1);
      const auto& h = of(head);
      const auto& e = ek_[static_cast<std::size_t>(rho.back() - 1)];
      for (std::size_t k = 0; k < h.size(); ++k) out.push_back(h[k] * e[k]);
    }
    return cache_.emplace(rho, std::move(out)).first->second;
  }

 private:
  const IdealSpec& spec_;
  std::vector<std::vector<MultiPoly<Rat>>> ek_;
  std::map<std::vector<int>, std::vector<MultiPoly<Rat>>> cache_;
};

EWeight e_weight(const IdealSpec& spec, int w, EImages& images) {
  EWeight ew;
  // partitions of w with parts <= n are the conjugates of pi_{n,w}
  for (const auto& l : enumerate_partitions(spec.n, w)) {
    std::vector<int> r = l.conjugate();
    ew.rho.push_back(r);
  }
  std::stable_sort(ew.rho.begin(), ew.rho.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (std::size_t c = 0; c < ew.rho.size(); ++c) ew.index[ew.rho[c]] = static_cast<int>(c);
  ew.upto.assign(static_cast<std::size_t>(w) + 1, 0);
  for (const auto& r : ew.rho)
    for (std::size_t d = r.size(); d <= static_cast<std::size_t>(w); ++d) ++ew.upto[d];
  std::map<std::pair<int, Exponent>, int> row_of;
  std::vector<std::vector<std::pair<int, Rat>>> entries(ew.rho.size());
  for (std::size_t c = 0; c < ew.rho.size(); ++c) {
    // e-indices in increasing order so prefixes are shared across columns
    std::vector<int> key(ew.rho[c].rbegin(), ew.rho[c].rend());
    const auto& im = images.of(key);
    for (std::size_t k = 0; k < im.size(); ++k)
      for (const auto& [e, v] : im[k].terms()) {
        auto it = row_of.try_emplace({static_cast<int>(k), e}, static_cast<int>(row_of.size())).first;
        entries[c].push_back({it->second, v});
      }
  }
  ew.image = Matrix<Rat>(static_cast<int>(row_of.size()), static_cast<int>(ew.rho.size()));
  for (std::size_t c = 0; c < entries.size(); ++c)
    for (const auto& [r, v] : entries[c]) ew.image(r, static_cast<int>(c)) = v;
  return ew;
}

// Kernel of the first `cols` columns, as vectors over those columns.
std::vector<std::vector<Rat>> kernel_prefix(const Matrix<Rat>& a, int cols) {
  if (cols == 0) return {};
  Matrix<Rat> sub(a.rows(), cols);
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < cols; ++c) sub(r, c) = a(r, c);
  if (a.rows() == 0) {
    std::vector<std::vector<Rat>> id;
    for (int c = 0; c < cols; ++c) {
      std::vector<Rat> v(static_cast<std::size_t>(cols), Rat(0));
      v[static_cast<std::size_t>(c)] = Rat(1);
      id.push_back(v);
    }
    return id;
  }
  return nullspace(sub);
}

}  // namespace

std::map<std::pair<int, int>, int> generator_bidegrees(const IdealSpec& spec, int bound, const ComputeOptions& opt) {
  spec.validate();
  if (!spec.graded()) throw BadPattern("generator degrees need a graded ideal");
  const int n = spec.n;
  EImages images(spec);
  std::vector<EWeight> weights;
  // kernels[w][delta]: basis of I~_{delta,w} in the columns of weight w
  std::vector<std::vector<std::vector<std::vector<Rat>>>> kernels;
  std::map<std::pair<int, int>, int> out;
  for (int w = 0; w <= bound; ++w) {
    weights.push_back(e_weight(spec, w, images));
    const EWeight& ew = weights.back();
    const int ncols = static_cast<int>(ew.rho.size());
    std::vector<std::vector<std::vector<Rat>>> kw(static_cast<std::size_t>(w) + 1);
    for (int delta = 0; delta <= w; ++delta) {
      const auto ud = static_cast<std::size_t>(delta);
      if (delta > 0 && ew.upto[ud] == ew.upto[ud - 1]) {
        // no new columns: same space, already generated from below
        kw[ud] = kw[ud - 1];
        continue;
      }
      auto basis = kernel_prefix(ew.image, ew.upto[ud]);
      for (auto& v : basis) v.resize(static_cast<std::size_t>(ncols), Rat(0));
      kw[static_cast<std::size_t>(delta)] = std::move(basis);
      const int dim = static_cast<int>(kw[static_cast<std::size_t>(delta)].size());
      if (dim == 0 || delta == 0) {
        if (dim) out[{delta, w}] = dim;
        continue;
      }
      Matrix<Rat> span(0, ncols);
      for (const auto& v : kw[static_cast<std::size_t>(delta - 1)]) span.append_row(v);
      for (int k = 1; k <= std::min(n, w); ++k) {
        const int w2 = w - k;
        const auto& prev = kernels[static_cast<std::size_t>(w2)];
        const int d2 = std::min(delta - 1, w2);
        for (const auto& v : prev[static_cast<std::size_t>(d2)]) {
          std::vector<Rat> row(static_cast<std::size_t>(ncols), Rat(0));
          const auto& src = weights[static_cast<std::size_t>(w2)].rho;
          for (std::size_t c = 0; c < v.size(); ++c) {
            if (v[c].is_zero()) continue;
            std::vector<int> r = src[c];
            r.insert(std::upper_bound(r.begin(), r.end(), k, std::greater<>()), k);
            row[static_cast<std::size_t>(ew.index.at(r))] = v[c];
          }
          span.append_row(row);
        }
      }
      const int r = span.rows() ? checked_rank(span, opt.prime) : 0;
      if (dim > r) out[{delta, w}] = dim - r;
    }
    kernels.push_back(std::move(kw));
  }
  return out;
}

std::map<int, int> generator_degrees(const IdealSpec& spec, int bound, const ComputeOptions& opt, Grading grading) {
  if (grading == Grading::Affine) return affine_generator_degrees(spec, bound, opt);
  std::map<int, int> out;
  for (const auto& [bd, m] : generator_bidegrees(spec, bound, opt)) out[bd.second] += m;
  return out;
}

std::vector<int> as_multiset(const std::map<int, int>& degrees) {
  std::vector<int> out;
  for (auto [d, m] : degrees) out.insert(out.end(), static_cast<std::size_t>(m), d);
  return out;
}

int min_degree(int n) { return (n - 1) * (n - 3); }

int min_degree(int n, int p) {
  const int s = n / (p - 1), r = n % (p - 1);
  return s * (s - 1) * (p - 1) + 2 * s * r;
}

Partition lambda_min(int n) {
  if (n < 4) throw std::invalid_argument("lambda_min needs n >= 4");
  std::vector<int> parts;
  for (int v = 2 * n - 5; v >= 3; v -= 2) parts.push_back(v);
  parts.resize(static_cast<std::size_t>(n), 0);
  return Partition(parts);
}

SymPoly<Rat> q_generator(int n) {
  using MP = MultiPoly<Rat>;
  auto x = [n](int i) { return MP::variable(n, i - 1); };
  MP g = MP::constant(n, Rat(1));
  for (int j = 4; j <= n; ++j) g = g * (x(1) - x(j)) * (x(2) - x(j)) * (x(3) - x(j));
  for (int k = 4; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) g = g * (x(k) - x(l)) * (x(k) - x(l));
  return symmetrize(g);
}

std::optional<Rat> proportionality(const SymPoly<Rat>& f, const SymPoly<Rat>& g) {
  if (g.is_zero()) return std::nullopt;
  const auto& [mu, c] = *g.terms().rbegin();
  const Rat k = f.coeff(mu) / c;
  if (f == g * k) return k;
  return std::nullopt;
}

LambdaMinReport lambda_min_generator(int n) {
  LambdaMinReport r{lambda_min(n), q_generator(n), SymPoly<Rat>(n), Rat(0)};
  if (r.lambda.weight() != min_degree(n))
    throw ProportionalityFailure("|lambda_min| differs from M(n)");
  if (!is_admissible(r.lambda)) throw ProportionalityFailure(r.lambda.str() + " is not admissible");
  if (r.q.is_zero() || r.q.degree() != min_degree(n) || !r.q.is_homogeneous())
    throw ProportionalityFailure("Q is not a nonzero form of degree M(n)");
  if (!substitute_pattern(r.q, Pattern::double_diagonal()).is_zero())
    throw ProportionalityFailure("Q does not vanish on the double diagonal");
  r.jack_at_half = specialize_theta(jack(r.lambda, n).expansion, Rat(mpz_class(-1), mpz_class(2)));
  const auto k = proportionality(r.q, r.jack_at_half);
  if (!k || k->is_zero()) throw ProportionalityFailure("Q is not proportional to the Jack polynomial at theta = -1/2");
  r.ratio = *k;
  return r;
}

std::map<Partition, long> dual_relation(int i, int j) {
  std::map<Partition, long> out;
  for (int a = 0; a <= i; ++a)
    for (int c = 0; c <= j; ++c) {
      std::vector<int> idx{a, i - a, c, j - c};
      std::sort(idx.begin(), idx.end(), std::greater<>());
      ++out[Partition(idx)];
    }
  return out;
}

DualRingReport dual_ring_spanning(int n, int d, const ComputeOptions& opt) {
  if (n < 4) throw std::invalid_argument("dual ring check needs n >= 4");
  const auto cols = enumerate_partitions(n, d);
  std::map<Partition, int> col_of;
  for (std::size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = static_cast<int>(c);
  Matrix<Rat> rel(0, static_cast<int>(cols.size()));
  for (int i = 0; i <= d; ++i) {
    for (int j = i; i + j <= d; ++j) {
      const auto r = dual_relation(i, j);
      const int rest = d - i - j;
      std::vector<Partition> mus;
      if (n == 4) {
        if (rest == 0) mus.push_back(Partition{});
      } else {
        mus = enumerate_partitions(n - 4, rest);
      }
      for (const auto& mu : mus) {
        std::vector<Rat> row(cols.size(), Rat(0));
        for (const auto& [key, c] : r) {
          std::vector<int> idx = mu.parts();
          idx.insert(idx.end(), key.parts().begin(), key.parts().end());
          std::sort(idx.begin(), idx.end(), std::greater<>());
          row[static_cast<std::size_t>(col_of.at(Partition(idx)))] += Rat(c);
        }
        rel.append_row(row);
      }
    }
  }
  DualRingReport out;
  out.relation_rank = rel.rows() ? checked_rank(rel, opt.prime) : 0;
  out.quotient_dim = static_cast<int>(cols.size()) - out.relation_rank;
  out.admissible_count = static_cast<int>(admissible_partitions(n, d).size());
  return out;
}

FiltrationReport filtration_check(int n, int bound, const ComputeOptions& opt) {
  const IdealSpec f2 = IdealSpec::double_diagonal(n);
  const IdealSpec f{n, {Pattern::double_diagonal(), Pattern::pfold(3)}};
  const IdealSpec f1 = IdealSpec::pfold(n, 2);
  FiltrationReport r{SeriesTable(bound), SeriesTable(bound), SeriesTable(bound), hilbert_series_terms(n, bound)};
  for (int d = 0; d <= bound; ++d) {
    const long a = ideal_dimension(f2, d, opt), b = ideal_dimension(f, d, opt), c = ideal_dimension(f1, d, opt);
    r.f2_over_f.at(d) = a - b;
    r.f_over_f1.at(d) = b - c;
    r.f1.at(d) = c;
  }
  return r;
}

}  // namespace crl
