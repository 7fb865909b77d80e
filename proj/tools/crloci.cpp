// Command-line front end. Exit codes: 0 success, 1 failed check or math
// error, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "crl/errors.hpp"
#include "crl/ideals.hpp"
#include "crl/interp.hpp"
#include "crl/jack.hpp"
#include "crl/json_io.hpp"
#include "crl/macdonald.hpp"
#include "crl/partitions.hpp"
#include "crl/series.hpp"
#include "crl/triangular.hpp"
#include "crl/verify.hpp"

using namespace crl;
using io::Json;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int n = 4;
  int degree = -1;
  int max_degree = -1;
  std::vector<std::string> t0s;
  std::string theta = "-1/2";
  bool symbolic = false;
  bool modified = false;
  bool critical = false;
  int p = 0;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::uint64_t mod_prime = 0;
  std::string out;
  std::string lambda;
  bool affine = false;
  bool bidegrees = false;
  bool extended = false;
  bool literal_shift = false;
  bool verbose = false;
  std::vector<int> criteria;
  bool n_given = false;
};

Rat parse_rat(const std::string& s, const char* what) {
  try {
    return Rat::parse(s);
  } catch (const ParseError&) {
    throw Usage(std::string("bad rational for ") + what + ": \"" + s + "\"");
  }
}

std::vector<Rat> t0_list(const Config& c) {
  std::vector<Rat> out;
  for (const auto& s : c.t0s) {
    Rat t = parse_rat(s, "--t0");
    if (t.is_zero() || t == Rat(1) || t == Rat(-1)) throw Usage("--t0 must not be 0, 1 or -1");
    out.push_back(t);
  }
  return out;
}

Rat single_t0(const Config& c) {
  const auto ts = t0_list(c);
  if (ts.size() > 1) throw Usage("this subcommand takes one --t0");
  return ts.empty() ? Rat(2) : ts[0];
}

// "3,1,0,0", "3 1" or "[3,1]"; padded to n
Partition parse_lambda(const Config& c) {
  if (c.lambda.empty()) throw Usage("--lambda is required");
  std::string s = c.lambda;
  for (char& ch : s)
    if (ch == ',' || ch == '[' || ch == ']' || ch == '(' || ch == ')') ch = ' ';
  std::istringstream is(s);
  std::vector<int> parts;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Usage("bad --lambda \"" + c.lambda + "\"");
    }
  }
  try {
    Partition l(parts);
    int len = 0;
    for (int v : parts) len += v > 0;
    if (len > c.n) throw Usage("--lambda has more than n nonzero parts");
    return l.padded(c.n);
  } catch (const std::invalid_argument&) {
    throw Usage("--lambda must be weakly decreasing and nonnegative");
  }
}

int bound(const Config& c, int fallback) {
  if (c.max_degree >= 0) return c.max_degree;
  if (c.degree >= 0) return c.degree;
  return fallback;
}

ComputeOptions compute(const Config& c) {
  ComputeOptions o;
  if (c.mod_prime) o.prime = c.mod_prime;
  return o;
}

std::string csv_partition(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.parts().size(); ++i) s += (i ? " " : "") + std::to_string(p.parts()[i]);
  return s;
}

std::string kind_name(CaseTag::Kind k) { return k == CaseTag::Kind::A ? "A" : k == CaseTag::Kind::B ? "B" : "C"; }

// ---- subcommands; each writes to `os` and returns the exit code ----

int cmd_admissible(const Config& c, std::ostream& os) {
  const int d = bound(c, -1);
  if (d < 0) throw Usage("--degree is required");
  if (c.format == "csv") os << "n,d,partition,case,pivot,companion\n";
  for (const auto& l : admissible_partitions(c.n, d)) {
    const auto tag = classify(l);
    if (c.format == "json") {
      Json j;
      j["schema"] = io::kSchema;
      j["n"] = c.n;
      j["d"] = d;
      j["partition"] = io::to_json(l);
      j["case"] = kind_name(tag.kind);
      j["pivot"] = tag.pivot;
      j["companion"] = tag.companion ? io::to_json(*tag.companion) : Json(nullptr);
      os << j.dump() << "\n";
    } else if (c.format == "csv") {
      os << c.n << ',' << d << ',' << csv_partition(l) << ',' << kind_name(tag.kind) << ',' << tag.pivot << ','
         << (tag.companion ? csv_partition(*tag.companion) : "") << "\n";
    } else {
      os << l.str() << "  " << tag.str() << "\n";
    }
  }
  return 0;
}

int cmd_hilbert(const Config& c, std::ostream& os) {
  const int D = bound(c, 14);
  const auto series = hilbert_series_theorem(c.n, D);
  const auto spec = IdealSpec::double_diagonal(c.n);
  bool ok = true;
  Json rows = Json::array();
  if (c.format == "csv") os << "n,d,dim,admissible_count,series_coeff\n";
  if (c.format == "text") os << "  d   dim  admissible  series\n";
  for (int d = 0; d <= D; ++d) {
    const int dim = ideal_dimension(spec, d, compute(c));
    const long adm = static_cast<long>(admissible_partitions(c.n, d).size());
    ok = ok && dim == series[d] && dim == adm;
    if (c.format == "json") {
      rows.push_back(Json{{"n", c.n}, {"d", d}, {"dim", dim}, {"admissible_count", adm}, {"series_coeff", series[d]}});
    } else if (c.format == "csv") {
      os << c.n << ',' << d << ',' << dim << ',' << adm << ',' << series[d] << "\n";
    } else {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%3d %5d %11ld %7ld%s\n", d, dim, adm, series[d],
                    dim == series[d] && dim == adm ? "" : "  MISMATCH");
      os << buf;
    }
  }
  if (c.format == "json") os << Json{{"schema", io::kSchema}, {"n", c.n}, {"rows", rows}, {"agree", ok}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

void emit_poly(const Config& c, std::ostream& os, const io::PolyDoc& doc) {
  if (c.format == "json") {
    os << io::to_json(doc).dump(2) << "\n";
    return;
  }
  const std::string sym = io::to_string(doc.symbol);
  if (c.format == "csv") os << "partition,num,den\n";
  for (const auto& [l, k] : doc.poly.terms()) {
    if (c.format == "csv")
      os << csv_partition(l) << ',' << k.num().str(sym) << ',' << k.den().str(sym) << "\n";
    else
      os << l.str() << "  " << k.str(sym) << "\n";
  }
}

io::PolyDoc theta_doc(const Config& c, SymPoly<RatFunc> f, bool inhomogeneous) {
  io::PolyDoc doc{c.n, io::Symbol::Theta, std::nullopt, inhomogeneous, std::move(f)};
  if (!c.symbolic) {
    const Rat th = parse_rat(c.theta, "--theta");
    doc.symbol = io::Symbol::None;
    doc.poly = map_coeffs<RatFunc>(specialize(doc.poly, th), [](const Rat& r) { return RatFunc(r); });
  }
  return doc;
}

int cmd_jack(const Config& c, std::ostream& os) {
  const Partition l = parse_lambda(c);
  auto f = c.modified ? modified_jack(l, c.n) : jack(l, c.n).expansion;
  emit_poly(c, os, theta_doc(c, std::move(f), false));
  return 0;
}

int cmd_interp(const Config& c, std::ostream& os) {
  const Partition l = parse_lambda(c);
  auto f = c.modified ? modified_interp_jack(l, c.n) : interp_jack(l, c.n).expansion;
  emit_poly(c, os, theta_doc(c, std::move(f), true));
  return 0;
}

int cmd_macdonald(const Config& c, std::ostream& os) {
  const Partition l = parse_lambda(c);
  const Rat t0 = single_t0(c);
  MacdonaldEngine e(t0);
  auto f = c.modified ? modified_macdonald(l, c.n, e) : e.macdonald(l, c.n).expansion;
  io::PolyDoc doc{c.n, io::Symbol::Q, t0, false, std::move(f)};
  if (c.critical) {
    doc.symbol = io::Symbol::None;
    doc.poly = map_coeffs<RatFunc>(specialize_q(doc.poly, critical_q(t0)), [](const Rat& r) { return RatFunc(r); });
  }
  emit_poly(c, os, doc);
  return 0;
}

int cmd_gendeg(const Config& c, std::ostream& os) {
  const IdealSpec spec = c.p ? IdealSpec::pfold(c.n, c.p) : IdealSpec::double_diagonal(c.n);
  const int D = bound(c, 14);
  if (c.bidegrees) {
    if (c.affine) throw Usage("--bidegrees uses the projective grading");
    const auto bd = generator_bidegrees(spec, D, compute(c));
    if (c.format == "json") {
      Json rows = Json::array();
      for (const auto& [k, m] : bd) rows.push_back(Json{{"degree", k.first}, {"weight", k.second}, {"count", m}});
      os << Json{{"schema", io::kSchema}, {"ideal", spec.str()}, {"bound", D}, {"bidegrees", rows}}.dump(2) << "\n";
    } else {
      if (c.format == "csv") os << "degree,weight,count\n";
      for (const auto& [k, m] : bd)
        os << k.first << (c.format == "csv" ? "," : " ") << k.second << (c.format == "csv" ? "," : " ") << m << "\n";
    }
    return 0;
  }
  const auto deg = generator_degrees(spec, D, compute(c), c.affine ? Grading::Affine : Grading::Projective);
  const auto ms = as_multiset(deg);
  if (c.format == "json") {
    Json mult = Json::object();
    for (const auto& [d, m] : deg) mult[std::to_string(d)] = m;
    os << Json{{"schema", io::kSchema}, {"ideal", spec.str()}, {"bound", D},
               {"grading", c.affine ? "affine" : "projective"}, {"degrees", ms}, {"multiplicities", mult}}
              .dump(2)
       << "\n";
  } else if (c.format == "csv") {
    os << "degree,count\n";
    for (const auto& [d, m] : deg) os << d << ',' << m << "\n";
  } else {
    for (std::size_t i = 0; i < ms.size(); ++i) os << (i ? " " : "") << ms[i];
    os << "\n";
  }
  return 0;
}

int cmd_companions(const Config& c, std::ostream& os) {
  std::vector<Partition> todo;
  if (!c.lambda.empty()) {
    todo.push_back(parse_lambda(c));
  } else {
    for (int d = 0; d <= bound(c, 12); ++d)
      for (const auto& l : admissible_partitions(c.n, d))
        if (classify(l).kind == CaseTag::Kind::A) todo.push_back(l);
  }
  if (c.format == "csv") os << "partition,companion\n";
  Json rows = Json::array();
  for (const auto& l : todo) {
    const auto found = companions_bruteforce(l);
    Json arr = Json::array();
    for (const auto& m : found) arr.push_back(io::to_json(m));
    if (c.format == "json") {
      rows.push_back(Json{{"partition", io::to_json(l)}, {"companions", arr}});
    } else if (c.format == "csv") {
      for (const auto& m : found) os << csv_partition(l) << ',' << csv_partition(m) << "\n";
    } else {
      os << l.str() << ":";
      for (const auto& m : found) os << " " << m.str();
      os << "\n";
    }
  }
  if (c.format == "json") os << Json{{"schema", io::kSchema}, {"n", c.n}, {"results", rows}}.dump(2) << "\n";
  return 0;
}

int cmd_dualring(const Config& c, std::ostream& os) {
  const int D = bound(c, 10);
  bool ok = true;
  Json rows = Json::array();
  if (c.format == "csv") os << "n,d,quotient_dim,admissible_count,relation_rank\n";
  for (int d = 0; d <= D; ++d) {
    const auto r = dual_ring_spanning(c.n, d, compute(c));
    ok = ok && r.quotient_dim == r.admissible_count;
    if (c.format == "json")
      rows.push_back(Json{{"n", c.n}, {"d", d}, {"quotient_dim", r.quotient_dim},
                          {"admissible_count", r.admissible_count}, {"relation_rank", r.relation_rank}});
    else if (c.format == "csv")
      os << c.n << ',' << d << ',' << r.quotient_dim << ',' << r.admissible_count << ',' << r.relation_rank << "\n";
    else
      os << "d=" << d << " quotient " << r.quotient_dim << " admissible " << r.admissible_count
         << (r.quotient_dim == r.admissible_count ? "" : "  MISMATCH") << "\n";
  }
  if (c.format == "json") os << Json{{"schema", io::kSchema}, {"rows", rows}, {"agree", ok}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_verify(const Config& c, std::ostream& os) {
  VerifyOptions o;
  if (c.n_given) o.n = c.n;
  if (!c.t0s.empty()) o.t0s = t0_list(c);
  if (c.mod_prime) o.prime = c.mod_prime;
  o.seed = c.seed;
  o.extended = c.extended;
  o.literal_shift = c.literal_shift;
  for (int id : c.criteria) {
    if (id < 1 || id > kCriteria) throw Usage("--criterion must be in 1.." + std::to_string(kCriteria));
    o.only.insert(id);
  }
  bool ok = true;
  Json rows = Json::array();
  auto report = [&](const CriterionResult& r) {
    ok = ok && r.status != CriterionResult::Status::Fail;
    std::cerr << "criterion " << r.id << " " << r.status_str() << " (" << r.seconds << " s)\n";
    if (c.format == "json") {
      rows.push_back(Json{{"id", r.id}, {"label", r.label}, {"status", r.status_str()}, {"details", r.details}});
      return;
    }
    char head[16];
    std::snprintf(head, sizeof head, "%-4s %2d  ", r.status_str().c_str(), r.id);
    os << head << r.label << "\n";
    for (const auto& d : r.details)
      if (c.verbose || d.rfind("FAIL", 0) == 0) os << "          " << d << "\n";
    os.flush();
  };
  run_acceptance(o, report);
  if (c.format == "json") os << Json{{"schema", io::kSchema}, {"criteria", rows}, {"passed", ok}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Jack, Macdonald and interpolation polynomials at special parameters"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* s) {
    s->add_option("--n", c.n, "number of variables")->check(CLI::Range(1, 12));
    s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    s->add_option("--out", c.out, "write output here instead of stdout");
  };
  auto degrees = [&](CLI::App* s) {
    s->add_option("--degree", c.degree, "degree")->check(CLI::NonNegativeNumber);
    s->add_option("--max-degree", c.max_degree, "largest degree")->check(CLI::NonNegativeNumber);
  };
  auto prime = [&](CLI::App* s) {
    s->add_option("--mod-prime", c.mod_prime, "prime > 2^30 for a modular rank screen")
        ->check(CLI::Range(std::uint64_t{1} << 30, ~std::uint64_t{0}).description("> 2^30"));
  };
  auto lambda = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--lambda", c.lambda, "partition, e.g. 3,1,0,0");
    if (required) o->required();
  };
  auto theta = [&](CLI::App* s) {
    s->add_option("--theta", c.theta, "rational value of theta (default -1/2)");
    s->add_flag("--symbolic", c.symbolic, "keep theta symbolic");
    s->add_flag("--modified", c.modified, "the modified combination for admissible partitions");
  };

  auto* adm = app.add_subcommand("admissible", "list admissible partitions with their case");
  common(adm), degrees(adm);
  auto* hil = app.add_subcommand("hilbert", "kernel dimensions against the series and admissible counts");
  common(hil), degrees(hil), prime(hil);
  auto* jk = app.add_subcommand("jack", "Jack polynomial P_lambda");
  common(jk), lambda(jk, true), theta(jk);
  auto* ip = app.add_subcommand("interp", "interpolation polynomial P*_lambda");
  common(ip), lambda(ip, true), theta(ip);
  auto* mac = app.add_subcommand("macdonald", "Macdonald polynomial at t = t0");
  common(mac), lambda(mac, true);
  mac->add_option("--t0", c.t0s, "value of t");
  mac->add_flag("--modified", c.modified, "the modified combination");
  mac->add_flag("--critical", c.critical, "specialize q = t0^-2");
  auto* gd = app.add_subcommand("gendeg", "generator degrees of I_n or I_n(p)");
  common(gd), degrees(gd), prime(gd);
  gd->add_option("--p", c.p, "p-fold diagonal instead of the double diagonal")->check(CLI::Range(2, 12));
  gd->add_flag("--affine", c.affine, "affine (degree-only) grading");
  gd->add_flag("--bidegrees", c.bidegrees, "report (degree, weight) pairs");
  auto* ver = app.add_subcommand("verify", "run the acceptance criteria");
  common(ver), prime(ver);
  ver->add_option("--t0", c.t0s, "values of t (repeatable)");
  ver->add_option("--seed", c.seed, "seed for random sweeps");
  ver->add_option("--criterion", c.criteria, "run only these criteria (repeatable)");
  ver->add_flag("--extended", c.extended, "include the long n = 6 generator run");
  ver->add_flag("--literal-shift", c.literal_shift, "Pieri check without the |rho| shift");
  ver->add_flag("--verbose,-v", c.verbose, "print every checked item");
  auto* comp = app.add_subcommand("companions", "brute-force companions of Case A partitions");
  common(comp), degrees(comp), lambda(comp, false);
  auto* dr = app.add_subcommand("dualring", "dual ring quotient dimensions");
  common(dr), degrees(dr), prime(dr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  c.n_given = sub->count("--n") > 0;

  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) {
      std::cerr << "cannot open " << c.out << "\n";
      return 2;
    }
  }
  std::ostream& os = c.out.empty() ? std::cout : file;

  const std::map<std::string, int (*)(const Config&, std::ostream&)> table{
      {"admissible", cmd_admissible}, {"hilbert", cmd_hilbert},   {"jack", cmd_jack},
      {"interp", cmd_interp},         {"macdonald", cmd_macdonald}, {"gendeg", cmd_gendeg},
      {"verify", cmd_verify},         {"companions", cmd_companions}, {"dualring", cmd_dualring}};
  try {
    return table.at(sub->get_name())(c, os);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const NotAdmissible& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
