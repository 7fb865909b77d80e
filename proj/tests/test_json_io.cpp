#include <random>

#include "crl/errors.hpp"
#include "crl/interp.hpp"
#include "crl/jack.hpp"
#include "crl/json_io.hpp"
#include "crl/macdonald.hpp"
#include "doctest.h"

using namespace crl;
using io::Json;

namespace {

io::PolyDoc round_trip(const io::PolyDoc& d) { return io::poly_from_json(Json::parse(io::to_json(d).dump())); }

void same(const io::PolyDoc& a, const io::PolyDoc& b) {
  CHECK(a.n == b.n);
  CHECK(a.symbol == b.symbol);
  CHECK(a.t0 == b.t0);
  CHECK(a.inhomogeneous == b.inhomogeneous);
  CHECK(a.poly == b.poly);
}

}  // namespace

TEST_CASE("polynomials round-trip") {
  JackEngine je;
  for (const auto& l : {Partition{2, 1, 0}, Partition{3, 3, 0}, Partition{1, 1, 1}}) {
    io::PolyDoc d{3, io::Symbol::Theta, std::nullopt, false, je.jack(l, 3).expansion};
    same(d, round_trip(d));
  }
  MacdonaldEngine me(Rat(mpz_class(5), mpz_class(3)));
  io::PolyDoc m{3, io::Symbol::Q, Rat(mpz_class(5), mpz_class(3)), false, me.macdonald(Partition{2, 1, 0}, 3).expansion};
  same(m, round_trip(m));
  CHECK(io::to_json(m)["t0"] == "5/3");
  io::PolyDoc p{3, io::Symbol::Theta, std::nullopt, true, interp_jack(Partition{2, 1, 0}, 3).expansion};
  same(p, round_trip(p));

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-50, 50), dn(1, 30);
  for (int trial = 0; trial < 20; ++trial) {
    SymPoly<Rat> f(4);
    for (const auto& l : enumerate_partitions(4, 5)) f.add_term(l, Rat(mpz_class(c(rng)), mpz_class(dn(rng))));
    const auto back = io::poly_from_json(Json::parse(io::to_json(f).dump()));
    CHECK(back.symbol == io::Symbol::None);
    CHECK(back.poly == map_coeffs<RatFunc>(f, [](const Rat& r) { return RatFunc(r); }));
  }
}

TEST_CASE("polynomial format") {
  SymPoly<Rat> f(2);
  f.add_term(Partition{2, 0}, Rat(mpz_class(-3), mpz_class(4)));
  const Json j = io::to_json(f);
  CHECK(j.dump() == R"({"schema":1,"n":2,"symbol":"none","terms":[{"partition":[2,0],"num":"-3/4","den":"1"}]})");
}

TEST_CASE("malformed documents") {
  const auto bad = [](const char* text) { CHECK_THROWS_AS(io::poly_from_json(Json::parse(text)), ParseError); };
  bad(R"({"n":2,"symbol":"none","terms":[]})");
  bad(R"({"schema":2,"n":2,"symbol":"none","terms":[]})");
  bad(R"({"schema":1,"n":2,"symbol":"x","terms":[]})");
  bad(R"({"schema":1,"n":2,"symbol":"q","terms":[]})");
  bad(R"({"schema":1,"n":2,"symbol":"none","terms":[{"partition":[1,2],"num":"1","den":"1"}]})");
  bad(R"({"schema":1,"n":2,"symbol":"none","terms":[{"partition":[1],"num":"1","den":"1"}]})");
  bad(R"({"schema":1,"n":2,"symbol":"none","terms":[{"partition":[1,0],"num":"1","den":"0"}]})");
  bad(R"({"schema":1,"n":2,"symbol":"none","terms":[{"partition":[1,0],"num":"theta","den":"1"}]})");
  bad(R"({"schema":1,"n":2,"symbol":"none","terms":[{"partition":[1,0],"num":"1","den":"1"},{"partition":[0,0],"num":"1","den":"1"}]})");
  bad(R"({"schema":1,"n":2,"symbol":"none","terms":[{"partition":[1,0],"num":"1","den":"1"},{"partition":[1,0],"num":"1","den":"1"}]})");
  CHECK_NOTHROW(io::poly_from_json(Json::parse(
      R"({"schema":1,"n":2,"symbol":"none","inhomogeneous":true,"terms":[{"partition":[1,0],"num":"1","den":"1"},{"partition":[0,0],"num":"1","den":"1"}]})")));
}

TEST_CASE("series and partitions") {
  const auto s = hilbert_series_theorem(5, 20);
  CHECK(io::series_from_json(Json::parse(io::to_json(s).dump())) == s);
  CHECK_THROWS_AS(io::series_from_json(Json::parse(R"({"schema":1,"bound":3,"coeffs":[1,2]})")), ParseError);
  CHECK(io::partition_from_json(io::to_json(Partition{4, 2, 2, 0})) == Partition{4, 2, 2, 0});
  CHECK_THROWS_AS(io::partition_from_json(Json::parse("[1,\"a\"]")), ParseError);
}
