#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "crl/partitions.hpp"
#include "crl/ratfunc.hpp"
#include "crl/series.hpp"
#include "crl/sympoly.hpp"

namespace crl::io {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

enum class Symbol { None, Theta, Q };
std::string to_string(Symbol s);
Symbol symbol_from_string(const std::string& s);  ///< throws ParseError

/// A serialized symmetric polynomial. Rational coefficients are stored as
/// constant functions with symbol None.
struct PolyDoc {
  int n = 0;
  Symbol symbol = Symbol::None;
  std::optional<Rat> t0;  ///< written for symbol q
  bool inhomogeneous = false;
  SymPoly<RatFunc> poly;
};

Json to_json(const PolyDoc& doc);
Json to_json(const SymPoly<Rat>& f);
/// Throws ParseError on any schema violation.
PolyDoc poly_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const SeriesTable& s);
SeriesTable series_from_json(const Json& j);

}  // namespace crl::io
