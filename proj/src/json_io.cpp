#include "crl/json_io.hpp"

#include "crl/errors.hpp"

namespace crl::io {

namespace {

const char* symbol_name(Symbol s) {
  switch (s) {
    case Symbol::Theta: return "theta";
    case Symbol::Q: return "q";
    case Symbol::None: break;
  }
  return "none";
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("bad type for field \"") + key + "\"");
  }
}

void check_schema(const Json& j) {
  if (field<int>(j, "schema") != kSchema) throw ParseError("unsupported schema version");
}

}  // namespace

std::string to_string(Symbol s) { return symbol_name(s); }

Symbol symbol_from_string(const std::string& s) {
  if (s == "none") return Symbol::None;
  if (s == "theta") return Symbol::Theta;
  if (s == "q") return Symbol::Q;
  throw ParseError("unknown symbol \"" + s + "\"");
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("partition must be an integer array");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("partition must be an integer array");
    parts.push_back(v.get<int>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const PolyDoc& doc) {
  const std::string sym = symbol_name(doc.symbol);
  Json j;
  j["schema"] = kSchema;
  j["n"] = doc.n;
  j["symbol"] = sym;
  if (doc.t0) j["t0"] = doc.t0->str();
  if (doc.inhomogeneous) j["inhomogeneous"] = true;
  Json terms = Json::array();
  for (const auto& [l, c] : doc.poly.terms()) {
    if (doc.symbol == Symbol::None && !c.is_constant())
      throw std::invalid_argument("non-constant coefficient with symbol none");
    Json t;
    t["partition"] = to_json(l);
    t["num"] = c.num().str(sym);
    t["den"] = c.den().str(sym);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const SymPoly<Rat>& f) {
  PolyDoc doc{f.n(), Symbol::None, std::nullopt, false, map_coeffs<RatFunc>(f, [](const Rat& r) { return RatFunc(r); })};
  return to_json(doc);
}

namespace {

PolyDoc poly_from_json_unchecked(const Json& j) {
  check_schema(j);
  PolyDoc doc;
  doc.n = field<int>(j, "n");
  if (doc.n < 0) throw ParseError("negative n");
  doc.symbol = symbol_from_string(field<std::string>(j, "symbol"));
  const std::string sym = symbol_name(doc.symbol);
  if (j.contains("t0")) doc.t0 = Rat::parse(field<std::string>(j, "t0"));
  if (doc.symbol == Symbol::Q && !doc.t0) throw ParseError("symbol q requires t0");
  if (j.contains("inhomogeneous")) doc.inhomogeneous = field<bool>(j, "inhomogeneous");
  doc.poly = SymPoly<RatFunc>(doc.n);
  const Json& terms = j.at("terms");
  if (!terms.is_array()) throw ParseError("terms must be an array");
  for (const auto& t : terms) {
    const Partition l = partition_from_json(t.at("partition"));
    if (l.length() != doc.n) throw ParseError("partition " + l.str() + " does not have n parts");
    if (doc.poly.terms().count(l)) throw ParseError("repeated partition " + l.str());
    const auto num = UniPoly::parse(field<std::string>(t, "num"), sym);
    const auto den = UniPoly::parse(field<std::string>(t, "den"), sym);
    if (den.is_zero()) throw ParseError("zero denominator");
    if (doc.symbol == Symbol::None && !(num.is_constant() && den.is_constant()))
      throw ParseError("symbol none requires rational coefficients");
    const RatFunc c(num, den);
    if (c.is_zero()) throw ParseError("zero coefficient for " + l.str());
    doc.poly.add_term(l, c);
  }
  if (!doc.inhomogeneous && !doc.poly.is_homogeneous()) throw ParseError("inhomogeneous terms without the flag");
  return doc;
}

}  // namespace

PolyDoc poly_from_json(const Json& j) {
  try {
    return poly_from_json_unchecked(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const SeriesTable& s) {
  Json j;
  j["schema"] = kSchema;
  j["bound"] = s.bound;
  j["coeffs"] = s.coeffs;
  return j;
}

SeriesTable series_from_json(const Json& j) {
  check_schema(j);
  SeriesTable s(field<int>(j, "bound"));
  const auto c = field<std::vector<long>>(j, "coeffs");
  if (s.bound < 0 || c.size() != s.coeffs.size()) throw ParseError("series length does not match bound");
  s.coeffs = c;
  return s;
}

}  // namespace crl::io
