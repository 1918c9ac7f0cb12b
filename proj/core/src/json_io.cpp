#include "uconf/json_io.hpp"

#include <set>
#include <utility>
#include <vector>

#include <json.hpp>

namespace uconf {

namespace {

using Json = nlohmann::ordered_json;

Json parse_root(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

// Small ints (indices, bounds, arities) travel as plain JSON numbers; only
// unbounded coefficients need the string encoding.
std::vector<int> small_int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError(std::string(what) + ": expected integers");
    out.push_back(e.get<int>());
  }
  return out;
}

MultiIndex multi_index_from(const Json& j, const char* what) {
  try {
    return MultiIndex(small_int_array(j, what));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::int64_t int64_from(const Json& j, const char* what) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    try {
      return std::stoll(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ParseError(std::string(what) + ": expected an integer");
}

BigInt bigint_from(const Json& j, const char* what) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ParseError(std::string(what) + ": expected a decimal integer");
}

const Json& require(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

Json bound_json(const DegreeBound& bound) {
  Json arr = Json::array();
  for (int i = 0; i < bound.vars(); ++i) arr.push_back(bound.limit()[i]);
  return arr;
}

Json index_json(const MultiIndex& k) {
  Json arr = Json::array();
  for (int i = 0; i < k.vars(); ++i) arr.push_back(k[i]);
  return arr;
}

DegreeBound bound_from(const Json& doc) {
  const int vars = static_cast<int>(int64_from(require(doc, "vars"), "vars"));
  MultiIndex limit = multi_index_from(require(doc, "bound"), "bound");
  if (limit.vars() != vars) throw ParseError("bound: length disagrees with vars");
  return DegreeBound(std::move(limit));
}

template <typename Coeff, typename CoeffToString>
Json series_json(const TruncatedSeries<Coeff>& f, CoeffToString&& coeff_str) {
  Json doc;
  doc["vars"] = f.vars();
  doc["bound"] = bound_json(f.bound());
  Json coeffs = Json::array();
  for (const MultiIndex& k : f.bound().indices_grlex()) {
    const Coeff& c = f.at(k);
    if (is_zero(c)) continue;
    Json entry;
    entry["k"] = index_json(k);
    entry["c"] = coeff_str(c);
    coeffs.push_back(std::move(entry));
  }
  doc["coeffs"] = std::move(coeffs);
  return doc;
}

template <typename Coeff, typename CoeffFrom>
TruncatedSeries<Coeff> series_from(const std::string& text, CoeffFrom&& coeff_from) {
  const Json doc = parse_root(text);
  TruncatedSeries<Coeff> f(bound_from(doc));
  std::set<std::vector<int>> seen;
  for (const auto& entry : require(doc, "coeffs")) {
    MultiIndex k = multi_index_from(require(entry, "k"), "coeffs.k");
    if (!f.bound().contains(k)) throw ParseError("coeffs.k: index outside the bound");
    if (!seen.insert(k.entries()).second) throw ParseError("coeffs: duplicate multi-index");
    f.set(k, coeff_from(require(entry, "c")));
  }
  return f;
}

}  // namespace

std::string to_json(const IntSeries& f) {
  return series_json(f, [](const BigInt& c) { return c.str(); }).dump(2);
}

std::string to_json(const PolySeries& f) {
  return series_json(f, [](const BivarPoly& c) { return to_string(c); }).dump(2);
}

IntSeries parse_int_series(const std::string& text) {
  return series_from<BigInt>(text, [](const Json& j) { return bigint_from(j, "coeffs.c"); });
}

PolySeries parse_poly_series(const std::string& text) {
  return series_from<BivarPoly>(text, [](const Json& j) {
    if (j.is_number_integer()) return BivarPoly(BigInt(j.get<std::int64_t>()));
    if (!j.is_string()) throw ParseError("coeffs.c: expected polynomial text");
    try {
      return parse_poly(j.get<std::string>());
    } catch (const PolyParseError& e) {
      throw ParseError(std::string("coeffs.c: ") + e.what());
    }
  });
}

std::string to_json(const Factorization& fac) {
  Json doc;
  doc["vars"] = fac.bound.vars();
  doc["bound"] = bound_json(fac.bound);
  Json exps = Json::array();
  for (const auto& [m, s] : fac.exponents) {
    if (is_zero(s)) continue;
    Json entry;
    entry["m"] = index_json(m);
    entry["s"] = s.str();
    exps.push_back(std::move(entry));
  }
  doc["exponents"] = std::move(exps);
  return doc.dump(2);
}

Factorization parse_factorization(const std::string& text) {
  const Json doc = parse_root(text);
  Factorization fac{bound_from(doc), {}};
  for (const auto& entry : require(doc, "exponents")) {
    MultiIndex m = multi_index_from(require(entry, "m"), "exponents.m");
    if (m.is_zero()) throw ParseError("exponents.m: the zero multi-index is not allowed");
    if (!fac.bound.contains(m)) throw ParseError("exponents.m: index outside the bound");
    BigInt s = bigint_from(require(entry, "s"), "exponents.s");
    if (is_zero(s)) continue;
    if (!fac.exponents.emplace(std::move(m), std::move(s)).second) {
      throw ParseError("exponents: duplicate multi-index");
    }
  }
  return fac;
}

std::string to_json(const ColorCountSet& set) {
  Json doc;
  switch (set.kind()) {
    case ColorCountSet::Kind::Explicit: {
      doc["kind"] = "explicit";
      doc["r"] = set.vars();
      Json pts = Json::array();
      for (const MultiIndex& p : set.points()) pts.push_back(index_json(p));
      doc["points"] = std::move(pts);
      break;
    }
    case ColorCountSet::Kind::MaxCounts:
      doc["kind"] = "max";
      doc["r"] = set.vars();
      doc["caps"] = set.caps();
      break;
    case ColorCountSet::Kind::AxesOnly:
      doc["kind"] = "axes";
      doc["r"] = set.vars();
      break;
    case ColorCountSet::Kind::Nested:
      doc["kind"] = "nested";
      doc["r"] = set.vars();
      break;
    case ColorCountSet::Kind::Full:
      doc["kind"] = "full";
      doc["r"] = set.vars();
      break;
  }
  return doc.dump(2);
}

ColorCountSet parse_color_set(const std::string& text) {
  const Json doc = parse_root(text);
  const std::string kind = require(doc, "kind").is_string()
                               ? require(doc, "kind").get<std::string>()
                               : throw ParseError("kind: expected a string");

  auto vars_field = [&](bool required) -> int {
    auto it = doc.find("r");
    if (it == doc.end()) {
      if (required) throw ParseError("missing key \"r\"");
      return -1;
    }
    return static_cast<int>(int64_from(*it, "r"));
  };

  if (kind == "explicit") {
    const Json& pts = require(doc, "points");
    if (!pts.is_array()) throw ParseError("points: expected an array");
    std::vector<MultiIndex> points;
    for (const auto& p : pts) points.push_back(multi_index_from(p, "points"));
    if (points.empty()) throw std::invalid_argument("color set: explicit list may not be empty");
    int r = vars_field(false);
    if (r >= 0 && r != points.front().vars()) {
      throw ParseError("points: arity disagrees with \"r\"");
    }
    return ColorCountSet::explicit_set(std::move(points));
  }
  if (kind == "max") {
    std::vector<int> caps = small_int_array(require(doc, "caps"), "caps");
    int r = vars_field(false);
    if (r >= 0 && r != static_cast<int>(caps.size())) {
      throw ParseError("caps: length disagrees with \"r\"");
    }
    return ColorCountSet::max_counts(std::move(caps));
  }
  if (kind == "axes") return ColorCountSet::axes_only(vars_field(true));
  if (kind == "nested") return ColorCountSet::nested(vars_field(true));
  if (kind == "full") return ColorCountSet::full(vars_field(true));
  throw ParseError("kind: unknown color set kind \"" + kind + "\"");
}

std::string to_json(const SpaceDescriptor& space) {
  Json doc;
  if (space.is<SpaceDescriptor::EulerOnly>()) {
    doc["kind"] = "euler";
    doc["chi"] = space.as<SpaceDescriptor::EulerOnly>().chi;
  } else if (space.is<SpaceDescriptor::HodgeDeligne>()) {
    doc["kind"] = "hd";
    doc["e"] = to_string(space.as<SpaceDescriptor::HodgeDeligne>().e);
  } else if (space.is<SpaceDescriptor::CellComplex>()) {
    doc["kind"] = "cells";
    doc["dims"] = space.as<SpaceDescriptor::CellComplex>().cell_dims;
  } else {
    doc["kind"] = "points";
    doc["n"] = space.as<SpaceDescriptor::FinitePoints>().n;
  }
  return doc.dump(2);
}

SpaceDescriptor parse_space(const std::string& text) {
  Json doc = parse_root(text);
  if (doc.is_object() && doc.size() == 1 && doc.contains("space")) doc = doc["space"];
  const Json& kind_j = require(doc, "kind");
  if (!kind_j.is_string()) throw ParseError("kind: expected a string");
  const std::string kind = kind_j.get<std::string>();

  if (kind == "euler") return SpaceDescriptor::from_euler(int64_from(require(doc, "chi"), "chi"));
  if (kind == "hd") {
    const Json& e = require(doc, "e");
    if (!e.is_string()) throw ParseError("e: expected polynomial text");
    try {
      return SpaceDescriptor::from_hodge_deligne(parse_poly(e.get<std::string>()));
    } catch (const PolyParseError& err) {
      throw ParseError(std::string("e: ") + err.what());
    }
  }
  if (kind == "cells") {
    return SpaceDescriptor::from_cells(small_int_array(require(doc, "dims"), "dims"));
  }
  if (kind == "points") return SpaceDescriptor::from_points(int64_from(require(doc, "n"), "n"));
  throw ParseError("kind: unknown space kind \"" + kind + "\"");
}

}  // namespace uconf
