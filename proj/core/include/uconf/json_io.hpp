#pragma once

#include <stdexcept>
#include <string>

#include "uconf/exotic.hpp"
#include "uconf/power.hpp"
#include "uconf/series.hpp"
#include "uconf/spaces.hpp"

namespace uconf {

/// Malformed input document (bad JSON, missing keys, unparsable numbers).
/// Distinct from the std::invalid_argument / std::domain_error thrown on
/// semantically invalid but well-formed input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Series documents:
//   { "vars": r, "bound": [..], "coeffs": [ { "k": [..], "c": "<string>" } ] }
// Zero coefficients are omitted, entries are sorted graded-lex ascending and
// coefficients are decimal strings (or polynomial text), so output is
// deterministic and exact for any coefficient size.
std::string to_json(const IntSeries& f);
std::string to_json(const PolySeries& f);
IntSeries parse_int_series(const std::string& text);
PolySeries parse_poly_series(const std::string& text);

// Factorization documents:
//   { "vars": r, "bound": [..], "exponents": [ { "m": [..], "s": "<string>" } ] }
std::string to_json(const Factorization& fac);
Factorization parse_factorization(const std::string& text);

// Color-count set specs, e.g. {"kind":"axes","r":2}, {"kind":"max","caps":[3]},
// {"kind":"explicit","points":[[0,0],[1,0],[0,1]]}; kind is one of
// explicit | max | axes | nested | full.
std::string to_json(const ColorCountSet& set);
ColorCountSet parse_color_set(const std::string& text);

// Space specs, e.g. {"kind":"euler","chi":-2}, {"kind":"hd","e":"1+u*v"},
// {"kind":"cells","dims":[0,1,2]}, {"kind":"points","n":4}.  A single-key
// {"space": {...}} wrapper is accepted and unwrapped.
std::string to_json(const SpaceDescriptor& space);
SpaceDescriptor parse_space(const std::string& text);

}  // namespace uconf
