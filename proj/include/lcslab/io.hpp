#pragma once

#include "lcslab/charmod.hpp"
#include "lcslab/derham.hpp"
#include "lcslab/lie.hpp"
#include "lcslab/ncalg.hpp"

#include <json.hpp>

#include <string_view>

namespace lcslab::io {

// NcPoly <-> JSON: array of {"word": [1-based generator indices],
// "coeff": "p/q"}, terms sorted in canonical (deglex) word order.
nlohmann::json nc_poly_to_json(const ncalg::NcPoly& p);
ncalg::NcPoly nc_poly_from_json(const nlohmann::json& j, int ngens);

// DiffForm -> JSON: array of {"expo": [...], "dx": [1-based ascending
// indices], "coeff": "p/q"}, sorted by total degree then mask then exponents.
nlohmann::json diff_form_to_json(const derham::DiffForm& f);

nlohmann::json char_series_to_json(const charmod::CharSeries& s);

nlohmann::json zpoly_to_json(const lie::ZPoly& p);

// Minimal commutative polynomial grammar over variables x1..xn:
//   expr   = [ "-" ] term { ( "+" | "-" ) term } ;
//   term   = factor { "*" factor } ;
//   factor = base [ "^" number ] ;
//   base   = number | variable | "(" expr ")" ;
//   variable = "x" number ;
//   number = digit { digit } ;
// Returns a 0-form. Throws std::invalid_argument on syntax errors.
derham::DiffForm parse_commutative_poly(std::string_view text, int nvars);

} // namespace lcslab::io
