#pragma once

#include <json.hpp>
#include <string>

#include "eqc/equivariant.hpp"
#include "eqc/laurent.hpp"
#include "eqc/pillowcase.hpp"
#include "eqc/seifert.hpp"

namespace eqc::io {

using nlohmann::ordered_json;

ordered_json rational(const Rational& r);  // "p/q" string
ordered_json integer(const Integer& a);    // "n" string
ordered_json count(const Integer& a);      // number when it fits in 64 bits
ordered_json laurent(const LaurentPoly& p);  // [[exponent, coefficient], ...]
ordered_json flags(const std::set<HypothesisFlag>& f);
ordered_json curve(const PillowcaseCurve& c);
ordered_json seifert(const SeifertMatrix& v);
ordered_json equivariant(const EquivariantReport& r);

// {"matrix": [[...]]}; InvalidInput on anything else
SeifertMatrix parse_seifert(const ordered_json& doc);
SeifertMatrix read_seifert_file(const std::string& path);

}  // namespace eqc::io
