#pragma once

#include <string>

#include "infhecke/delta_poly.hpp"
#include "infhecke/ncpoly.hpp"

#include <json.hpp>

namespace infhecke {

/// Human-facing form, terms in display order (x-terms first, like the
/// commutator tables): descending lex on (x, y, f, h, e) exponents.
std::string renderPlain(const NcPoly& p);
std::string renderLatex(const NcPoly& p);

/// Compact D-syntax, descending powers: "4D+4", "-1/4D^2+1/4D", "0".
std::string renderPlain(const DeltaPoly& q);
std::string renderLatex(const DeltaPoly& q);

/// Terms in the canonical graded-lex basis order; byte-stable.
nlohmann::ordered_json termsJson(const NcPoly& p);

/// {"z": "<D-syntax>", "terms": [{"f":..,"h":..,"e":..,"y":..,"x":..,"coeff":"p/q"}...]}
nlohmann::ordered_json polyJson(const NcPoly& p, const DeltaPoly& z);

}  // namespace infhecke
