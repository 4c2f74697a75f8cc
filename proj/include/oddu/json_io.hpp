#pragma once

#include <json.hpp>

#include "oddu/vaserstein.hpp"

namespace oddu {

using json = nlohmann::json;

// Ring: {"descriptor":"mod","k":5,"involution":"negation"}
json ring_to_json(const Ring& ring);
Ring ring_from_json(const json& j);

// Scalar: plain integer rings serialize as a number (or decimal string when
// outside int64 range); Gaussian rings as [re, im].
json scalar_to_json(const Ring& ring, const Scalar& s);
Scalar scalar_from_json(const Ring& ring, const json& j);

json scalar_vec_to_json(const Ring& ring, const std::vector<Scalar>& v);
std::vector<Scalar> scalar_vec_from_json(const Ring& ring, const json& j);

// Matrix: {"ring":..., "rows":r, "cols":c, "entries":[[..],..]}
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// ElementaryWord: {"size":k, "factors":[[i,j,r],...]} (ring from context).
json word_to_json(const ElementaryWord& w);
ElementaryWord word_from_json(const Ring& ring, const json& j);

// SpaceConfig: {"ring":..., "m":1, "n":2, "phi":..., "phi_inv":...}
json space_to_json(const SpaceConfig& cfg);
SpaceConfig space_from_json(const json& j);

// HeisElem: {"u":[...], "r":...}
json heis_to_json(const Ring& ring, const HeisElem& h);
HeisElem heis_from_json(const Ring& ring, const json& j);

// VVector: {"v":[...]}
json vvector_to_json(const Ring& ring, const VVector& v);
VVector vvector_from_json(const Ring& ring, const json& j);

// ConjugationResult: {"kind":"t_minus1"|"t_plus1","u":[...],"a":...,"witness":...}
json conjugation_to_json(const Ring& ring, const ConjugationResult& res);
ConjugationResult conjugation_from_json(const Ring& ring, const json& j);

// TransvectionSpec: tagged by "kind" in {"esd","short","ultrashort","long",
// "t_plus1","t_minus1"}, with "order" in {"hyperbolic_first","module_first"}.
json transvection_to_json(const Ring& ring, const TransvectionSpec& spec);
TransvectionSpec transvection_from_json(const Ring& ring, const json& j);

/// Parse with ParseError on malformed text.
json parse_json_text(const std::string& text);

} // namespace oddu
