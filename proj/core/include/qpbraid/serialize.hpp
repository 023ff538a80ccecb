#pragma once

#include <nlohmann/json.hpp>

#include "qpbraid/garside.hpp"
#include "qpbraid/mcg.hpp"
#include "qpbraid/quasipositivity.hpp"
#include "qpbraid/standard_form.hpp"

namespace qpbraid {

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise. Braid words are emitted in the input grammar.
nlohmann::json to_json(const Integer& x);

nlohmann::json to_json(const GarsideForm& f);
// {p, syllables, conjugator, e, word}
nlohmann::json to_json(const StandardForm& sf);
// StandardForm fields plus {case, case_name, m}
nlohmann::json to_json(const ReducedStandardForm& rf);
// {outcome, route, p, m, e, inequality: {lhs, mid, rhs}, bands: [...], bound, ...}
nlohmann::json to_json(const PositivityVerdict& v);
nlohmann::json to_json(const MonodromyVerdict& v);

}  // namespace qpbraid
