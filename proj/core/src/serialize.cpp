#include "qpbraid/serialize.hpp"

#include <limits>

namespace qpbraid {

using nlohmann::json;

json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

json to_json(const GarsideForm& f) {
  json factors = json::array();
  for (const auto s : f.factors()) factors.push_back(std::string(render(s)));
  return {{"delta_power", to_json(f.delta_power())}, {"factors", factors}, {"word", render(f.to_word())},
          {"rendered", render(f)}};
}

json to_json(const StandardForm& sf) {
  json syllables = json::array();
  for (const auto& a : sf.syllables) syllables.push_back(to_json(a));
  return {{"p", to_json(sf.p)},
          {"syllables", syllables},
          {"conjugator", render(sf.conjugator)},
          {"e", to_json(sf.exponent_sum())},
          {"word", render(sf.realize())}};
}

json to_json(const ReducedStandardForm& rf) {
  json j = to_json(rf.base);
  j["case"] = case_number(rf.case_tag);
  j["case_name"] = std::string(case_name(rf.case_tag));
  j["m"] = rf.base.m();
  return j;
}

json to_json(const PositivityVerdict& v) {
  json j;
  j["outcome"] = std::string(outcome_name(v.outcome));
  j["route"] = std::string(route_name(v.route));
  j["e"] = to_json(v.exponent_sum);
  if (v.obstruction) {
    const auto ineq = v.obstruction->inequality();
    j["p"] = to_json(v.obstruction->p);
    j["m"] = to_json(v.obstruction->m);
    j["inequality"] = {{"lhs", to_json(ineq.lhs)}, {"mid", to_json(ineq.mid)}, {"rhs", to_json(ineq.rhs)},
                       {"holds", ineq.holds()}};
  } else {
    j["p"] = nullptr;
    j["m"] = nullptr;
    j["inequality"] = nullptr;
  }
  json bands = json::array();
  for (const auto& b : v.bands) {
    bands.push_back({{"conjugator", render(b.conjugator)}, {"generator", std::string(generator_token(b.generator))}});
  }
  j["bands"] = bands;
  j["bound"] = v.bound ? json(*v.bound) : json(nullptr);
  if (v.monoid_base) {
    j["monoid_base"] = render(*v.monoid_base);
    j["monoid_suffix"] = render(*v.monoid_suffix);
  }
  if (!v.diagnostic.empty()) j["diagnostic"] = v.diagnostic;
  return j;
}

json to_json(const MonodromyVerdict& v) {
  json j = to_json(v.verdict);
  j["twist_word"] = render(v.twist_word);
  j["braid_image"] = render(v.braid_image);
  return j;
}

}  // namespace qpbraid
