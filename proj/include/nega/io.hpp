#ifndef NEGA_IO_HPP
#define NEGA_IO_HPP

#include <json.hpp>

#include "nega/negacode.hpp"

namespace nega {

/// {"family":"F1","a":"1","b":"0 1"}; parameter fields omitted when absent.
nlohmann::json spec_to_json(const IdealSpec& spec);
IdealSpec spec_from_json(const nlohmann::json& j, int m);

/// {"n":7,"components":[...]}
nlohmann::json code_to_json(const NegacyclicCode& code);
NegacyclicCode code_from_json(const nlohmann::json& j, const FactorizationContext& ctx);

nlohmann::json z4_code_to_json(const Z4LinearCode& code, bool with_binary);

}  // namespace nega

#endif
