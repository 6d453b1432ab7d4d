#pragma once

#include "arithmon/arith.hpp"
#include "arithmon/rational.hpp"

#include <json.hpp>

namespace arithmon {

/// JSON forms used by the CLI. All integers are decimal strings, so
/// arbitrarily large values survive any JSON parser unharmed.
///
///   zero element        {"zero":true}
///   normal form         {"dom":{"mod":"a","res":"b"},"img":{"mod":"c","res":"d"}}
///   congruence class    {"mod":"a","res":"b"}
///   rational            {"num":"p","den":"q"}

nlohmann::json to_json(const CongruenceClass& c);
nlohmann::json to_json(const ArithElement& e);
nlohmann::json to_json(const Rational& q);

CongruenceClass class_from_json(const nlohmann::json& j);
ArithElement arith_from_json(const nlohmann::json& j);

}  // namespace arithmon
