#pragma once

#include "cbethe/qexpr.hpp"
#include "cbethe/verify.hpp"

#include <json.hpp>

namespace cbethe {

// [{ "coef": "-1", "factors": [{ "kind": "Q", "color": 2, "shift": "1/2", "exp": -1 }] }]
nlohmann::json to_json(const QExpr& e);
QExpr qexpr_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DvfReport& r);
nlohmann::json to_json(const RelationReport& r);

std::string mode_name(VerifyMode m);

}  // namespace cbethe
