#pragma once

#include <json.hpp>

#include "tworat/classify.hpp"
#include "tworat/group.hpp"
#include "tworat/quadforms.hpp"
#include "tworat/rayclass.hpp"
#include "tworat/tower.hpp"
#include "tworat/towerdec.hpp"

namespace tworat {

inline constexpr int kSchemaVersion = 1;

// Keys keep insertion order so output reads in a fixed, documented layout.
using Json = nlohmann::ordered_json;

Json to_json(const AbelianGroupStructure& g);
Json to_json(const Evidence& e);
Json to_json(const Verdict& v);
Json to_json(const MultiquadField& F);
Json to_json(const RayClassReport& r);
Json to_json(const StepCertificate& s);
Json to_json(const RealizedStep& r);
Json to_json(const TowerPlan& plan);
Json to_json(const TowerProfile& profile);

// Semicolon-joined text for CSV cells.
std::string join_cell(const std::vector<i64>& xs);

}  // namespace tworat
