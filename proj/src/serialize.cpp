#include "tworat/serialize.hpp"

namespace tworat {

Json to_json(const AbelianGroupStructure& g) { return Json(g.invariant_factors); }

Json to_json(const Evidence& e) { return Json{{"condition", e.condition}, {"values", e.values}, {"ok", e.ok}}; }

Json to_json(const MultiquadField& F) { return Json(F.basis_values()); }

Json to_json(const Verdict& v) {
    Json ev = Json::array();
    for (const auto& e : v.evidence) ev.push_back(to_json(e));
    Json out{{"positive", v.positive}, {"tag", to_string(v.tag)}};
    out["reason"] = v.reason.empty() ? Json(nullptr) : Json(v.reason);
    out["evidence"] = std::move(ev);
    return out;
}

Json to_json(const RayClassReport& r) {
    Json levels = Json::array();
    for (const auto& l : r.per_level) levels.push_back({{"k", l.k}, {"structure", to_json(l.structure)}});
    return Json{{"schema", kSchemaVersion},
                {"p", r.p},
                {"q", r.q},
                {"per_level", std::move(levels)},
                {"stabilization_level", r.stabilization_level},
                {"structure", to_json(r.structure)},
                {"stabilized_order", r.stabilized_order},
                {"quadratic_character", r.quadratic_character.value()}};
}

Json to_json(const StepCertificate& s) {
    Json obs = Json::array();
    for (const auto& o : s.obligations) {
        obs.push_back({{"name", o.name}, {"status", to_string(o.status)}, {"detail", o.detail}});
    }
    return Json{{"index", s.index},
                {"choice", std::string(1, to_char(s.choice))},
                {"ramified_place", s.ramified_place},
                {"split_place", s.split_place},
                {"obligations", std::move(obs)}};
}

Json to_json(const RealizedStep& r) {
    return Json{{"Kprime", r.Kprime.value()}, {"Lprime", to_json(r.Lprime)}, {"verdict", to_json(r.verdict)}};
}

Json to_json(const TowerPlan& plan) {
    Json steps = Json::array();
    for (const auto& s : plan.steps) steps.push_back(to_json(s));
    Json out{{"schema", kSchemaVersion},
             {"base", {plan.base_p, plan.base_q}},
             {"choices", plan.choices},
             {"steps", std::move(steps)}};
    out["realized_step1"] = plan.realized_step1 ? to_json(*plan.realized_step1) : Json(nullptr);
    return out;
}

Json to_json(const TowerProfile& profile) {
    Json levels = Json::array();
    for (const auto& l : profile.levels) levels.push_back({{"n", l.n}, {"f", l.f}, {"g", l.g}});
    return Json{{"prime", profile.prime}, {"levels", std::move(levels)}};
}

std::string join_cell(const std::vector<i64>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace tworat
