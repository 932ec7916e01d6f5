#pragma once

#include <string>

#include <json.hpp>

#include "hurstlab/dfa.hpp"
#include "hurstlab/divisor.hpp"
#include "hurstlab/errors.hpp"

namespace hurstlab {

inline nlohmann::json plan_to_json(const DivisorPlan& plan) {
    return nlohmann::json{
        {"L", plan.window_length}, {"box_sizes", plan.box_sizes}, {"label", plan.label}};
}

inline DivisorPlan plan_from_json(const nlohmann::json& j) {
    try {
        return make_plan(j.at("L").get<std::size_t>(),
                         j.at("box_sizes").get<std::vector<std::size_t>>(),
                         j.value("label", std::string()));
    } catch (const nlohmann::json::exception& e) {
        throw PlanViolatesInvariants(std::string("malformed plan JSON: ") + e.what());
    }
}

inline nlohmann::json estimate_to_json(const HurstEstimate& est, const FluctuationCurve& curve) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& [n, f] : curve.points) points.push_back({n, f});
    return nlohmann::json{
        {"h", est.h}, {"intercept", est.intercept}, {"r2", est.r_squared}, {"curve", points}};
}

}  // namespace hurstlab
