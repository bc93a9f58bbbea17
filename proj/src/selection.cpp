#include "pps/selection.hpp"

namespace pps {

std::optional<ConstraintHandler> handler_from_name(const std::string& name) {
    if (name == "pps") return ConstraintHandler::Pps;
    if (name == "cdp") return ConstraintHandler::Cdp;
    if (name == "sr") return ConstraintHandler::Sr;
    if (name == "epsilon") return ConstraintHandler::StaticEpsilon;
    return std::nullopt;
}

std::string handler_name(ConstraintHandler handler) {
    switch (handler) {
        case ConstraintHandler::Pps: return "pps";
        case ConstraintHandler::Cdp: return "cdp";
        case ConstraintHandler::Sr: return "sr";
        case ConstraintHandler::StaticEpsilon: return "epsilon";
    }
    return "unknown";
}

bool push_replace(const Individual& incumbent, const Individual& child, const WeightVector& weight,
                  const ObjectiveVector& ideal) {
    return tchebycheff(child.f, weight, ideal) <= tchebycheff(incumbent.f, weight, ideal);
}

bool pull_replace(const Individual& incumbent, const Individual& child, const WeightVector& weight,
                  const ObjectiveVector& ideal, double epsilon) {
    if (child.violation <= epsilon && incumbent.violation <= epsilon)
        return push_replace(incumbent, child, weight, ideal);
    if (child.violation == incumbent.violation)
        return push_replace(incumbent, child, weight, ideal);
    return child.violation < incumbent.violation;
}

bool cdp_replace(const Individual& incumbent, const Individual& child, const WeightVector& weight,
                 const ObjectiveVector& ideal) {
    if (child.feasible() && incumbent.feasible())
        return push_replace(incumbent, child, weight, ideal);
    if (child.violation == incumbent.violation)
        return push_replace(incumbent, child, weight, ideal);
    return child.violation < incumbent.violation;
}

bool sr_replace(const Individual& incumbent, const Individual& child, const WeightVector& weight,
                const ObjectiveVector& ideal, double p_f, Rng& rng) {
    if (rng.uniform() < p_f) return push_replace(incumbent, child, weight, ideal);
    return cdp_replace(incumbent, child, weight, ideal);
}

} // namespace pps
