#include "pps/core.hpp"

#include <cmath>
#include <string>

namespace pps {

namespace {

double accumulate_violation(const std::vector<double>& values, const char* kind) {
    double total = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]))
            throw EvaluationError(std::string("non-finite ") + kind + " constraint value at index " +
                                  std::to_string(i));
        if (values[i] < 0.0) total += -values[i];
    }
    return total;
}

} // namespace

double overall_violation(const std::vector<double>& inequalities,
                         const std::vector<double>& transformed_equalities) {
    return accumulate_violation(inequalities, "inequality") +
           accumulate_violation(transformed_equalities, "equality");
}

double transform_equality(double h, double eq_tolerance) {
    if (!(eq_tolerance > 0.0))
        throw ConfigError("eq_tolerance must be positive, got " + std::to_string(eq_tolerance));
    return eq_tolerance - std::fabs(h);
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size())
        throw ContractError("dominates: objective vectors of lengths " + std::to_string(a.size()) +
                            " and " + std::to_string(b.size()));
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strictly_better = true;
    }
    return strictly_better;
}

} // namespace pps
