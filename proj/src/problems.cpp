#include "pps/problems.hpp"

#include <cmath>

namespace pps {

Problem::Problem(std::string name, int dimension, int objectives, int inequalities, int equalities,
                 std::vector<Bounds> bounds, double eq_tolerance)
    : name_(std::move(name)),
      dimension_(dimension),
      objectives_(objectives),
      inequalities_(inequalities),
      equalities_(equalities),
      bounds_(std::move(bounds)),
      eq_tolerance_(eq_tolerance) {
    if (dimension_ < 1) throw ConfigError(name_ + ": dimension must be at least 1");
    if (static_cast<int>(bounds_.size()) != dimension_)
        throw ContractError(name_ + ": bounds length does not match dimension");
    if (eq_tolerance_ <= 0.0) throw ConfigError(name_ + ": eq_tolerance must be positive");
}

Individual Problem::evaluate(const DecisionVector& x) const {
    if (static_cast<int>(x.size()) != dimension_)
        throw ContractError(name_ + ": decision vector of length " + std::to_string(x.size()) +
                            ", expected " + std::to_string(dimension_));
    for (int d = 0; d < dimension_; ++d) {
        const auto& b = bounds_[static_cast<std::size_t>(d)];
        if (!(x[static_cast<std::size_t>(d)] >= b.lower && x[static_cast<std::size_t>(d)] <= b.upper))
            throw ContractError(name_ + ": component " + std::to_string(d) + " out of bounds");
    }

    Individual ind;
    ind.x = x;
    ind.f.assign(static_cast<std::size_t>(objectives_), 0.0);
    eval_objectives(x, ind.f);
    for (int j = 0; j < objectives_; ++j)
        if (!std::isfinite(ind.f[static_cast<std::size_t>(j)]))
            throw EvaluationError(name_ + ": non-finite objective at index " + std::to_string(j));

    std::vector<double> g(static_cast<std::size_t>(inequalities_), 0.0);
    if (inequalities_ > 0) eval_inequalities(x, g);
    std::vector<double> h(static_cast<std::size_t>(equalities_), 0.0);
    if (equalities_ > 0) {
        eval_equalities(x, h);
        for (auto& v : h) v = transform_equality(v, eq_tolerance_);
    }
    ind.violation = overall_violation(g, h);
    return ind;
}

ReferenceFront Problem::reference_front(int count) const {
    if (count < 1) throw ConfigError(name_ + ": reference front size must be at least 1");
    if (!has_reference_front())
        throw UnsupportedError(name_ + ": no analytic reference front available");
    ReferenceFront front;
    front.points.reserve(static_cast<std::size_t>(count));
    sample_front(count, front.points);
    return front;
}

void Problem::eval_inequalities(const DecisionVector&, std::vector<double>&) const {}
void Problem::eval_equalities(const DecisionVector&, std::vector<double>&) const {}
void Problem::sample_front(int, std::vector<ObjectiveVector>&) const {
    throw UnsupportedError(name_ + ": no analytic reference front available");
}

namespace {

// Uniform parameters over [0, 1] including both endpoints; midpoint for a
// single-point request.
std::vector<double> front_parameters(int count) {
    std::vector<double> t(static_cast<std::size_t>(count));
    if (count == 1) {
        t[0] = 0.5;
        return t;
    }
    for (int i = 0; i < count; ++i)
        t[static_cast<std::size_t>(i)] = static_cast<double>(i) / static_cast<double>(count - 1);
    return t;
}

} // namespace

DeskProblem::DeskProblem(std::string name, int dimension, int inequalities, int equalities)
    : Problem(std::move(name), dimension, 2, inequalities, equalities,
              std::vector<Bounds>(static_cast<std::size_t>(dimension), Bounds{0.0, 1.0})) {
    if (dimension < 2) throw ConfigError(this->name() + ": dimension must be at least 2");
}

double DeskProblem::distance_term(const DecisionVector& x) const {
    double g = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) g += x[i] * x[i];
    return g;
}

void DeskProblem::eval_objectives(const DecisionVector& x, ObjectiveVector& f) const {
    const double g = distance_term(x);
    f[0] = x[0];
    f[1] = 1.0 - x[0] + g;
}

DeskBlock::DeskBlock(int dimension) : DeskProblem("deskcmop-block", dimension, 1, 0) {}

void DeskBlock::eval_inequalities(const DecisionVector& x, std::vector<double>& g) const {
    const double sum = 1.0 + distance_term(x); // f1 + f2 collapses to 1 + g(x)
    g[0] = std::fabs(sum - 1.2) - 0.1;
}

void DeskBlock::sample_front(int count, std::vector<ObjectiveVector>& points) const {
    for (double t : front_parameters(count)) points.push_back({t, 1.0 - t});
}

DeskBoundary::DeskBoundary(int dimension) : DeskProblem("deskcmop-boundary", dimension, 1, 0) {}

void DeskBoundary::eval_inequalities(const DecisionVector& x, std::vector<double>& g) const {
    g[0] = 1.0 + distance_term(x) - 1.1;
}

void DeskBoundary::sample_front(int count, std::vector<ObjectiveVector>& points) const {
    for (double t : front_parameters(count)) points.push_back({t, 1.1 - t});
}

DeskPartial::DeskPartial(int dimension) : DeskProblem("deskcmop-partial", dimension, 1, 0) {}

void DeskPartial::eval_inequalities(const DecisionVector& x, std::vector<double>& g) const {
    const double d = x[0] - 0.45;
    g[0] = d * d - 0.0225;
}

void DeskPartial::sample_front(int count, std::vector<ObjectiveVector>& points) const {
    // Uniform along the two surviving segments f1 in [0, 0.3] and [0.6, 1],
    // parameterized by combined length 0.7.
    for (double t : front_parameters(count)) {
        const double s = 0.7 * t;
        const double f1 = s <= 0.3 ? s : s + 0.3;
        points.push_back({f1, 1.0 - f1});
    }
}

DeskEquality::DeskEquality(int dimension) : DeskProblem("deskcmop-eq", dimension, 0, 1) {}

void DeskEquality::eval_equalities(const DecisionVector& x, std::vector<double>& h) const {
    h[0] = x[1] - 0.2;
}

void DeskEquality::sample_front(int count, std::vector<ObjectiveVector>& points) const {
    for (double t : front_parameters(count)) points.push_back({t, 1.04 - t});
}

const std::map<std::string, ProblemFactory>& problem_registry() {
    static const std::map<std::string, ProblemFactory> registry = {
        {"deskcmop-block", [](int n) -> std::unique_ptr<Problem> { return std::make_unique<DeskBlock>(n); }},
        {"deskcmop-boundary", [](int n) -> std::unique_ptr<Problem> { return std::make_unique<DeskBoundary>(n); }},
        {"deskcmop-partial", [](int n) -> std::unique_ptr<Problem> { return std::make_unique<DeskPartial>(n); }},
        {"deskcmop-eq", [](int n) -> std::unique_ptr<Problem> { return std::make_unique<DeskEquality>(n); }},
    };
    return registry;
}

std::unique_ptr<Problem> make_problem(const std::string& name, int dimension) {
    const auto& registry = problem_registry();
    auto it = registry.find(name);
    if (it == registry.end()) {
        std::string known;
        for (const auto& [key, factory] : registry) {
            if (!known.empty()) known += ", ";
            known += key;
        }
        throw ConfigError("unknown problem '" + name + "' (known: " + known + ")");
    }
    return it->second(dimension);
}

std::vector<std::string> problem_names() {
    std::vector<std::string> names;
    for (const auto& [key, factory] : problem_registry()) names.push_back(key);
    return names;
}

} // namespace pps
