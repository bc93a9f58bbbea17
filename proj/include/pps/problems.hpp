#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pps/core.hpp"

namespace pps {

/// Discretization of a problem's true Pareto front in objective space.
struct ReferenceFront {
    std::vector<ObjectiveVector> points;

    int size() const { return static_cast<int>(points.size()); }
};

/// A box-bounded constrained multi-objective problem. Inequality constraints
/// are satisfied when >= 0; equality constraints are handled through the
/// tolerance transform, so an Individual's violation is 0 exactly when every
/// constraint holds.
class Problem {
public:
    virtual ~Problem() = default;

    const std::string& name() const { return name_; }
    int dimension() const { return dimension_; }
    int num_objectives() const { return objectives_; }
    int num_inequalities() const { return inequalities_; }
    int num_equalities() const { return equalities_; }
    const std::vector<Bounds>& bounds() const { return bounds_; }
    double eq_tolerance() const { return eq_tolerance_; }

    /// Evaluates x into an immutable Individual. Throws ContractError when x
    /// has the wrong length or leaves the bounds, and EvaluationError when an
    /// objective or constraint comes out non-finite.
    Individual evaluate(const DecisionVector& x) const;

    virtual bool has_reference_front() const { return false; }

    /// Uniform discretization of the analytic Pareto front with `count`
    /// mutually non-dominated points. Throws UnsupportedError when no
    /// analytic front is known and ConfigError when count < 1.
    ReferenceFront reference_front(int count) const;

    /// Conventional front density for quality indicators.
    int default_front_size() const { return objectives_ >= 3 ? 10000 : 1000; }

protected:
    Problem(std::string name, int dimension, int objectives, int inequalities, int equalities,
            std::vector<Bounds> bounds, double eq_tolerance = 1e-4);

    virtual void eval_objectives(const DecisionVector& x, ObjectiveVector& f) const = 0;
    virtual void eval_inequalities(const DecisionVector& x, std::vector<double>& g) const;
    virtual void eval_equalities(const DecisionVector& x, std::vector<double>& h) const;
    virtual void sample_front(int count, std::vector<ObjectiveVector>& points) const;

private:
    std::string name_;
    int dimension_;
    int objectives_;
    int inequalities_;
    int equalities_;
    std::vector<Bounds> bounds_;
    double eq_tolerance_;
};

/// Family of two-objective problems on [0,1]^n sharing f1 = x1 and
/// f2 = 1 - x1 + g(x) with the distance term g(x) = sum_{i>=2} x_i^2.
/// Each member adds one constraint that reshapes the reachable front in a
/// qualitatively different way. Requires n >= 2.
class DeskProblem : public Problem {
public:
    bool has_reference_front() const override { return true; }

protected:
    DeskProblem(std::string name, int dimension, int inequalities, int equalities);

    double distance_term(const DecisionVector& x) const;
    void eval_objectives(const DecisionVector& x, ObjectiveVector& f) const override;
};

/// An infeasible band |f1 + f2 - 1.2| < 0.1 floats strictly above the
/// unconstrained front, so the constrained front is still f1 + f2 = 1 but
/// a feasibility-first search tends to stall on the band's far side.
class DeskBlock : public DeskProblem {
public:
    explicit DeskBlock(int dimension = 30);

protected:
    void eval_inequalities(const DecisionVector& x, std::vector<double>& g) const override;
    void sample_front(int count, std::vector<ObjectiveVector>& points) const override;
};

/// Everything below f1 + f2 = 1.1 is infeasible; the constrained front lies
/// on that boundary, strictly dominated by the unconstrained front.
class DeskBoundary : public DeskProblem {
public:
    explicit DeskBoundary(int dimension = 30);

protected:
    void eval_inequalities(const DecisionVector& x, std::vector<double>& g) const override;
    void sample_front(int count, std::vector<ObjectiveVector>& points) const override;
};

/// The band 0.3 < f1 < 0.6 of the unconstrained front is cut away, leaving
/// a front on f1 + f2 = 1 restricted to f1 in [0, 0.3] or [0.6, 1].
class DeskPartial : public DeskProblem {
public:
    explicit DeskPartial(int dimension = 30);

protected:
    void eval_inequalities(const DecisionVector& x, std::vector<double>& g) const override;
    void sample_front(int count, std::vector<ObjectiveVector>& points) const override;
};

/// Equality-constrained member: x2 = 0.2 pins the distance term to at least
/// 0.04, shifting the front to f2 = 1.04 - f1.
class DeskEquality : public DeskProblem {
public:
    explicit DeskEquality(int dimension = 30);

protected:
    void eval_equalities(const DecisionVector& x, std::vector<double>& h) const override;
    void sample_front(int count, std::vector<ObjectiveVector>& points) const override;
};

using ProblemFactory = std::function<std::unique_ptr<Problem>(int dimension)>;

/// Name -> factory map of every built-in problem, keyed by CLI name.
const std::map<std::string, ProblemFactory>& problem_registry();

/// Instantiates a registered problem. Throws ConfigError for unknown names.
std::unique_ptr<Problem> make_problem(const std::string& name, int dimension = 30);

std::vector<std::string> problem_names();

} // namespace pps
